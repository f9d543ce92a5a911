#include "pbp/coset.hpp"

#include <deque>
#include <map>
#include <string>

#include "pbp/error.hpp"

namespace pbp {

  Permutation compose(Permutation const& a, Permutation const& b) {
    Permutation c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      c[x] = b[a[x]];
    }
    return c;
  }

  namespace {
    Permutation identity_permutation(std::size_t n) {
      Permutation p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = i;
      }
      return p;
    }

    Permutation invert(Permutation const& p) {
      Permutation q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[p[i]] = i;
      }
      return q;
    }

    void check_permutation(Permutation const& p, std::size_t degree) {
      if (p.size() != degree) {
        throw InvalidInput("permutation image has wrong degree");
      }
      std::vector<bool> hit(degree, false);
      for (auto x : p) {
        if (x >= degree || hit[x]) {
          throw InvalidInput("generator image is not a permutation");
        }
        hit[x] = true;
      }
    }
  }  // namespace

  Permutation image(PermutationTarget const& target, Word const& w) {
    Permutation p = identity_permutation(target.degree);
    for (auto const& l : w) {
      Permutation const& g = target.images.at(l.gen);
      p = compose(p, l.sign > 0 ? g : invert(g));
    }
    return p;
  }

  bool is_identity(Permutation const& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::size_t CosetTable::apply(std::size_t coset, Letter l) const {
    auto const& row = action[l.gen];
    if (l.sign > 0) {
      return row[coset];
    }
    for (std::size_t c = 0; c < cosets; ++c) {
      if (row[c] == coset) {
        return c;
      }
    }
    throw InvalidInput("coset table row is not a bijection");
  }

  std::size_t CosetTable::apply(std::size_t coset, Word const& w) const {
    for (auto const& l : w) {
      coset = apply(coset, l);
    }
    return coset;
  }

  void validate(FinitePresentation const& p, CosetTable const& t) {
    if (t.cosets == 0) {
      throw InvalidInput("coset table has no cosets");
    }
    if (t.action.size() != p.generator_count()) {
      throw InvalidInput("coset table has wrong number of generator rows");
    }
    for (auto const& row : t.action) {
      check_permutation(row, t.cosets);
    }
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
      for (std::size_t c = 0; c < t.cosets; ++c) {
        if (t.apply(c, p.relators()[r]) != c) {
          throw InvalidInput("relator " + std::to_string(r)
                             + " does not fix coset " + std::to_string(c));
        }
      }
    }
    std::vector<bool>       seen(t.cosets, false);
    std::deque<std::size_t> queue{0};
    seen[0]           = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < t.action.size(); ++g) {
        for (int s : {1, -1}) {
          std::size_t d = t.apply(c, Letter{g, s});
          if (!seen[d]) {
            seen[d] = true;
            ++count;
            queue.push_back(d);
          }
        }
      }
    }
    if (count != t.cosets) {
      throw InvalidInput("coset table action is not transitive");
    }
  }

  CosetTable coset_enumerate(FinitePresentation const& p,
                             PermutationTarget const&  target,
                             std::size_t               cap) {
    if (target.images.size() != p.generator_count()) {
      throw InvalidInput("target must give one image per generator");
    }
    for (auto const& g : target.images) {
      check_permutation(g, target.degree);
    }
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
      if (!is_identity(image(target, p.relators()[r]))) {
        throw RelatorNotKilled("relator "
                               + to_string(p.relators()[r], p.names())
                               + " has non-identity image");
      }
    }
    std::vector<Permutation> inverses;
    for (auto const& g : target.images) {
      inverses.push_back(invert(g));
    }

    std::map<Permutation, std::size_t> index;
    std::vector<Permutation>           elements;
    elements.push_back(identity_permutation(target.degree));
    index.emplace(elements.back(), 0);
    CosetTable t;
    t.action.assign(p.generator_count(), {});
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t g = 0; g < p.generator_count(); ++g) {
        for (int s : {1, -1}) {
          Permutation next =
              compose(elements[i], s > 0 ? target.images[g] : inverses[g]);
          auto [it, inserted] = index.emplace(next, elements.size());
          if (inserted) {
            if (elements.size() >= cap) {
              throw BoundExceeded("coset enumeration exceeded "
                                  + std::to_string(cap) + " cosets");
            }
            elements.push_back(std::move(next));
          }
          if (s > 0) {
            t.action[g].push_back(it->second);
          }
        }
      }
    }
    t.cosets = elements.size();
    return t;
  }

  SchreierTransversal schreier_transversal(CosetTable const& t) {
    SchreierTransversal st;
    std::size_t         a = t.action.size();
    st.representative.assign(t.cosets, {});
    st.tree.assign(a, std::vector<bool>(t.cosets, false));
    std::vector<bool>       seen(t.cosets, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < a; ++g) {
        for (int s : {1, -1}) {
          std::size_t d = t.apply(c, Letter{g, s});
          if (seen[d]) {
            continue;
          }
          seen[d]              = true;
          st.representative[d] = st.representative[c];
          st.representative[d].push_back(Letter{g, s});
          if (s > 0) {
            st.tree[g][c] = true;
          } else {
            st.tree[g][d] = true;
          }
          queue.push_back(d);
        }
      }
    }
    for (std::size_t c = 0; c < t.cosets; ++c) {
      if (!seen[c]) {
        throw InvalidInput("coset table action is not transitive");
      }
      for (std::size_t g = 0; g < a; ++g) {
        if (!st.tree[g][c]) {
          st.generators.emplace_back(c, g);
        }
      }
    }
    return st;
  }

  std::vector<Word> schreier_generators(CosetTable const& t) {
    SchreierTransversal st = schreier_transversal(t);
    std::vector<Word>   gens;
    for (auto [c, g] : st.generators) {
      Word w = st.representative[c];
      w.push_back(Letter{g, 1});
      gens.push_back(
          multiply(w, inverse(st.representative[t.action[g][c]])));
    }
    return gens;
  }

}  // namespace pbp
