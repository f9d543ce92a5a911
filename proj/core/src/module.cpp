#include "pbp/module.hpp"

#include <algorithm>

#include "pbp/error.hpp"
#include "pbp/polynomial.hpp"

namespace pbp {

  Subspace spin(Module const& m, std::vector<QVector> const& seeds) {
    Subspace             s(m.dim, seeds);
    std::vector<QVector> queue = s.basis();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& a : m.actions) {
        QVector w = a * queue[i];
        if (!s.contains(w)) {
          std::vector<QVector> vecs = s.basis();
          vecs.push_back(w);
          s = Subspace(m.dim, vecs);
          queue.push_back(std::move(w));
        }
      }
    }
    return s;
  }

  bool is_submodule(Module const& m, Subspace const& s) {
    for (auto const& v : s.basis()) {
      for (auto const& a : m.actions) {
        if (!s.contains(a * v)) {
          return false;
        }
      }
    }
    return true;
  }

  Module submodule_action(Module const& m, Subspace const& s) {
    Module out{s.dim(), {}};
    for (auto const& a : m.actions) {
      QMatrix x(s.dim(), s.dim());
      for (std::size_t j = 0; j < s.dim(); ++j) {
        QVector c = s.coordinates(a * s.basis()[j]);
        for (std::size_t i = 0; i < s.dim(); ++i) {
          x(i, j) = c[i];
        }
      }
      out.actions.push_back(std::move(x));
    }
    return out;
  }

  namespace {
    std::vector<std::size_t> free_positions(Subspace const& s) {
      std::vector<std::size_t> out;
      auto const&              piv = s.pivots();
      for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
          out.push_back(c);
        }
      }
      return out;
    }

    QVector reduce(Subspace const& s, QVector v) {
      for (std::size_t i = 0; i < s.dim(); ++i) {
        Rational c = v[s.pivots()[i]];
        if (c != 0) {
          for (std::size_t j = 0; j < v.size(); ++j) {
            v[j] -= c * s.basis()[i][j];
          }
        }
      }
      return v;
    }

    QVector column_of(QMatrix const& a, std::size_t j) {
      return a.column(j);
    }
  }  // namespace

  Module quotient_action(Module const& m, Subspace const& s) {
    auto   free = free_positions(s);
    Module out{free.size(), {}};
    for (auto const& a : m.actions) {
      QMatrix x(free.size(), free.size());
      for (std::size_t j = 0; j < free.size(); ++j) {
        QVector r = reduce(s, column_of(a, free[j]));
        for (std::size_t i = 0; i < free.size(); ++i) {
          x(i, j) = r[free[i]];
        }
      }
      out.actions.push_back(std::move(x));
    }
    return out;
  }

  Subspace preimage(Subspace const& s, Subspace const& q) {
    auto                 free = free_positions(s);
    std::vector<QVector> vecs = s.basis();
    for (auto const& b : q.basis()) {
      QVector v(s.ambient_dim());
      for (std::size_t i = 0; i < free.size(); ++i) {
        v[free[i]] = b[i];
      }
      vecs.push_back(std::move(v));
    }
    return Subspace(s.ambient_dim(), vecs);
  }

  Subspace embed(Subspace const& s, Subspace const& inner) {
    std::vector<QVector> vecs;
    for (auto const& b : inner.basis()) {
      QVector v(s.ambient_dim());
      for (std::size_t k = 0; k < s.dim(); ++k) {
        if (b[k] != 0) {
          v = add(v, scale(b[k], s.basis()[k]));
        }
      }
      vecs.push_back(std::move(v));
    }
    return Subspace(s.ambient_dim(), vecs);
  }

  namespace {
    QMatrix random_element(Module const& m, std::mt19937_64& rng) {
      std::uniform_int_distribution<int>         coeff(-3, 3);
      std::uniform_int_distribution<std::size_t> pick(0, m.actions.size() - 1);
      QMatrix theta(m.dim, m.dim);
      for (auto const& a : m.actions) {
        theta = theta + Rational(coeff(rng)) * a;
      }
      QMatrix w2 = m.actions[pick(rng)] * m.actions[pick(rng)];
      QMatrix w3 = w2 * m.actions[pick(rng)];
      theta      = theta + Rational(coeff(rng)) * w2 + Rational(coeff(rng)) * w3;
      return theta;
    }

    Module transposed(Module const& m) {
      Module t{m.dim, {}};
      for (auto const& a : m.actions) {
        t.actions.push_back(a.transpose());
      }
      return t;
    }
  }  // namespace

  Split split(Module const& m, std::mt19937_64& rng, MeatAxeOptions const& opts) {
    if (m.dim == 0) {
      throw InvalidInput("cannot split the zero module");
    }
    if (m.dim == 1) {
      return {Split::Kind::irreducible, {}};
    }
    if (m.actions.empty()) {
      QVector e(m.dim);
      e[0] = 1;
      return {Split::Kind::proper, Subspace(m.dim, {e})};
    }
    for (std::size_t attempt = 0; attempt < opts.attempts; ++attempt) {
      QMatrix theta = random_element(m, rng);
      QPoly   chi   = characteristic_polynomial(theta);
      for (auto const& f : irreducible_factors(chi)) {
        QMatrix ft     = evaluate(f, theta);
        auto    kernel = nullspace(ft);
        Subspace u     = spin(m, {kernel.front()});
        if (!u.is_whole()) {
          return {Split::Kind::proper, u};
        }
        if (kernel.size() != static_cast<std::size_t>(f.degree())) {
          continue;
        }
        // Norton: every nonzero vector of the kernel generates M; M is
        // irreducible iff one vector of the transposed kernel generates M*.
        auto     dual_kernel = nullspace(ft.transpose());
        Subspace w           = spin(transposed(m), {dual_kernel.front()});
        if (w.is_whole()) {
          return {Split::Kind::irreducible, {}};
        }
        QMatrix rows = QMatrix::from_rows(w.basis(), m.dim);
        return {Split::Kind::proper, Subspace(m.dim, nullspace(rows))};
      }
    }
    return {Split::Kind::unknown, {}};
  }

  std::optional<Subspace> irreducible_submodule(Module const&         m,
                                                std::mt19937_64&      rng,
                                                MeatAxeOptions const& opts) {
    Subspace s = Subspace::whole(m.dim);
    while (true) {
      Split sp = split(submodule_action(m, s), rng, opts);
      switch (sp.kind) {
        case Split::Kind::irreducible: return s;
        case Split::Kind::unknown: return std::nullopt;
        case Split::Kind::proper: s = embed(s, sp.submodule); break;
      }
    }
  }

  std::vector<QMatrix> homomorphisms(Module const& t, Module const& m) {
    std::size_t tm = t.dim, mm = m.dim;
    if (t.actions.size() != m.actions.size()) {
      throw InvalidInput("modules over different generating sets");
    }
    std::size_t unknowns = mm * tm;
    QMatrix     eqs(t.actions.size() * unknowns, unknowns);
    for (std::size_t g = 0; g < t.actions.size(); ++g) {
      QMatrix const& ma = m.actions[g];
      QMatrix const& ta = t.actions[g];
      for (std::size_t i = 0; i < mm; ++i) {
        for (std::size_t j = 0; j < tm; ++j) {
          std::size_t row = g * unknowns + i * tm + j;
          for (std::size_t k = 0; k < mm; ++k) {
            if (ma(i, k) != 0) {
              eqs(row, k * tm + j) += ma(i, k);
            }
          }
          for (std::size_t k = 0; k < tm; ++k) {
            if (ta(k, j) != 0) {
              eqs(row, i * tm + k) -= ta(k, j);
            }
          }
        }
      }
    }
    std::vector<QMatrix> out;
    for (auto const& x : nullspace(eqs)) {
      QMatrix h(mm, tm);
      for (std::size_t i = 0; i < mm; ++i) {
        for (std::size_t j = 0; j < tm; ++j) {
          h(i, j) = x[i * tm + j];
        }
      }
      out.push_back(std::move(h));
    }
    return out;
  }

  bool isomorphic(Module const& a, Module const& b) {
    return a.dim == b.dim && !homomorphisms(a, b).empty();
  }

  std::optional<std::vector<Module>> composition_factors(
      Module const& m, std::mt19937_64& rng, MeatAxeOptions const& opts) {
    std::vector<Module> out;
    Module              cur = m;
    while (cur.dim > 0) {
      auto s = irreducible_submodule(cur, rng, opts);
      if (!s) {
        return std::nullopt;
      }
      out.push_back(submodule_action(cur, *s));
      cur = quotient_action(cur, *s);
    }
    return out;
  }

  namespace {
    Subspace column_space(QMatrix const& x) {
      std::vector<QVector> cols;
      for (std::size_t j = 0; j < x.cols(); ++j) {
        cols.push_back(x.column(j));
      }
      return Subspace(x.rows(), cols);
    }
  }  // namespace

  std::optional<std::vector<SocleComponent>> socle(
      Module const& m, std::mt19937_64& rng, MeatAxeOptions const& opts) {
    auto factors = composition_factors(m, rng, opts);
    if (!factors) {
      return std::nullopt;
    }
    std::vector<Module>         classes;
    std::vector<SocleComponent> out;
    for (auto const& t : *factors) {
      bool seen = std::any_of(classes.begin(), classes.end(), [&](auto& c) {
        return isomorphic(c, t);
      });
      if (seen) {
        continue;
      }
      classes.push_back(t);
      auto homs = homomorphisms(t, m);
      if (homs.empty()) {
        continue;
      }
      SocleComponent comp;
      comp.simple = t;
      std::vector<QVector> cols;
      for (auto const& h : homs) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
          cols.push_back(h.column(j));
        }
      }
      comp.trace        = Subspace(m.dim, cols);
      comp.multiplicity = comp.trace.dim() / t.dim;
      if (comp.multiplicity * t.dim != comp.trace.dim()) {
        throw VerificationFailure("isotypic component has fractional multiplicity");
      }
      if (comp.multiplicity >= 2) {
        Subspace first = column_space(homs.front());
        for (auto const& h : homs) {
          Subspace other = column_space(h);
          if (other != first) {
            comp.witness = std::make_pair(first, other);
            break;
          }
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

}  // namespace pbp
