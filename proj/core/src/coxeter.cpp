#include "pbp/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pbp/error.hpp"

namespace pbp {

  CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<unsigned long>> rows)
      : _n(rows.size()) {
    if (_n == 0) {
      throw InvalidInput("Coxeter matrix must be nonempty");
    }
    for (std::size_t i = 0; i < _n; ++i) {
      if (rows[i].size() != _n) {
        throw InvalidInput("Coxeter matrix must be square");
      }
      for (std::size_t j = 0; j < _n; ++j) {
        unsigned long v = rows[i][j];
        if (i == j && v != 1) {
          throw InvalidInput("Coxeter matrix diagonal must be 1");
        }
        if (i != j && v == 1) {
          throw InvalidInput("off-diagonal Coxeter labels must be >= 2");
        }
        if (v != rows[j][i]) {
          throw InvalidInput("Coxeter matrix must be symmetric");
        }
        _m.push_back(v);
      }
    }
  }

  CoxeterMatrix
  CoxeterMatrix::restrict_to(std::vector<std::size_t> const& vertices) const {
    std::vector<std::vector<unsigned long>> rows;
    for (auto i : vertices) {
      std::vector<unsigned long> row;
      for (auto j : vertices) {
        row.push_back(at(i, j));
      }
      rows.push_back(std::move(row));
    }
    return CoxeterMatrix(std::move(rows));
  }

  SymmetricForm::SymmetricForm(std::size_t n, std::vector<AlgebraicReal> entries)
      : _n(n), _b(std::move(entries)) {
    if (_b.size() != n * n) {
      throw InvalidInput("form entries do not make a square matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!(at(i, j) == at(j, i))) {
          throw InvalidInput("form is not symmetric");
        }
      }
    }
  }

  SymmetricForm::SymmetricForm(QMatrix const& m) : _n(m.rows()) {
    if (m.rows() != m.cols()) {
      throw InvalidInput("form must be square");
    }
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if (m(i, j) != m(j, i)) {
          throw InvalidInput("form is not symmetric");
        }
        _b.emplace_back(m(i, j));
      }
    }
  }

  SymmetricForm tits_form(CoxeterMatrix const& m) {
    std::size_t   n     = m.size();
    unsigned long order = 2;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!m.is_infinite(i, j)) {
          order = std::lcm(order, m.at(i, j));
        }
      }
    }
    auto          field = RealCyclotomicField::make(order);
    SymmetricForm b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          b.at(i, j) = AlgebraicReal(Rational(1));
        } else if (m.is_infinite(i, j)) {
          b.at(i, j) = AlgebraicReal(Rational(-1));
        } else {
          b.at(i, j) = -AlgebraicReal::cos_pi_over(field, m.at(i, j));
        }
      }
    }
    return b;
  }

  std::vector<std::vector<std::size_t>> components(CoxeterMatrix const& m) {
    std::size_t              n = m.size();
    std::vector<std::size_t> label(n, n);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
      if (label[s] != n) {
        continue;
      }
      std::vector<std::size_t> comp{s};
      label[s] = out.size();
      for (std::size_t k = 0; k < comp.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) {
          if (label[j] == n && j != comp[k]
              && (m.is_infinite(comp[k], j) || m.at(comp[k], j) >= 3)) {
            label[j] = out.size();
            comp.push_back(j);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  namespace {
    // Congruence diagonalisation with symmetric pivoting and the hyperbolic
    // pair step when every remaining diagonal entry vanishes.
    template <typename T, typename SignFn>
    Signature diagonalise(std::vector<T> b, std::size_t n, SignFn sign) {
      Signature                s;
      std::vector<std::size_t> active(n);
      std::iota(active.begin(), active.end(), 0);
      auto at = [&](std::size_t i, std::size_t j) -> T& { return b[i * n + j]; };
      auto zero = [&](T const& x) { return sign(x) == 0; };

      while (!active.empty()) {
        std::size_t pivot = n;
        for (auto i : active) {
          if (!zero(at(i, i))) {
            pivot = i;
            break;
          }
        }
        if (pivot != n) {
          (sign(at(pivot, pivot)) > 0 ? s.p : s.q) += 1;
          std::erase(active, pivot);
          T d = at(pivot, pivot);
          for (auto k : active) {
            if (zero(at(k, pivot))) {
              continue;
            }
            T f = at(k, pivot) / d;
            for (auto l : active) {
              at(k, l) = at(k, l) - f * at(pivot, l);
            }
          }
          continue;
        }
        std::size_t pi = n, pj = n;
        for (auto i : active) {
          for (auto j : active) {
            if (i != j && !zero(at(i, j))) {
              pi = i;
              pj = j;
              break;
            }
          }
          if (pi != n) {
            break;
          }
        }
        if (pi == n) {
          s.r += active.size();
          break;
        }
        s.p += 1;
        s.q += 1;
        std::erase(active, pi);
        std::erase(active, pj);
        T c = at(pi, pj);
        std::vector<T> upd;
        for (auto k : active) {
          for (auto l : active) {
            upd.push_back(at(k, l) - (at(k, pi) * at(pj, l) + at(k, pj) * at(pi, l)) / c);
          }
        }
        std::size_t idx = 0;
        for (auto k : active) {
          for (auto l : active) {
            at(k, l) = upd[idx++];
          }
        }
      }
      return s;
    }
  }  // namespace

  Signature signature(SymmetricForm const& f) {
    std::vector<AlgebraicReal> b;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        b.push_back(f.at(i, j));
      }
    }
    return diagonalise(std::move(b), f.size(),
                       [](AlgebraicReal const& x) { return x.sign(); });
  }

  Signature signature(QMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw InvalidInput("form must be square");
    }
    std::vector<Rational> b;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != m(j, i)) {
          throw InvalidInput("form is not symmetric");
        }
        b.push_back(m(i, j));
      }
    }
    return diagonalise(std::move(b), m.rows(),
                       [](Rational const& x) { return sgn(x); });
  }

  std::string to_string(CoxeterType t) {
    switch (t) {
      case CoxeterType::finite: return "Finite";
      case CoxeterType::affine: return "Affine";
      case CoxeterType::indefinite: return "Indefinite";
    }
    return "Indefinite";
  }

  std::vector<ComponentReport> classify(CoxeterMatrix const& m) {
    std::vector<ComponentReport> out;
    for (auto const& comp : components(m)) {
      ComponentReport rep;
      rep.vertices  = comp;
      rep.signature = signature(tits_form(m.restrict_to(comp)));
      auto const& s = rep.signature;
      if (s.q >= 1) {
        rep.type = CoxeterType::indefinite;
      } else if (s.r >= 1) {
        rep.type = CoxeterType::affine;
        if (s.r != 1) {
          throw VerificationFailure(
              "irreducible affine component with kernel dimension "
              + std::to_string(s.r));
        }
      } else {
        rep.type = CoxeterType::finite;
      }
      out.push_back(std::move(rep));
    }
    return out;
  }

  namespace {
    nlohmann::ordered_json vertices_json(std::vector<std::size_t> const& v) {
      auto j = nlohmann::ordered_json::array();
      for (auto x : v) {
        j.push_back(x + 1);
      }
      return j;
    }
  }  // namespace

  CoxeterVerdict coxeter_presentable(CoxeterMatrix const& m) {
    CoxeterVerdict out;
    out.components = classify(m);
    std::vector<ComponentReport const*> infinite;
    for (auto const& c : out.components) {
      if (c.type != CoxeterType::finite) {
        infinite.push_back(&c);
      }
    }
    Verdict& v = out.verdict;
    if (infinite.empty()) {
      v.answer = Answer::not_applicable;
      v.trace.push_back(
          {"coxeter-finite",
           "the Tits form is positive definite on every component, so W is "
           "finite; presentability by a product concerns infinite groups"});
      return out;
    }
    if (infinite.size() >= 2) {
      v.answer      = Answer::yes;
      v.certificate = {{"type", "direct-product"},
                       {"factors",
                        {vertices_json(infinite[0]->vertices),
                         vertices_json(infinite[1]->vertices)}}};
      v.trace.push_back(
          {"coxeter-product",
           "W is the direct product of the Coxeter groups of its components "
           "and at least two of them are infinite"});
      return out;
    }
    ComponentReport const& c = *infinite.front();
    if (infinite.size() != out.components.size()) {
      v.trace.push_back(
          {"finite-index",
           "the remaining components generate finite groups, so the infinite "
           "component has finite index in W and decides presentability"});
    }
    if (c.type == CoxeterType::affine) {
      v.answer      = Answer::yes;
      v.certificate = {{"type", "virtually-abelian"},
                       {"component", vertices_json(c.vertices)},
                       {"rank", c.vertices.size() - 1}};
      v.trace.push_back(
          {"coxeter-affine",
           "an irreducible affine Coxeter group on l generators is virtually "
           "Z^(l-1), a group with infinite centre, hence presentable by a "
           "product"});
      return out;
    }
    v.answer = Answer::no;
    v.trace.push_back(
        {"coxeter-indefinite",
         "an irreducible Coxeter group that is neither finite nor affine is "
         "not presentable by a product (its Tits form has signature ("
             + std::to_string(c.signature.p) + "," + std::to_string(c.signature.q)
             + "," + std::to_string(c.signature.r) + "))"});
    return out;
  }

  LieAlgebra of_algebra(Signature const& s) {
    if (s.p + s.q == 0) {
      throw UnsupportedParams("of(B) needs p + q >= 1");
    }
    return lie_catalogue::vr_semidirect(s.p, s.q, s.r);
  }

  namespace coxeter_catalogue {

    namespace {
      std::vector<std::vector<unsigned long>> blank(std::size_t n) {
        std::vector<std::vector<unsigned long>> m(
            n, std::vector<unsigned long>(n, 2));
        for (std::size_t i = 0; i < n; ++i) {
          m[i][i] = 1;
        }
        return m;
      }

      void join(std::vector<std::vector<unsigned long>>& m,
                std::size_t                              i,
                std::size_t                              j,
                unsigned long                            label) {
        m[i][j] = m[j][i] = label;
      }

      std::vector<unsigned long> repeat(std::size_t k, unsigned long label) {
        return std::vector<unsigned long>(k, label);
      }
    }  // namespace

    CoxeterMatrix path(std::vector<unsigned long> const& labels) {
      auto m = blank(labels.size() + 1);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        join(m, i, i + 1, labels[i]);
      }
      return CoxeterMatrix(std::move(m));
    }

    CoxeterMatrix star(std::vector<std::size_t> const& arms) {
      std::size_t n = 1;
      for (auto a : arms) {
        n += a;
      }
      auto        m    = blank(n);
      std::size_t next = 1;
      for (auto a : arms) {
        std::size_t prev = 0;
        for (std::size_t k = 0; k < a; ++k) {
          join(m, prev, next, 3);
          prev = next++;
        }
      }
      return CoxeterMatrix(std::move(m));
    }

    CoxeterMatrix triangle(unsigned long a, unsigned long b, unsigned long c) {
      auto m = blank(3);
      join(m, 0, 1, a);
      join(m, 1, 2, b);
      join(m, 0, 2, c);
      return CoxeterMatrix(std::move(m));
    }

    namespace {
      unsigned long parse_label(std::string const& s) {
        if (s == "inf") {
          return CoxeterMatrix::infinity;
        }
        if (s.empty()
            || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
                 return std::isdigit(c);
               })) {
          throw UnsupportedParams("bad Coxeter label '" + s + "'");
        }
        return std::stoul(s);
      }

      std::vector<unsigned long> parse_args(std::string const& inside) {
        std::vector<unsigned long> out;
        std::size_t                start = 0;
        while (start <= inside.size()) {
          auto comma = inside.find(',', start);
          if (comma == std::string::npos) {
            comma = inside.size();
          }
          out.push_back(parse_label(inside.substr(start, comma - start)));
          start = comma + 1;
        }
        return out;
      }
    }  // namespace

    CoxeterMatrix by_name(std::string const& name) {
      auto fail = [&]() -> CoxeterMatrix {
        throw UnsupportedParams("unknown Coxeter type '" + name + "'");
      };
      if (name.rfind("triangle(", 0) == 0 && name.back() == ')') {
        auto a = parse_args(name.substr(9, name.size() - 10));
        if (a.size() != 3) {
          return fail();
        }
        return triangle(a[0], a[1], a[2]);
      }
      if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
        unsigned long m = parse_label(name.substr(3, name.size() - 4));
        if (m != CoxeterMatrix::infinity && m < 2) {
          return fail();
        }
        return path({m});
      }
      bool        affine = !name.empty() && name[0] == '~';
      std::string body   = affine ? name.substr(1) : name;
      if (body.size() < 2 || !std::isupper(static_cast<unsigned char>(body[0]))) {
        return fail();
      }
      char          type = body[0];
      unsigned long rank = parse_label(body.substr(1));
      if (rank == 0) {
        return fail();
      }
      if (!affine) {
        switch (type) {
          case 'A': return rank == 1 ? CoxeterMatrix(std::vector<std::vector<unsigned long>>{{1}}) : path(repeat(rank - 1, 3));
          case 'B':
            if (rank >= 2) {
              auto l = repeat(rank - 1, 3);
              l[0]   = 4;
              return path(l);
            }
            break;
          case 'D':
            if (rank >= 4) {
              return star({1, 1, rank - 3});
            }
            break;
          case 'E':
            if (rank >= 6 && rank <= 8) {
              return star({1, 2, rank - 4});
            }
            break;
          case 'F':
            if (rank == 4) {
              return path({3, 4, 3});
            }
            break;
          case 'G':
            if (rank == 2) {
              return path({6});
            }
            break;
          case 'H':
            if (rank == 3) {
              return path({5, 3});
            }
            if (rank == 4) {
              return path({5, 3, 3});
            }
            break;
          default: break;
        }
        return fail();
      }
      switch (type) {
        case 'A':
          if (rank == 1) {
            return path({CoxeterMatrix::infinity});
          } else {
            auto m = blank(rank + 1);
            for (std::size_t i = 0; i <= rank; ++i) {
              join(m, i, (i + 1) % (rank + 1), 3);
            }
            return CoxeterMatrix(std::move(m));
          }
        case 'C':
          if (rank >= 2) {
            auto l   = repeat(rank, 3);
            l.front() = 4;
            l.back()  = 4;
            return path(l);
          }
          break;
        case 'G':
          if (rank == 2) {
            return path({3, 6});
          }
          break;
        case 'F':
          if (rank == 4) {
            return path({3, 3, 4, 3});
          }
          break;
        case 'E':
          if (rank == 6) {
            return star({2, 2, 2});
          }
          if (rank == 7) {
            return star({1, 3, 3});
          }
          if (rank == 8) {
            return star({1, 2, 5});
          }
          break;
        default: break;
      }
      return fail();
    }

  }  // namespace coxeter_catalogue

}  // namespace pbp
