#include "pbp/lie.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pbp/error.hpp"

namespace pbp {

  LieAlgebra::LieAlgebra(std::vector<std::string>          labels,
                         std::vector<std::vector<QVector>> constants)
      : _labels(std::move(labels)), _c(std::move(constants)) {
    std::size_t n = _labels.size();
    if (_c.size() != n) {
      throw InvalidInput("structure constants have wrong shape");
    }
    for (auto const& row : _c) {
      if (row.size() != n) {
        throw InvalidInput("structure constants have wrong shape");
      }
      for (auto const& v : row) {
        if (v.size() != n) {
          throw InvalidInput("structure constants have wrong shape");
        }
      }
    }
  }

  LieAlgebra LieAlgebra::from_brackets(std::vector<std::string>    labels,
                                       std::vector<Bracket> const& brackets) {
    std::size_t n = labels.size();
    std::vector<std::vector<QVector>> c(n,
                                        std::vector<QVector>(n, QVector(n)));
    std::vector<std::vector<bool>> set(n, std::vector<bool>(n, false));
    for (auto const& b : brackets) {
      if (b.x >= n || b.y >= n || b.value.size() != n) {
        throw InvalidInput("bracket refers to an unknown basis element");
      }
      QVector neg = scale(-1, b.value);
      if ((set[b.x][b.y] && c[b.x][b.y] != b.value)
          || (set[b.y][b.x] && c[b.y][b.x] != neg)) {
        throw InvalidAlgebra("conflicting brackets for [" + labels[b.x] + ", "
                             + labels[b.y] + "]");
      }
      if (b.x == b.y && !is_zero(b.value)) {
        throw InvalidAlgebra("nonzero self-bracket of " + labels[b.x]);
      }
      c[b.x][b.y]   = b.value;
      c[b.y][b.x]   = neg;
      set[b.x][b.y] = set[b.y][b.x] = true;
    }
    return LieAlgebra(std::move(labels), std::move(c));
  }

  LieAlgebra LieAlgebra::from_matrices(std::vector<std::string>    labels,
                                       std::vector<QMatrix> const& basis) {
    std::size_t d = basis.size();
    if (d == 0 || labels.size() != d) {
      throw InvalidInput("matrix basis and labels disagree");
    }
    std::size_t n       = basis[0].rows();
    std::size_t entries = n * n;
    auto flatten = [&](QMatrix const& m) {
      QVector v(entries);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          v[i * n + j] = m(i, j);
        }
      }
      return v;
    };
    std::vector<QVector> flat;
    for (auto const& m : basis) {
      flat.push_back(flatten(m));
    }
    // Choose d entry positions on which the basis is independent and invert
    // the resulting square system once.
    QMatrix rows     = QMatrix::from_rows(flat, entries);
    auto    pivots   = rref(rows);
    if (pivots.size() != d) {
      throw InvalidInput("matrix basis is linearly dependent");
    }
    QMatrix aug(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        aug(i, k) = flat[k][pivots[i]];
      }
      aug(i, d + i) = 1;
    }
    rref(aug);
    auto solve = [&](QVector const& v) {
      QVector x(d);
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
          x[k] += aug(k, d + i) * v[pivots[i]];
        }
      }
      QVector back(entries);
      for (std::size_t k = 0; k < d; ++k) {
        if (x[k] != 0) {
          back = add(back, scale(x[k], flat[k]));
        }
      }
      if (back != v) {
        throw InvalidAlgebra("matrix span is not closed under commutators");
      }
      return x;
    };
    std::vector<std::vector<QVector>> c(d, std::vector<QVector>(d, QVector(d)));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        QMatrix comm = basis[i] * basis[j] - basis[j] * basis[i];
        c[i][j]      = solve(flatten(comm));
        c[j][i]      = scale(-1, c[i][j]);
      }
    }
    return LieAlgebra(std::move(labels), std::move(c));
  }

  QVector LieAlgebra::bracket(QVector const& x, QVector const& y) const {
    QVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) {
          continue;
        }
        Rational f = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) {
          if (_c[i][j][k] != 0) {
            out[k] += f * _c[i][j][k];
          }
        }
      }
    }
    return out;
  }

  QMatrix LieAlgebra::ad(std::size_t i) const {
    QMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      for (std::size_t k = 0; k < dim(); ++k) {
        m(k, j) = _c[i][j][k];
      }
    }
    return m;
  }

  std::vector<QMatrix> LieAlgebra::adjoint_actions() const {
    std::vector<QMatrix> out;
    for (std::size_t i = 0; i < dim(); ++i) {
      out.push_back(ad(i));
    }
    return out;
  }

  std::string ValidationReport::describe(LieAlgebra const& l) const {
    auto name = [&](std::size_t x) {
      return x < l.dim() ? l.labels()[x] : std::to_string(x);
    };
    std::ostringstream out;
    switch (kind) {
      case Kind::ok: out << "ok"; break;
      case Kind::antisymmetry:
        out << "antisymmetry violated: c[" << name(i) << "][" << name(j)
            << "][" << name(k) << "] != -c[" << name(j) << "][" << name(i)
            << "][" << name(k) << "]";
        break;
      case Kind::jacobi:
        out << "Jacobi identity fails on (" << name(i) << ", " << name(j)
            << ", " << name(k) << ")";
        break;
    }
    return out.str();
  }

  ValidationReport validate(LieAlgebra const& l) {
    std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (l.c(i, j, k) != -l.c(j, i, k)) {
            return {ValidationReport::Kind::antisymmetry, i, j, k};
          }
        }
      }
    }
    auto e = [n](std::size_t i) {
      QVector v(n);
      v[i] = 1;
      return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          QVector s = add(add(l.bracket(e(i), l.bracket(j, k)),
                              l.bracket(e(j), l.bracket(k, i))),
                          l.bracket(e(k), l.bracket(i, j)));
          if (!is_zero(s)) {
            return {ValidationReport::Kind::jacobi, i, j, k};
          }
        }
      }
    }
    return {};
  }

  Subspace bracket(LieAlgebra const& l, Subspace const& a, Subspace const& b) {
    std::vector<QVector> vecs;
    for (auto const& x : a.basis()) {
      for (auto const& y : b.basis()) {
        QVector v = l.bracket(x, y);
        if (!is_zero(v)) {
          vecs.push_back(std::move(v));
        }
      }
    }
    return Subspace(l.dim(), vecs);
  }

  bool is_subalgebra(LieAlgebra const& l, Subspace const& s) {
    return s.contains(bracket(l, s, s));
  }

  bool is_ideal(LieAlgebra const& l, Subspace const& s) {
    return s.contains(bracket(l, whole(l), s));
  }

  Subspace ideal_closure(LieAlgebra const& l, Subspace const& s) {
    Subspace cur = s;
    Subspace all = whole(l);
    while (true) {
      Subspace next = cur + bracket(l, all, cur);
      if (next.dim() == cur.dim()) {
        return cur;
      }
      cur = std::move(next);
    }
  }

  Subspace centralizer(LieAlgebra const& l, Subspace const& a) {
    std::size_t n = l.dim();
    if (a.is_zero()) {
      return whole(l);
    }
    QMatrix eqs(a.dim() * n, n);
    for (std::size_t b = 0; b < a.dim(); ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        QVector ei(n);
        ei[i]     = 1;
        QVector v = l.bracket(ei, a.basis()[b]);
        for (std::size_t k = 0; k < n; ++k) {
          eqs(b * n + k, i) = v[k];
        }
      }
    }
    return Subspace(n, nullspace(eqs));
  }

  Subspace centre(LieAlgebra const& l) {
    return centralizer(l, whole(l));
  }

  Subspace whole(LieAlgebra const& l) {
    return Subspace::whole(l.dim());
  }

  Subspace span_of(LieAlgebra const& l, std::vector<std::string> const& labels) {
    std::vector<QVector> vecs;
    for (auto const& name : labels) {
      auto it = std::find(l.labels().begin(), l.labels().end(), name);
      if (it == l.labels().end()) {
        throw InvalidInput("unknown basis element '" + name + "'");
      }
      QVector v(l.dim());
      v[static_cast<std::size_t>(it - l.labels().begin())] = 1;
      vecs.push_back(std::move(v));
    }
    return Subspace(l.dim(), vecs);
  }

  CertificateCheck verify_product_certificate(LieAlgebra const&     l,
                                              LieCertificate const& cert) {
    auto const& [g1, g2] = cert;
    if (g1.ambient_dim() != l.dim() || g2.ambient_dim() != l.dim()) {
      return {false, "subspace ambient dimension differs from the algebra"};
    }
    if (g1.is_zero() || g2.is_zero()) {
      return {false, "a factor is zero"};
    }
    if (!is_subalgebra(l, g1)) {
      return {false, "g1 is not a subalgebra"};
    }
    if (!is_subalgebra(l, g2)) {
      return {false, "g2 is not a subalgebra"};
    }
    if (!bracket(l, g1, g2).is_zero()) {
      return {false, "[g1, g2] is nonzero"};
    }
    Subspace sum = g1 + g2;
    if (!sum.is_whole()) {
      return {false,
              "sum has dimension " + std::to_string(sum.dim()) + " < "
                  + std::to_string(l.dim())};
    }
    if (!is_ideal(l, g1) || !is_ideal(l, g2)) {
      return {false, "factors are not ideals although they commute and span"};
    }
    return {true, ""};
  }

  LieAlgebra direct_sum(LieAlgebra const& a, LieAlgebra const& b) {
    std::size_t              n = a.dim() + b.dim();
    std::vector<std::string> labels;
    bool clash = std::any_of(a.labels().begin(), a.labels().end(), [&](auto& x) {
      return std::find(b.labels().begin(), b.labels().end(), x)
             != b.labels().end();
    });
    for (auto const& x : a.labels()) {
      labels.push_back(clash ? x + "_1" : x);
    }
    for (auto const& x : b.labels()) {
      labels.push_back(clash ? x + "_2" : x);
    }
    std::vector<std::vector<QVector>> c(n, std::vector<QVector>(n, QVector(n)));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
          c[i][j][k] = a.c(i, j, k);
        }
      }
    }
    std::size_t o = a.dim();
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t j = 0; j < b.dim(); ++j) {
        for (std::size_t k = 0; k < b.dim(); ++k) {
          c[o + i][o + j][o + k] = b.c(i, j, k);
        }
      }
    }
    return LieAlgebra(std::move(labels), std::move(c));
  }

  namespace lie_catalogue {

    namespace {
      QVector vec(std::size_t n, std::vector<std::pair<std::size_t, int>> e) {
        QVector v(n);
        for (auto [i, c] : e) {
          v[i] = c;
        }
        return v;
      }
    }  // namespace

    LieAlgebra af() {
      // e = 0, g = 1
      return LieAlgebra::from_brackets({"e", "g"}, {{1, 0, vec(2, {{0, 1}})}});
    }

    LieAlgebra sol() {
      // e = 0, f = 1, g = 2
      return LieAlgebra::from_brackets(
          {"e", "f", "g"},
          {{2, 0, vec(3, {{0, 1}})}, {2, 1, vec(3, {{1, -1}})}});
    }

    LieAlgebra sl2() {
      // e = 0, f = 1, h = 2
      return LieAlgebra::from_brackets({"e", "f", "h"},
                                       {{2, 0, vec(3, {{0, 2}})},
                                        {2, 1, vec(3, {{1, -2}})},
                                        {0, 1, vec(3, {{2, 1}})}});
    }

    LieAlgebra heisenberg() {
      return LieAlgebra::from_brackets({"x", "y", "z"},
                                       {{0, 1, vec(3, {{2, 1}})}});
    }

    LieAlgebra abelian(std::size_t n) {
      if (n == 0) {
        throw UnsupportedParams("abelian algebra needs positive dimension");
      }
      std::vector<std::string> labels;
      for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back("e" + std::to_string(i));
      }
      return LieAlgebra::from_brackets(std::move(labels), {});
    }

    LieAlgebra vr_semidirect(std::size_t p, std::size_t q, std::size_t r) {
      std::size_t n   = p + q;
      std::size_t dim = n * (n - 1) / 2 + n * r;
      if (n == 0 || dim == 0) {
        throw UnsupportedParams("vr_semidirect(" + std::to_string(p) + ","
                                + std::to_string(q) + "," + std::to_string(r)
                                + ") has dimension zero");
      }
      std::size_t              size = n + r;
      std::vector<QMatrix>     basis;
      std::vector<std::string> labels;
      auto j = [p](std::size_t i) { return i < p ? 1 : -1; };
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          QMatrix m(size, size);
          m(a, b) = j(a);
          m(b, a) = -j(b);
          basis.push_back(std::move(m));
          labels.push_back("x" + std::to_string(a + 1) + std::to_string(b + 1));
        }
      }
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
          QMatrix m(size, size);
          m(n + k, a) = 1;
          basis.push_back(std::move(m));
          labels.push_back("v" + std::to_string(k + 1) + "_"
                           + std::to_string(a + 1));
        }
      }
      return LieAlgebra::from_matrices(std::move(labels), basis);
    }

    LieAlgebra so(std::size_t p, std::size_t q) {
      if (p + q < 2) {
        throw UnsupportedParams("so(p,q) needs p + q >= 2");
      }
      return vr_semidirect(p, q, 0);
    }

    namespace {
      std::string trim(std::string s) {
        auto ws = [](unsigned char c) { return std::isspace(c); };
        while (!s.empty() && ws(s.front())) {
          s.erase(s.begin());
        }
        while (!s.empty() && ws(s.back())) {
          s.pop_back();
        }
        return s;
      }

      std::vector<std::size_t> parameters(std::string const& name,
                                          std::string const& args) {
        std::vector<std::size_t> out;
        std::stringstream        in(args);
        std::string              item;
        while (std::getline(in, item, ',')) {
          item = trim(item);
          if (item.empty()
              || !std::all_of(item.begin(), item.end(), [](unsigned char c) {
                   return std::isdigit(c);
                 })) {
            throw UnsupportedParams("bad parameter '" + item + "' for " + name);
          }
          out.push_back(std::stoul(item));
        }
        return out;
      }
    }  // namespace

    LieAlgebra by_name(std::string const& raw) {
      std::string name  = trim(raw);
      int         depth = 0;
      for (std::size_t i = 0; i < name.size(); ++i) {
        if (name[i] == '(') {
          ++depth;
        } else if (name[i] == ')') {
          --depth;
        } else if (name[i] == '+' && depth == 0) {
          return direct_sum(by_name(name.substr(0, i)),
                            by_name(name.substr(i + 1)));
        }
      }
      std::string              head = name;
      std::vector<std::size_t> args;
      auto                     open = name.find('(');
      if (open != std::string::npos) {
        if (name.back() != ')') {
          throw UnsupportedParams("malformed catalogue name '" + name + "'");
        }
        head = trim(name.substr(0, open));
        args = parameters(head, name.substr(open + 1, name.size() - open - 2));
      }
      auto want = [&](std::size_t k) {
        if (args.size() != k) {
          throw UnsupportedParams(head + " takes " + std::to_string(k)
                                  + " parameter(s)");
        }
      };
      if (head == "af") {
        want(0);
        return af();
      }
      if (head == "sol") {
        want(0);
        return sol();
      }
      if (head == "sl2") {
        want(0);
        return sl2();
      }
      if (head == "heisenberg") {
        want(0);
        return heisenberg();
      }
      if (head == "abelian") {
        want(1);
        return abelian(args[0]);
      }
      if (head == "so") {
        want(2);
        return so(args[0], args[1]);
      }
      if (head == "vr_semidirect") {
        want(3);
        return vr_semidirect(args[0], args[1], args[2]);
      }
      throw UnsupportedParams("unknown catalogue algebra '" + name + "'");
    }

  }  // namespace lie_catalogue

}  // namespace pbp
