#include "pbp/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>
#include <tuple>

#include "pbp/error.hpp"

namespace pbp {

  QPoly::QPoly(std::vector<Rational> coeffs) : _c(std::move(coeffs)) {
    normalize();
  }

  void QPoly::normalize() {
    while (!_c.empty() && _c.back() == 0) {
      _c.pop_back();
    }
  }

  QPoly QPoly::constant(Rational const& c) {
    return QPoly(std::vector<Rational>{c});
  }

  QPoly QPoly::x() {
    return QPoly(std::vector<Rational>{0, 1});
  }

  QPoly QPoly::linear(Rational const& root) {
    return QPoly(std::vector<Rational>{-root, 1});
  }

  Rational QPoly::operator()(Rational const& x) const {
    Rational acc = 0;
    for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  QPoly QPoly::derivative() const {
    if (_c.size() <= 1) {
      return QPoly();
    }
    std::vector<Rational> d(_c.size() - 1);
    for (std::size_t i = 1; i < _c.size(); ++i) {
      d[i - 1] = _c[i] * static_cast<unsigned long>(i);
    }
    return QPoly(std::move(d));
  }

  QPoly QPoly::monic() const {
    if (is_zero()) {
      return *this;
    }
    Rational inv = 1 / leading();
    return inv * *this;
  }

  QPoly QPoly::primitive() const {
    if (is_zero()) {
      return *this;
    }
    Integer den = 1;
    for (auto const& q : _c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    Integer content = 0;
    for (auto const& q : _c) {
      Integer v = q.get_num() * (den / q.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    Rational factor = Rational(den) / Rational(content);
    if (leading() < 0) {
      factor = -factor;
    }
    return factor * *this;
  }

  QPoly operator+(QPoly const& a, QPoly const& b) {
    std::vector<Rational> c(std::max(a._c.size(), b._c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a.coeff(i) + b.coeff(i);
    }
    return QPoly(std::move(c));
  }

  QPoly operator-(QPoly const& a, QPoly const& b) {
    std::vector<Rational> c(std::max(a._c.size(), b._c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a.coeff(i) - b.coeff(i);
    }
    return QPoly(std::move(c));
  }

  QPoly operator-(QPoly const& a) {
    std::vector<Rational> c = a._c;
    for (auto& q : c) {
      q = -q;
    }
    return QPoly(std::move(c));
  }

  QPoly operator*(QPoly const& a, QPoly const& b) {
    if (a.is_zero() || b.is_zero()) {
      return QPoly();
    }
    std::vector<Rational> c(a._c.size() + b._c.size() - 1);
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      if (a._c[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        c[i + j] += a._c[i] * b._c[j];
      }
    }
    return QPoly(std::move(c));
  }

  QPoly operator*(Rational const& s, QPoly const& a) {
    std::vector<Rational> c = a._c;
    for (auto& q : c) {
      q *= s;
    }
    return QPoly(std::move(c));
  }

  std::string QPoly::to_string(std::string const& var) const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (int i = degree(); i >= 0; --i) {
      Rational const& c = _c[i];
      if (c == 0) {
        continue;
      }
      Rational a = abs(c);
      if (first) {
        out << (c < 0 ? "-" : "");
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || a != 1) {
        out << a.get_str();
      }
      if (i > 0) {
        out << var;
        if (i > 1) {
          out << '^' << i;
        }
      }
    }
    return out.str();
  }

  std::pair<QPoly, QPoly> divmod(QPoly const& a, QPoly const& b) {
    if (b.is_zero()) {
      throw InvalidInput("polynomial division by zero");
    }
    std::vector<Rational> r = a.coeffs();
    int                   db = b.degree();
    if (a.degree() < db) {
      return {QPoly(), a};
    }
    std::vector<Rational> q(a.degree() - db + 1);
    Rational              inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
      Rational c = r[i] * inv;
      q[i - db]  = c;
      if (c == 0) {
        continue;
      }
      for (int j = 0; j <= db; ++j) {
        r[i - db + j] -= c * b.coeffs()[j];
      }
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
  }

  QPoly operator%(QPoly const& a, QPoly const& b) {
    return divmod(a, b).second;
  }

  QPoly gcd(QPoly const& a, QPoly const& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
      QPoly r = x % y;
      x       = std::move(y);
      y       = std::move(r);
    }
    return x.monic();
  }

  std::tuple<QPoly, QPoly, QPoly> extended_gcd(QPoly const& a, QPoly const& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0          = std::exchange(r1, r);
      s0          = std::exchange(s1, s0 - q * s1);
      t0          = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) {
      return {r0, s0, t0};
    }
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
  }

  QPoly squarefree_part(QPoly const& a) {
    if (a.degree() <= 0) {
      return a.monic();
    }
    QPoly g = gcd(a, a.derivative());
    return divmod(a, g).first.monic();
  }

  QPoly characteristic_polynomial(QMatrix const& m) {
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    assert(m.rows() == m.cols());
    std::size_t           n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n]        = 1;
    QMatrix mk  = QMatrix(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
      QMatrix next = m * mk;
      for (std::size_t i = 0; i < n; ++i) {
        next(i, i) += c[n - k + 1];
      }
      mk          = std::move(next);
      QMatrix am  = m * mk;
      Rational tr = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tr += am(i, i);
      }
      c[n - k] = -tr / static_cast<unsigned long>(k);
    }
    return QPoly(std::move(c));
  }

  QMatrix evaluate(QPoly const& f, QMatrix const& m) {
    std::size_t n = m.rows();
    QMatrix     acc(n, n);
    for (int i = f.degree(); i >= 0; --i) {
      acc = acc * m;
      for (std::size_t j = 0; j < n; ++j) {
        acc(j, j) += f.coeffs()[i];
      }
    }
    return acc;
  }

  namespace {
    std::vector<QPoly> sturm_sequence(QPoly const& f) {
      std::vector<QPoly> seq{f, f.derivative()};
      while (!seq.back().is_zero()) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        seq.push_back(-r);
      }
      seq.pop_back();
      return seq;
    }

    std::size_t sign_changes(std::vector<QPoly> const& seq, Rational const& x) {
      std::size_t changes = 0;
      int         prev    = 0;
      for (auto const& p : seq) {
        int s = sgn(p(x));
        if (s == 0) {
          continue;
        }
        if (prev != 0 && s != prev) {
          ++changes;
        }
        prev = s;
      }
      return changes;
    }
  }  // namespace

  std::size_t count_real_roots(QPoly const& f,
                               Rational const& lo,
                               Rational const& hi) {
    if (f.degree() <= 0) {
      return 0;
    }
    auto seq = sturm_sequence(f);
    return sign_changes(seq, lo) - sign_changes(seq, hi);
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorisation over Q
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Polynomials over Z/p, coefficients in [0, p).
    using ZpPoly = std::vector<Integer>;

    struct Zp {
      Integer p;

      Integer mod(Integer const& a) const {
        Integer r = a % p;
        if (r < 0) {
          r += p;
        }
        return r;
      }

      void trim(ZpPoly& a) const {
        while (!a.empty() && a.back() == 0) {
          a.pop_back();
        }
      }

      ZpPoly sub(ZpPoly const& a, ZpPoly const& b) const {
        ZpPoly c(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
          Integer x = i < a.size() ? a[i] : Integer(0);
          Integer y = i < b.size() ? b[i] : Integer(0);
          c[i]      = mod(x - y);
        }
        trim(c);
        return c;
      }

      ZpPoly mul(ZpPoly const& a, ZpPoly const& b) const {
        if (a.empty() || b.empty()) {
          return {};
        }
        ZpPoly c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
          for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
          }
        }
        for (auto& x : c) {
          x = mod(x);
        }
        trim(c);
        return c;
      }

      Integer inverse(Integer const& a) const {
        Integer r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
          throw VerificationFailure("non-invertible element modulo prime");
        }
        return r;
      }

      std::pair<ZpPoly, ZpPoly> divmod(ZpPoly a, ZpPoly const& b) const {
        assert(!b.empty());
        if (a.size() < b.size()) {
          return {{}, a};
        }
        Integer inv = inverse(b.back());
        ZpPoly  q(a.size() - b.size() + 1);
        for (std::size_t i = a.size(); i-- >= b.size();) {
          Integer c = mod(a[i] * inv);
          q[i - (b.size() - 1)] = c;
          if (c != 0) {
            for (std::size_t j = 0; j < b.size(); ++j) {
              a[i - (b.size() - 1) + j] =
                  mod(a[i - (b.size() - 1) + j] - c * b[j]);
            }
          }
          if (i == b.size() - 1) {
            break;
          }
        }
        a.resize(b.size() - 1);
        trim(a);
        trim(q);
        return {q, a};
      }

      ZpPoly rem(ZpPoly const& a, ZpPoly const& b) const {
        return divmod(a, b).second;
      }

      ZpPoly monic(ZpPoly a) const {
        if (a.empty()) {
          return a;
        }
        Integer inv = inverse(a.back());
        for (auto& x : a) {
          x = mod(x * inv);
        }
        return a;
      }

      ZpPoly gcd(ZpPoly a, ZpPoly b) const {
        while (!b.empty()) {
          ZpPoly r = rem(a, b);
          a        = std::move(b);
          b        = std::move(r);
        }
        return monic(a);
      }

      ZpPoly powmod(ZpPoly base, Integer e, ZpPoly const& m) const {
        ZpPoly result{1};
        base = rem(base, m);
        while (e > 0) {
          if (mpz_odd_p(e.get_mpz_t())) {
            result = rem(mul(result, base), m);
          }
          base = rem(mul(base, base), m);
          e >>= 1;
        }
        return result;
      }

      // Splits a monic squarefree f whose irreducible factors all have
      // degree d (Cantor-Zassenhaus, p odd).
      void equal_degree(ZpPoly const&        f,
                        int                  d,
                        std::mt19937_64&     rng,
                        std::vector<ZpPoly>& out) const {
        int n = static_cast<int>(f.size()) - 1;
        if (n == d) {
          out.push_back(f);
          return;
        }
        Integer e;
        mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        gmp_randclass gen(gmp_randinit_default);
        gen.seed(static_cast<unsigned long>(rng()));
        while (true) {
          ZpPoly a(n);
          for (auto& c : a) {
            c = gen.get_z_range(p);
          }
          trim(a);
          if (a.size() < 2) {
            continue;
          }
          ZpPoly b = sub(powmod(a, e, f), ZpPoly{1});
          ZpPoly g = gcd(f, b);
          int    dg = static_cast<int>(g.size()) - 1;
          if (dg > 0 && dg < n) {
            equal_degree(g, d, rng, out);
            equal_degree(monic(divmod(f, g).first), d, rng, out);
            return;
          }
        }
      }

      std::vector<ZpPoly> factor(ZpPoly f, std::mt19937_64& rng) const {
        std::vector<ZpPoly> out;
        f         = monic(f);
        ZpPoly xp = {0, 1};
        ZpPoly h  = xp;
        for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
          h        = powmod(h, p, f);
          ZpPoly g = gcd(f, sub(h, xp));
          if (g.size() > 1) {
            equal_degree(g, d, rng, out);
            f = monic(divmod(f, g).first);
            h = rem(h, f);
          }
        }
        if (f.size() > 1) {
          out.push_back(f);
        }
        return out;
      }
    };

    std::vector<Integer> integer_coeffs(QPoly const& f) {
      std::vector<Integer> z;
      for (auto const& c : f.coeffs()) {
        assert(c.get_den() == 1);
        z.push_back(c.get_num());
      }
      return z;
    }

    // Exact division test over Z: returns quotient if b | a.
    bool divides(QPoly const& b, QPoly const& a, QPoly& quotient) {
      auto [q, r] = divmod(a, b);
      if (!r.is_zero()) {
        return false;
      }
      for (auto const& c : q.coeffs()) {
        if (c.get_den() != 1) {
          return false;
        }
      }
      quotient = q;
      return true;
    }

    // Irreducible factors of a primitive squarefree integer polynomial.
    std::vector<QPoly> factor_squarefree(QPoly f) {
      if (f.degree() <= 1) {
        return {f};
      }
      auto    z  = integer_coeffs(f);
      Integer lc = abs(z.back());
      // Mignotte: every coefficient of lc(f)/lc(g) * g for a factor g is at
      // most |lc(f)| 2^deg ||f||_2.
      Integer norm2 = 0;
      for (auto const& c : z) {
        norm2 += c * c;
      }
      Integer norm = sqrt(norm2) + 1;
      Integer bound = lc * norm;
      bound <<= static_cast<unsigned long>(f.degree());
      Integer p = 2 * bound + 1;

      std::mt19937_64 rng(0x5eed);
      while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (z.back() % p == 0) {
          continue;
        }
        Zp     field{p};
        ZpPoly fp;
        for (auto const& c : z) {
          fp.push_back(field.mod(c));
        }
        field.trim(fp);
        ZpPoly dfp;
        for (std::size_t i = 1; i < fp.size(); ++i) {
          dfp.push_back(field.mod(fp[i] * static_cast<unsigned long>(i)));
        }
        field.trim(dfp);
        if (field.gcd(fp, dfp).size() != 1) {
          continue;
        }
        std::vector<ZpPoly> modular = field.factor(fp, rng);

        std::vector<QPoly> result;
        QPoly              rest = f;
        std::size_t        s    = 1;
        Integer            half = p / 2;
        while (2 * s <= modular.size()) {
          bool found = false;
          // Enumerate s-subsets of the remaining modular factors.
          std::vector<std::size_t> idx(s);
          for (std::size_t i = 0; i < s; ++i) {
            idx[i] = i;
          }
          while (true) {
            Integer lcr = abs(integer_coeffs(rest).back());
            ZpPoly  g{field.mod(lcr)};
            for (auto i : idx) {
              g = field.mul(g, modular[i]);
            }
            std::vector<Rational> sym;
            for (auto const& c : g) {
              sym.emplace_back(c > half ? Integer(c - p) : c);
            }
            QPoly cand = QPoly(std::move(sym)).primitive();
            QPoly quotient;
            if (cand.degree() > 0 && divides(cand, rest, quotient)) {
              result.push_back(cand);
              rest = quotient.primitive();
              std::vector<ZpPoly> remaining;
              for (std::size_t i = 0; i < modular.size(); ++i) {
                if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
                  remaining.push_back(modular[i]);
                }
              }
              modular = std::move(remaining);
              found   = true;
              break;
            }
            // Next combination.
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == modular.size() - s + k - 1) {
              --k;
            }
            if (k == 0) {
              break;
            }
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) {
              idx[j] = idx[j - 1] + 1;
            }
          }
          if (!found) {
            ++s;
          }
        }
        if (rest.degree() > 0) {
          result.push_back(rest);
        }
        return result;
      }
    }
  }  // namespace

  std::vector<QPoly> irreducible_factors(QPoly const& f) {
    if (f.degree() <= 0) {
      throw InvalidInput("cannot factor a constant polynomial");
    }
    QPoly sf = squarefree_part(f).primitive();
    // Pull out the trivial factor x first; it keeps the prime search cheap.
    std::vector<QPoly> out;
    if (sf.coeff(0) == 0) {
      out.push_back(QPoly::x());
      sf = divmod(sf, QPoly::x()).first.primitive();
    }
    if (sf.degree() > 0) {
      for (auto const& g : factor_squarefree(sf)) {
        out.push_back(g.monic());
      }
    }
    std::sort(out.begin(), out.end(), [](QPoly const& a, QPoly const& b) {
      if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
      }
      return a.to_string() < b.to_string();
    });
    return out;
  }

}  // namespace pbp
