#include "pbp/algebraic.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "pbp/error.hpp"

namespace pbp {

  namespace {
    QPoly monomial(std::size_t k) {
      std::vector<Rational> c(k + 1);
      c[k] = 1;
      return QPoly(std::move(c));
    }

    QPoly cyclotomic(unsigned long k) {
      QPoly p = monomial(k) - QPoly::constant(1);
      for (unsigned long d = 1; d < k; ++d) {
        if (k % d == 0) {
          p = divmod(p, cyclotomic(d)).first;
        }
      }
      return p;
    }

    // Rewrites a palindromic polynomial P(z) of degree 2k as Q(z + 1/z)
    // with P(z) = z^k Q(z + 1/z).
    QPoly palindromic_to_trace(QPoly const& p) {
      int   k = p.degree() / 2;
      QPoly prev = QPoly::constant(2), cur = QPoly::x();
      QPoly q    = QPoly::constant(p.coeff(k));
      for (int j = 1; j <= k; ++j) {
        q    = q + p.coeff(k + j) * cur;
        QPoly next = QPoly::x() * cur - prev;
        prev = std::move(cur);
        cur  = std::move(next);
      }
      return q;
    }

    Rational width(Interval const& i) {
      return i.hi - i.lo;
    }
  }  // namespace

  Interval operator*(Interval const& a, Interval const& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Interval r{p[0], p[0]};
    for (auto const& x : p) {
      if (x < r.lo) {
        r.lo = x;
      }
      if (x > r.hi) {
        r.hi = x;
      }
    }
    return r;
  }

  Interval operator+(Interval const& a, Interval const& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }

  ////////////////////////////////////////////////////////////////////////
  // RealCyclotomicField
  ////////////////////////////////////////////////////////////////////////

  std::shared_ptr<RealCyclotomicField const>
  RealCyclotomicField::make(unsigned long n) {
    if (n < 2) {
      throw InvalidInput("real cyclotomic field needs order >= 2");
    }
    std::shared_ptr<RealCyclotomicField> f(new RealCyclotomicField());
    f->_n       = n;
    f->_minpoly = palindromic_to_trace(cyclotomic(2 * n)).monic();

    double   theta = 2 * std::cos(std::numbers::pi / static_cast<double>(n));
    Rational eps(1, 1000);
    for (int attempt = 0;; ++attempt) {
      Rational centre(theta);
      Interval i{centre - eps, centre + eps};
      if (f->_minpoly(i.lo) != 0 && f->_minpoly(i.hi) != 0
          && count_real_roots(f->_minpoly, i.lo, i.hi) == 1) {
        f->_interval = i;
        break;
      }
      if (attempt == 20) {
        throw PrecisionExhausted("cannot isolate 2cos(pi/"
                                 + std::to_string(n) + ")");
      }
      eps /= 16;
    }
    return f;
  }

  std::shared_ptr<RealCyclotomicField const> RealCyclotomicField::rationals() {
    static auto const q = make(2);
    return q;
  }

  Interval RealCyclotomicField::bisect(Interval const& i) const {
    Rational mid = (i.lo + i.hi) / 2;
    Rational fm  = _minpoly(mid);
    if (fm == 0) {
      return {mid, mid};
    }
    if (sgn(_minpoly(i.lo)) != sgn(fm)) {
      return {i.lo, mid};
    }
    return {mid, i.hi};
  }

  QPoly RealCyclotomicField::two_cos_multiple(unsigned long k) const {
    QPoly prev = QPoly::constant(2), cur = QPoly::x() % _minpoly;
    if (k == 0) {
      return prev % _minpoly;
    }
    for (unsigned long j = 1; j < k; ++j) {
      QPoly next = (QPoly::x() * cur - prev) % _minpoly;
      prev       = std::move(cur);
      cur        = std::move(next);
    }
    return cur;
  }

  ////////////////////////////////////////////////////////////////////////
  // AlgebraicReal
  ////////////////////////////////////////////////////////////////////////

  AlgebraicReal::AlgebraicReal(Rational const& q)
      : _field(RealCyclotomicField::rationals()), _value(QPoly::constant(q)) {}

  AlgebraicReal::AlgebraicReal(
      std::shared_ptr<RealCyclotomicField const> field,
      QPoly                                      value)
      : _field(std::move(field)),
        _value(std::move(value) % _field->minimal_polynomial()) {}

  AlgebraicReal AlgebraicReal::cos_pi_over(
      std::shared_ptr<RealCyclotomicField const> const& field,
      unsigned long                                     m) {
    if (m == 0 || field->order() % m != 0) {
      throw InvalidInput("cos(pi/" + std::to_string(m)
                         + ") does not lie in the field of order "
                         + std::to_string(field->order()));
    }
    QPoly two_cos = field->two_cos_multiple(field->order() / m);
    return AlgebraicReal(field, Rational(1, 2) * two_cos);
  }

  Rational AlgebraicReal::to_rational() const {
    if (!is_rational()) {
      throw InvalidInput("algebraic number is irrational");
    }
    return _value.coeff(0);
  }

  Interval AlgebraicReal::enclose(Interval const& theta) const {
    auto const& c = _value.coeffs();
    if (c.empty()) {
      return {0, 0};
    }
    Interval acc{c.back(), c.back()};
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      acc = acc * theta + Interval{c[i], c[i]};
    }
    return acc;
  }

  int AlgebraicReal::sign(std::size_t max_refinements) const {
    if (is_rational()) {
      return sgn(_value.coeff(0));
    }
    Interval theta = _field->theta_interval();
    for (std::size_t r = 0; r <= max_refinements; ++r) {
      Interval e = enclose(theta);
      if (e.lo > 0) {
        return 1;
      }
      if (e.hi < 0) {
        return -1;
      }
      theta = _field->bisect(theta);
    }
    throw PrecisionExhausted("sign not certified after "
                             + std::to_string(max_refinements)
                             + " refinements");
  }

  double AlgebraicReal::to_double() const {
    double theta =
        2 * std::cos(std::numbers::pi / static_cast<double>(_field->order()));
    double acc = 0;
    auto const& c = _value.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = acc * theta + it->get_d();
    }
    return acc;
  }

  QPoly AlgebraicReal::minimal_polynomial() const {
    auto const& psi = _field->minimal_polynomial();
    std::size_t k   = static_cast<std::size_t>(psi.degree());
    QMatrix     m(k, k);
    QPoly       col = _value;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        m(i, j) = col.coeff(i);
      }
      col = (QPoly::x() * col) % psi;
    }
    return squarefree_part(characteristic_polynomial(m)).primitive();
  }

  Interval AlgebraicReal::isolating_interval(Rational const& max_width) const {
    QPoly mp = minimal_polynomial();
    if (is_rational()) {
      Rational c = _value.coeff(0);
      return {c - max_width / 2, c + max_width / 2};
    }
    Interval theta = _field->theta_interval();
    for (int r = 0; r < 4096; ++r) {
      Interval e = enclose(theta);
      if (width(e) <= max_width && mp(e.lo) != 0 && mp(e.hi) != 0
          && count_real_roots(mp, e.lo, e.hi) == 1) {
        return e;
      }
      theta = _field->bisect(theta);
    }
    throw PrecisionExhausted("cannot isolate algebraic number");
  }

  AlgebraicReal AlgebraicReal::inverse() const {
    if (is_zero()) {
      throw InvalidInput("division by zero algebraic number");
    }
    auto [g, s, t] = extended_gcd(_value, _field->minimal_polynomial());
    if (g.degree() != 0) {
      throw VerificationFailure("field polynomial is not irreducible");
    }
    return AlgebraicReal(_field, s);
  }

  namespace {
    std::shared_ptr<RealCyclotomicField const>
    common_field(AlgebraicReal const& a, AlgebraicReal const& b) {
      if (a.field() == b.field() || b.is_rational()) {
        return a.field();
      }
      if (a.is_rational()) {
        return b.field();
      }
      if (a.field()->order() == b.field()->order()) {
        return a.field();
      }
      throw InvalidInput("algebraic numbers from different fields");
    }
  }  // namespace

  AlgebraicReal operator+(AlgebraicReal const& a, AlgebraicReal const& b) {
    return AlgebraicReal(common_field(a, b), a._value + b._value);
  }

  AlgebraicReal operator-(AlgebraicReal const& a, AlgebraicReal const& b) {
    return AlgebraicReal(common_field(a, b), a._value - b._value);
  }

  AlgebraicReal operator-(AlgebraicReal const& a) {
    return AlgebraicReal(a._field, -a._value);
  }

  AlgebraicReal operator*(AlgebraicReal const& a, AlgebraicReal const& b) {
    return AlgebraicReal(common_field(a, b), a._value * b._value);
  }

  AlgebraicReal operator/(AlgebraicReal const& a, AlgebraicReal const& b) {
    auto f = common_field(a, b);
    if (b.is_rational()) {
      if (b.is_zero()) {
        throw InvalidInput("division by zero algebraic number");
      }
      return AlgebraicReal(f, (1 / b._value.coeff(0)) * a._value);
    }
    return a * b.inverse();
  }

  bool operator==(AlgebraicReal const& a, AlgebraicReal const& b) {
    return (a - b).is_zero();
  }

  int compare(AlgebraicReal const& a, AlgebraicReal const& b) {
    return (a - b).sign();
  }

}  // namespace pbp
