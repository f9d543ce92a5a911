#ifndef PBP_ALGEBRAIC_HPP_
#define PBP_ALGEBRAIC_HPP_

// Exact real algebraic numbers living in a real cyclotomic field
// Q(theta), theta = 2 cos(pi / N).

#include <cstddef>
#include <memory>
#include <utility>

#include "pbp/linalg.hpp"
#include "pbp/polynomial.hpp"

namespace pbp {

  struct Interval {
    Rational lo;
    Rational hi;
  };

  class RealCyclotomicField {
   public:
    /// The field generated by 2 cos(pi / n), n >= 2. For n = 2 this is Q.
    static std::shared_ptr<RealCyclotomicField const> make(unsigned long n);
    static std::shared_ptr<RealCyclotomicField const> rationals();

    unsigned long order() const noexcept { return _n; }
    int           degree() const noexcept { return _minpoly.degree(); }
    /// Monic minimal polynomial of theta.
    QPoly const& minimal_polynomial() const noexcept { return _minpoly; }
    /// Rational interval containing theta and no other root.
    Interval const& theta_interval() const noexcept { return _interval; }
    /// Halves an isolating interval of theta.
    Interval bisect(Interval const& i) const;

    /// 2 cos(pi k / n) as a polynomial in theta (reduced).
    QPoly two_cos_multiple(unsigned long k) const;

   private:
    RealCyclotomicField() = default;
    unsigned long _n = 2;
    QPoly         _minpoly;
    Interval      _interval;
  };

  /// An element of a RealCyclotomicField, stored as a polynomial in theta
  /// of degree below the field degree.
  class AlgebraicReal {
   public:
    AlgebraicReal() : AlgebraicReal(Rational(0)) {}
    AlgebraicReal(Rational const& q);  // NOLINT: implicit on purpose
    AlgebraicReal(std::shared_ptr<RealCyclotomicField const> field,
                  QPoly                                      value);

    /// cos(pi / m) for m >= 1 in the field of order n (m must divide n).
    static AlgebraicReal
    cos_pi_over(std::shared_ptr<RealCyclotomicField const> const& field,
                unsigned long                                     m);

    std::shared_ptr<RealCyclotomicField const> const& field() const noexcept {
      return _field;
    }
    QPoly const& value() const noexcept { return _value; }
    bool         is_zero() const noexcept { return _value.is_zero(); }
    bool         is_rational() const noexcept { return _value.degree() <= 0; }
    Rational     to_rational() const;

    /// -1, 0 or +1, certified by interval refinement.
    int    sign(std::size_t max_refinements = 4096) const;
    double to_double() const;

    /// Enclosure of the number from an isolating interval of theta.
    Interval enclose(Interval const& theta) const;

    /// Primitive integer minimal polynomial over Q.
    QPoly minimal_polynomial() const;
    /// Open interval (lo, hi) containing this number and no other root of
    /// minimal_polynomial(), of width at most max_width.
    Interval isolating_interval(Rational const& max_width = Rational(1)) const;

    AlgebraicReal inverse() const;

    friend AlgebraicReal operator+(AlgebraicReal const& a,
                                   AlgebraicReal const& b);
    friend AlgebraicReal operator-(AlgebraicReal const& a,
                                   AlgebraicReal const& b);
    friend AlgebraicReal operator-(AlgebraicReal const& a);
    friend AlgebraicReal operator*(AlgebraicReal const& a,
                                   AlgebraicReal const& b);
    friend AlgebraicReal operator/(AlgebraicReal const& a,
                                   AlgebraicReal const& b);
    friend bool          operator==(AlgebraicReal const& a,
                           AlgebraicReal const& b);
    friend int           compare(AlgebraicReal const& a, AlgebraicReal const& b);

   private:
    std::shared_ptr<RealCyclotomicField const> _field;
    QPoly                                      _value;
  };

  /// Multiplies two enclosures.
  Interval operator*(Interval const& a, Interval const& b);
  Interval operator+(Interval const& a, Interval const& b);

}  // namespace pbp

#endif  // PBP_ALGEBRAIC_HPP_
