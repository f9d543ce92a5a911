#ifndef PBP_POLYNOMIAL_HPP_
#define PBP_POLYNOMIAL_HPP_

// Univariate polynomials with rational coefficients.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbp/linalg.hpp"

namespace pbp {

  /// Dense polynomial, coefficient i multiplies x^i. The zero polynomial
  /// has no coefficients; otherwise the leading coefficient is nonzero.
  class QPoly {
   public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(std::initializer_list<Rational> coeffs)
        : QPoly(std::vector<Rational>(coeffs)) {}

    static QPoly constant(Rational const& c);
    static QPoly x();
    /// x - root
    static QPoly linear(Rational const& root);

    int degree() const noexcept {
      return static_cast<int>(_c.size()) - 1;
    }
    bool is_zero() const noexcept { return _c.empty(); }
    Rational const& leading() const { return _c.back(); }
    Rational coeff(std::size_t i) const {
      return i < _c.size() ? _c[i] : Rational(0);
    }
    std::vector<Rational> const& coeffs() const noexcept { return _c; }

    Rational operator()(Rational const& x) const;
    QPoly    derivative() const;
    QPoly    monic() const;
    /// Scales to an integer polynomial with content 1 and positive leading
    /// coefficient.
    QPoly primitive() const;

    friend QPoly operator+(QPoly const& a, QPoly const& b);
    friend QPoly operator-(QPoly const& a, QPoly const& b);
    friend QPoly operator-(QPoly const& a);
    friend QPoly operator*(QPoly const& a, QPoly const& b);
    friend QPoly operator*(Rational const& c, QPoly const& a);
    friend bool  operator==(QPoly const& a, QPoly const& b) = default;

    std::string to_string(std::string const& var = "x") const;

   private:
    void normalize();
    std::vector<Rational> _c;
  };

  /// Quotient and remainder; b must be nonzero.
  std::pair<QPoly, QPoly> divmod(QPoly const& a, QPoly const& b);
  QPoly                   operator%(QPoly const& a, QPoly const& b);
  /// Monic gcd (zero if both are zero).
  QPoly gcd(QPoly const& a, QPoly const& b);
  /// Returns (g, s, t) with s a + t b = g = gcd(a, b) monic.
  std::tuple<QPoly, QPoly, QPoly> extended_gcd(QPoly const& a, QPoly const& b);
  QPoly squarefree_part(QPoly const& a);

  /// det(x I - m), computed exactly.
  QPoly characteristic_polynomial(QMatrix const& m);
  /// f(m) for a square matrix m.
  QMatrix evaluate(QPoly const& f, QMatrix const& m);

  /// Number of distinct real roots of a squarefree f in the half-open
  /// interval (lo, hi], by Sturm's theorem.
  std::size_t count_real_roots(QPoly const& f,
                               Rational const& lo,
                               Rational const& hi);

  /// Distinct monic irreducible factors over Q of a nonzero polynomial of
  /// positive degree (multiplicities are dropped). Uses modular factorisation
  /// modulo a single large prime followed by exhaustive recombination.
  std::vector<QPoly> irreducible_factors(QPoly const& f);

}  // namespace pbp

#endif  // PBP_POLYNOMIAL_HPP_
