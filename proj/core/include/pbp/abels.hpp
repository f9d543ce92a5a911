#ifndef PBP_ABELS_HPP_
#define PBP_ABELS_HPP_

// The Abels group A3 over Z[1/p], realised as the upper triangular matrices
//
//   [ 1  x  z ]
//   [ 0  u  y ]
//   [ 0  0  1 ]
//
// with x, y, z in Z[1/p] and u a unit, and its quotient Gamma = A3 / Z by the
// central integer matrices (u = 1, x = y = 0, z in Z).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbp/linalg.hpp"

namespace pbp {

  /// Whether the denominator of q (in lowest terms) is a power of p.
  bool in_zinvp(Rational const& q, unsigned long p);

  class ZInvP {
   public:
    ZInvP(Rational value, unsigned long p);

    Rational const& value() const noexcept { return _v; }
    unsigned long   prime() const noexcept { return _p; }

    /// this / p^k
    ZInvP divide_by_power(long k) const;

    friend ZInvP operator+(ZInvP const& a, ZInvP const& b);
    friend ZInvP operator-(ZInvP const& a, ZInvP const& b);
    friend ZInvP operator*(ZInvP const& a, ZInvP const& b);
    friend bool  operator==(ZInvP const&, ZInvP const&) = default;

   private:
    Rational      _v;
    unsigned long _p;
  };

  /// sign * p^exponent
  struct Unit {
    int  sign     = 1;
    long exponent = 0;

    Rational value(unsigned long p) const;
    Unit     inverse() const noexcept { return {sign, -exponent}; }

    friend Unit operator*(Unit a, Unit b) noexcept {
      return {a.sign * b.sign, a.exponent + b.exponent};
    }
    friend bool operator==(Unit const&, Unit const&) = default;
  };

  class A3Matrix {
   public:
    /// Throws InvalidInput if an entry leaves Z[1/p] or p is not prime.
    A3Matrix(unsigned long p, Rational x, Rational y, Rational z, Unit u);

    static A3Matrix identity(unsigned long p);
    static A3Matrix diagonal(unsigned long p, Unit u);
    /// The elementary matrices with a single off-diagonal entry.
    static A3Matrix e12(unsigned long p, Rational a);
    static A3Matrix e23(unsigned long p, Rational a);
    static A3Matrix e13(unsigned long p, Rational a);

    unsigned long   prime() const noexcept { return _p; }
    Rational const& x() const noexcept { return _x; }
    Rational const& y() const noexcept { return _y; }
    Rational const& z() const noexcept { return _z; }
    Unit const&     u() const noexcept { return _u; }

    A3Matrix inverse() const;
    /// u = 1 and x = y = 0.
    bool     is_central() const;
    /// The 3 x 3 rational matrix.
    QMatrix  to_matrix() const;
    std::string to_string() const;

    /// Throws InvalidInput on mismatched primes.
    friend A3Matrix operator*(A3Matrix const& a, A3Matrix const& b);
    friend bool     operator==(A3Matrix const&, A3Matrix const&) = default;

   private:
    unsigned long _p;
    Rational      _x, _y, _z;
    Unit          _u;
  };

  /// a b a^-1 b^-1
  A3Matrix commutator(A3Matrix const& a, A3Matrix const& b);

  /// diag(p), diag(-1), e12(1), e23(1); their centralizer is the centre.
  std::vector<A3Matrix> a3_generators(unsigned long p);

  /// An element of Gamma, stored by a lift whose z-entry lies in [0, 1).
  class GammaElement {
   public:
    explicit GammaElement(A3Matrix lift);

    A3Matrix const& lift() const noexcept { return _lift; }

    friend GammaElement operator*(GammaElement const& a, GammaElement const& b);
    friend bool operator==(GammaElement const&, GammaElement const&) = default;

   private:
    A3Matrix _lift;
  };

  /// Whether g and h commute in Gamma: the commutator of their lifts has
  /// u = 1, x = y = 0 and an integer z-entry.
  bool gamma_commutes(A3Matrix const& g, A3Matrix const& h);
  bool gamma_commutes(GammaElement const& g, GammaElement const& h);

  /// Exact computation with symbolic x, y, z and units u, v: for g = diag(u)
  /// and h = (x, y, z, v), checks g h g^-1 = (x/u, u y, z, v) and that
  /// [g, h] has entries x (u^-1 - 1) v^-1, y (u - 1), x y (1 - u^-1) v^-1, 1.
  struct SymbolicReport {
    bool        conjugation = false;
    bool        x_entry     = false;
    bool        y_entry     = false;
    bool        z_entry     = false;
    bool        u_entry     = false;
    std::string conjugate;     // g h g^-1, rendered
    std::string commutator;    // [g, h], rendered

    bool passed() const noexcept {
      return conjugation && x_entry && y_entry && z_entry && u_entry;
    }
  };

  SymbolicReport symbolic_acentrality();

  /// x, y, z = a / p^k with k <= 4, |a| <= 10 p^k; u = +-p^n, |n| <= 3.
  /// One sample in eight has x = y = 0, one in eight only x = 0 and one in
  /// eight only y = 0, so that commuting samples actually occur.
  A3Matrix random_a3(unsigned long p, std::mt19937_64& rng);

  struct AcentralReport {
    unsigned long            prime = 0;
    Unit                     g;
    SymbolicReport           symbolic;
    std::size_t              trials    = 0;
    std::size_t              commuting = 0;  // samples h commuting with g
    std::vector<std::string> counterexamples;

    bool randomized_passed() const noexcept { return counterexamples.empty(); }
    bool passed() const noexcept {
      return symbolic.passed() && randomized_passed();
    }
  };

  inline constexpr std::uint64_t default_abels_seed = 0xab315;

  /// For g = diag(u) with u = +-p^n, n != 0: the symbolic identity, and
  /// over `trials` random h that gamma_commutes(g, h) implies x_h = y_h = 0.
  AcentralReport acentral_check(unsigned long p,
                                Unit          u,
                                std::size_t   trials,
                                std::uint64_t seed = default_abels_seed);

  /// {"prime", "g", "symbolic", "randomized", "trials", "commuting_samples",
  ///  "identities", "counterexamples"}
  nlohmann::ordered_json to_json(AcentralReport const& r);

}  // namespace pbp

#endif  // PBP_ABELS_HPP_
