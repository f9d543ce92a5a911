#ifndef PBP_COXETER_HPP_
#define PBP_COXETER_HPP_

// Coxeter matrices, exact Tits forms and their signatures.

#include <cstddef>
#include <string>
#include <vector>

#include "pbp/algebraic.hpp"
#include "pbp/lie.hpp"
#include "pbp/verdict.hpp"

namespace pbp {

  class CoxeterMatrix {
   public:
    /// Entry value standing for an infinite label.
    static constexpr unsigned long infinity = 0;

    CoxeterMatrix() = default;
    /// Validates symmetry, unit diagonal and off-diagonal labels >= 2 or
    /// infinity.
    explicit CoxeterMatrix(std::vector<std::vector<unsigned long>> rows);

    std::size_t   size() const noexcept { return _n; }
    unsigned long at(std::size_t i, std::size_t j) const {
      return _m[i * _n + j];
    }
    bool is_infinite(std::size_t i, std::size_t j) const {
      return i != j && at(i, j) == infinity;
    }
    CoxeterMatrix restrict_to(std::vector<std::size_t> const& vertices) const;

    friend bool operator==(CoxeterMatrix const&, CoxeterMatrix const&) = default;

   private:
    std::size_t                _n = 0;
    std::vector<unsigned long> _m;
  };

  class SymmetricForm {
   public:
    SymmetricForm() = default;
    explicit SymmetricForm(std::size_t n) : _n(n), _b(n * n) {}
    SymmetricForm(std::size_t n, std::vector<AlgebraicReal> entries);
    /// A rational form; must be square and symmetric.
    explicit SymmetricForm(QMatrix const& m);

    std::size_t          size() const noexcept { return _n; }
    AlgebraicReal const& at(std::size_t i, std::size_t j) const {
      return _b[i * _n + j];
    }
    AlgebraicReal& at(std::size_t i, std::size_t j) { return _b[i * _n + j]; }

   private:
    std::size_t                _n = 0;
    std::vector<AlgebraicReal> _b;
  };

  struct Signature {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t r = 0;

    friend bool operator==(Signature const&, Signature const&) = default;
  };

  /// B[i][j] = -cos(pi / m[i][j]) (and -1 for infinite labels), B[i][i] = 1,
  /// in the real cyclotomic field of order lcm(2, finite labels).
  SymmetricForm tits_form(CoxeterMatrix const& m);

  /// Connected components of the graph with an edge i - j iff m[i][j] >= 3
  /// or infinite; each sorted, listed by smallest vertex.
  std::vector<std::vector<std::size_t>> components(CoxeterMatrix const& m);

  /// Exact signature by congruence diagonalisation.
  Signature signature(SymmetricForm const& f);
  Signature signature(QMatrix const& m);

  enum class CoxeterType { finite, affine, indefinite };
  std::string to_string(CoxeterType t);

  struct ComponentReport {
    std::vector<std::size_t> vertices;
    Signature                signature;
    CoxeterType              type = CoxeterType::finite;
  };

  /// Per irreducible component: finite iff q = r = 0, affine iff q = 0 and
  /// r >= 1 (then r = 1 is asserted), indefinite iff q >= 1.
  std::vector<ComponentReport> classify(CoxeterMatrix const& m);

  struct CoxeterVerdict {
    Verdict                      verdict;
    std::vector<ComponentReport> components;
  };

  CoxeterVerdict coxeter_presentable(CoxeterMatrix const& m);

  /// (Q^(p+q))^r semidirect so(p, q).
  LieAlgebra of_algebra(Signature const& s);

  namespace coxeter_catalogue {
    /// Path diagram whose consecutive labels are given.
    CoxeterMatrix path(std::vector<unsigned long> const& labels);
    /// Star with arms of the given lengths (all labels 3).
    CoxeterMatrix star(std::vector<std::size_t> const& arms);
    CoxeterMatrix triangle(unsigned long a, unsigned long b, unsigned long c);

    /// "A3", "B4", "D5", "E8", "F4", "H3", "H4", "I2(7)", and affine
    /// "~A1", "~A2", "~C2", "~G2", "~F4", "~E6", "~E7", "~E8"; also
    /// "triangle(3,3,7)". Throws UnsupportedParams otherwise.
    CoxeterMatrix by_name(std::string const& name);
  }  // namespace coxeter_catalogue

}  // namespace pbp

#endif  // PBP_COXETER_HPP_
