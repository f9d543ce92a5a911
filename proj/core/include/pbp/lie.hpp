#ifndef PBP_LIE_HPP_
#define PBP_LIE_HPP_

// Finite-dimensional Lie algebras over Q given by structure constants.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbp/linalg.hpp"

namespace pbp {

  class LieAlgebra {
   public:
    LieAlgebra() = default;
    /// constants[i][j] is the coordinate vector of [e_i, e_j]. No checks
    /// are made; see validate().
    LieAlgebra(std::vector<std::string>          labels,
               std::vector<std::vector<QVector>> constants);

    struct Bracket {
      std::size_t x;
      std::size_t y;
      QVector     value;
    };
    /// Builds the algebra from the listed brackets [e_x, e_y], filling in
    /// [e_y, e_x] = -[e_x, e_y]. Conflicting entries throw InvalidAlgebra.
    static LieAlgebra from_brackets(std::vector<std::string>    labels,
                                    std::vector<Bracket> const& brackets);
    /// Structure constants of the span of linearly independent square
    /// matrices closed under the commutator.
    static LieAlgebra from_matrices(std::vector<std::string>    labels,
                                    std::vector<QMatrix> const& basis);

    std::size_t dim() const noexcept { return _labels.size(); }
    std::vector<std::string> const& labels() const noexcept { return _labels; }
    Rational const& c(std::size_t i, std::size_t j, std::size_t k) const {
      return _c[i][j][k];
    }
    QVector const& bracket(std::size_t i, std::size_t j) const {
      return _c[i][j];
    }
    QVector bracket(QVector const& x, QVector const& y) const;
    /// Matrix of ad(e_i) acting on coordinate columns.
    QMatrix ad(std::size_t i) const;
    std::vector<QMatrix> adjoint_actions() const;

   private:
    std::vector<std::string>          _labels;
    std::vector<std::vector<QVector>> _c;
  };

  struct ValidationReport {
    enum class Kind { ok, antisymmetry, jacobi };
    Kind        kind = Kind::ok;
    std::size_t i = 0, j = 0, k = 0;

    bool        ok() const noexcept { return kind == Kind::ok; }
    std::string describe(LieAlgebra const& l) const;
  };

  /// Checks c[i][j][k] = -c[j][i][k] and the Jacobi identity on all basis
  /// triples; reports the first failure.
  ValidationReport validate(LieAlgebra const& l);

  /// span{[a, b] : a in A, b in B}
  Subspace bracket(LieAlgebra const& l, Subspace const& a, Subspace const& b);
  bool     is_subalgebra(LieAlgebra const& l, Subspace const& s);
  bool     is_ideal(LieAlgebra const& l, Subspace const& s);
  /// Smallest ideal containing s.
  Subspace ideal_closure(LieAlgebra const& l, Subspace const& s);
  /// {y : [y, a] = 0 for all a in A}
  Subspace centralizer(LieAlgebra const& l, Subspace const& a);
  Subspace centre(LieAlgebra const& l);
  Subspace whole(LieAlgebra const& l);
  /// Span of the listed basis labels.
  Subspace span_of(LieAlgebra const& l, std::vector<std::string> const& labels);

  struct LieCertificate {
    Subspace g1;
    Subspace g2;
  };

  struct CertificateCheck {
    bool        accepted = false;
    std::string reason;  // first failed condition when rejected
  };

  CertificateCheck verify_product_certificate(LieAlgebra const&     l,
                                              LieCertificate const& cert);

  LieAlgebra direct_sum(LieAlgebra const& a, LieAlgebra const& b);

  namespace lie_catalogue {
    /// basis {e, g}, [g, e] = e
    LieAlgebra af();
    /// basis {e, f, g}, [g, e] = e, [g, f] = -f, [e, f] = 0
    LieAlgebra sol();
    /// basis {e, f, h}, [h, e] = 2e, [h, f] = -2f, [e, f] = h
    LieAlgebra sl2();
    /// {A : A^T J + J A = 0}, J = diag(1^p, (-1)^q), basis J_ii E_ij - J_jj E_ji
    LieAlgebra so(std::size_t p, std::size_t q);
    /// (Q^(p+q))^r semidirect so(p,q), realised as block matrices
    /// [[A, 0], [X, 0]] with A in so(p,q) and X an r x (p+q) matrix.
    LieAlgebra vr_semidirect(std::size_t p, std::size_t q, std::size_t r);
    /// basis {x, y, z}, [x, y] = z
    LieAlgebra heisenberg();
    LieAlgebra abelian(std::size_t n);

    /// Looks up names such as "af", "sol", "sl2", "so(2,1)",
    /// "vr_semidirect(2,1,1)", "heisenberg", "abelian(2)",
    /// "sl2+sl2". Throws UnsupportedParams otherwise.
    LieAlgebra by_name(std::string const& name);
  }  // namespace lie_catalogue

}  // namespace pbp

#endif  // PBP_LIE_HPP_
