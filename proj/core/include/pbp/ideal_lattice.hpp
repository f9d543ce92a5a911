#ifndef PBP_IDEAL_LATTICE_HPP_
#define PBP_IDEAL_LATTICE_HPP_

// Ideal lattices of rational Lie algebras and the commuting-ideal test for
// presentability by a product.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbp/lie.hpp"
#include "pbp/module.hpp"
#include "pbp/verdict.hpp"

namespace pbp {

  struct IdealLattice {
    enum class Completeness { complete, infinite_family, unknown };

    /// All ideals including 0 and the whole algebra, ordered by dimension,
    /// when complete; the ideals found so far otherwise.
    std::vector<Subspace> ideals;
    Completeness          completeness = Completeness::unknown;
    /// Two distinct isomorphic minimal ideals when an infinite family is
    /// detected.
    std::optional<std::pair<Subspace, Subspace>> witness;
  };

  std::string to_string(IdealLattice::Completeness c);

  struct LatticeOptions {
    std::size_t    max_dim = 10;
    std::size_t    budget  = 5000;  // lattice nodes visited
    MeatAxeOptions meataxe;
  };

  IdealLattice ideal_lattice(LieAlgebra const& l, LatticeOptions const& opts = {});

  /// "0", "span{e}", "span{e + 2f, g}", ...
  std::string to_string(LieAlgebra const& l, Subspace const& s);

  struct IdealCheck {
    Subspace ideal;
    Subspace centralizer;
    bool     spans = false;  // ideal + centralizer == whole
  };

  struct LiePresentability {
    Verdict                       verdict;
    std::optional<LieCertificate> certificate;
    /// Nonzero ideals examined, in lattice order.
    std::vector<IdealCheck> checks;
    IdealLattice            lattice;
  };

  /// Decides whether two nonzero commuting subalgebras span l. Throws
  /// InvalidAlgebra when l fails validation.
  LiePresentability lie_presentable(LieAlgebra const&     l,
                                    LatticeOptions const& opts = {});

}  // namespace pbp

#endif  // PBP_IDEAL_LATTICE_HPP_
