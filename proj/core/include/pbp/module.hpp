#ifndef PBP_MODULE_HPP_
#define PBP_MODULE_HPP_

// Finite-dimensional modules over Q given by matrices acting on columns,
// with a MeatAxe-style splitter certified by Norton's irreducibility test.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pbp/linalg.hpp"

namespace pbp {

  struct Module {
    std::size_t          dim = 0;
    std::vector<QMatrix> actions;
  };

  /// Smallest invariant subspace containing the given vectors.
  Subspace spin(Module const& m, std::vector<QVector> const& seeds);
  bool     is_submodule(Module const& m, Subspace const& s);

  /// Action on a submodule in the coordinates of its echelon basis.
  Module submodule_action(Module const& m, Subspace const& s);
  /// Action on M / S in the coordinates given by the non-pivot positions of S.
  Module quotient_action(Module const& m, Subspace const& s);
  /// Subspace of M whose image in M / S is q (q in quotient coordinates).
  Subspace preimage(Subspace const& s, Subspace const& q);
  /// Image of a subspace of a submodule (given in its echelon coordinates)
  /// in the ambient module.
  Subspace embed(Subspace const& s, Subspace const& inner);

  /// Outcome of one attempt to split a module.
  struct Split {
    enum class Kind { irreducible, proper, unknown };
    Kind     kind = Kind::unknown;
    Subspace submodule;  // set when kind == proper
  };

  struct MeatAxeOptions {
    std::uint64_t seed     = 0x6d656174;
    std::size_t   attempts = 64;
  };

  /// Finds a proper nonzero submodule or certifies irreducibility.
  Split split(Module const& m, std::mt19937_64& rng,
              MeatAxeOptions const& opts = {});

  /// An irreducible submodule of a nonzero module, or nullopt when the
  /// splitter gives up.
  std::optional<Subspace> irreducible_submodule(Module const&         m,
                                                std::mt19937_64&      rng,
                                                MeatAxeOptions const& opts = {});

  /// Hom_A(T, M) as a basis of matrices X (dim M x dim T) with
  /// M_g X = X T_g for every generator g.
  std::vector<QMatrix> homomorphisms(Module const& t, Module const& m);
  bool                 isomorphic(Module const& a, Module const& b);

  /// Composition factors of m (one per step of a composition series), or
  /// nullopt when the splitter gives up.
  std::optional<std::vector<Module>> composition_factors(
      Module const& m, std::mt19937_64& rng, MeatAxeOptions const& opts = {});

  /// One isotypic component of the socle.
  struct SocleComponent {
    Module   simple;        // representative simple module T
    Subspace trace;         // sum of all images of T in M
    std::size_t multiplicity = 0;
    /// When multiplicity >= 2: two distinct submodules isomorphic to T.
    std::optional<std::pair<Subspace, Subspace>> witness;
  };

  std::optional<std::vector<SocleComponent>> socle(
      Module const& m, std::mt19937_64& rng, MeatAxeOptions const& opts = {});

}  // namespace pbp

#endif  // PBP_MODULE_HPP_
