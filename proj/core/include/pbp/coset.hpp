#ifndef PBP_COSET_HPP_
#define PBP_COSET_HPP_

// Coset tables of finite-index kernels, Reidemeister-Schreier rewriting and
// abelian invariants.

#include <cstddef>
#include <vector>

#include "pbp/linalg.hpp"
#include "pbp/word.hpp"

namespace pbp {

  using Permutation = std::vector<std::size_t>;

  /// A finite permutation group given by the images of the generators of a
  /// presentation, acting on the right: x^(ab) = (x^a)^b.
  struct PermutationTarget {
    std::size_t              degree = 0;
    std::vector<Permutation> images;
  };

  Permutation compose(Permutation const& a, Permutation const& b);
  Permutation image(PermutationTarget const& target, Word const& w);
  bool        is_identity(Permutation const& p);

  struct CosetTable {
    std::size_t cosets = 0;
    /// action[g][c] is the coset c . g
    std::vector<std::vector<std::size_t>> action;

    std::size_t apply(std::size_t coset, Letter l) const;
    std::size_t apply(std::size_t coset, Word const& w) const;
  };

  /// Throws InvalidInput if some generator does not act bijectively, some
  /// relator fixes not every coset, or the action is not transitive.
  void validate(FinitePresentation const& p, CosetTable const& t);

  inline constexpr std::size_t default_coset_cap = 1'000'000;

  /// The coset table of the kernel of the homomorphism generator -> image.
  /// Cosets are the elements of the image subgroup, numbered in BFS order
  /// from the identity.
  CosetTable coset_enumerate(FinitePresentation const& p,
                             PermutationTarget const&  target,
                             std::size_t               cap = default_coset_cap);

  /// Schreier transversal by breadth-first search from coset 0, scanning
  /// letters in the order g0, g0^-1, g1, g1^-1, ...
  struct SchreierTransversal {
    /// representative[c] is the transversal word of coset c.
    std::vector<Word> representative;
    /// tree[g][c] is true when the edge c --g--> c.g lies in the spanning tree.
    std::vector<std::vector<bool>> tree;
    /// The non-tree edges (c, g) in increasing (c, g) order; edge i becomes
    /// subgroup generator i.
    std::vector<std::pair<std::size_t, std::size_t>> generators;
  };

  SchreierTransversal schreier_transversal(CosetTable const& t);

  /// The Schreier generators as words in the parent group, in the order of
  /// SchreierTransversal::generators.
  std::vector<Word> schreier_generators(CosetTable const& t);

  /// Presentation of the subgroup with (a-1)d+1 generators and bd relators:
  /// every relator rewritten from every coset, none discarded.
  FinitePresentation reidemeister_schreier(FinitePresentation const& p,
                                           CosetTable const&         t);

  struct AbelianInvariants {
    std::size_t          free_rank = 0;
    std::vector<Integer> torsion;  // each entry >= 2 and dividing the next

    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;
  };

  /// Nonzero diagonal entries of the Smith normal form, each dividing the
  /// next (units included).
  std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m);

  AbelianInvariants abelianization(FinitePresentation const& p);

}  // namespace pbp

#endif  // PBP_COSET_HPP_
