#ifndef PBP_BS_HPP_
#define PBP_BS_HPP_

// Baumslag-Solitar groups BS(m, n) = < s, t | t s^m t^-1 = s^n >.
// Words use generator 0 for s and 1 for t.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pbp/coset.hpp"
#include "pbp/linalg.hpp"
#include "pbp/verdict.hpp"
#include "pbp/word.hpp"

namespace pbp {

  struct BSGroup {
    long m;
    long n;

    /// Throws ZeroParameter unless both parameters are nonzero.
    BSGroup(long m, long n);

    /// < s, t | t s^m t^-1 s^-n >
    FinitePresentation presentation() const;
    /// t s^m t^-1 s^-n
    Word relator() const;
  };

  inline constexpr std::size_t bs_s = 0;
  inline constexpr std::size_t bs_t = 1;

  /// s^k0 t^e1 s^k1 ... t^el s^kl, pinch free, with each k_i (i >= 1) in
  /// [0, |m|) after t and in [0, |n|) after t^-1.
  struct BrittonForm {
    std::vector<long> exponents;  // l + 1 entries
    std::vector<int>  signs;      // l entries

    std::size_t t_length() const noexcept { return signs.size(); }
    bool        is_identity() const noexcept {
      return signs.empty() && exponents.front() == 0;
    }
    Word        to_word() const;
    std::string to_string() const;

    friend bool operator==(BrittonForm const&, BrittonForm const&) = default;
  };

  /// Pinch reduction by a stack followed by right-to-left normalisation of
  /// the interior exponents.
  BrittonForm britton_reduce(BSGroup const& g, Word const& w);

  /// Applies pinches in a random order until none is left, then normalises.
  /// Used to test that the result does not depend on the rewriting order.
  BrittonForm britton_reduce_random(BSGroup const&   g,
                                    Word const&      w,
                                    std::mt19937_64& rng);

  /// s^m, T = {s^i t s^-i : 0 <= i < m}, a free basis of the even-length
  /// subgroup F_II of the free group on T, and the map pi onto C_m x D.
  struct SubgroupWitness {
    long              m   = 0;
    int               eta = 1;
    Word              zs_generator;
    std::vector<Word> transversal;  // T as words in s, t
    /// Free basis of F_II as words in the letters of T (generator i = T_i).
    std::vector<Word> fii_basis_t;
    /// The same basis as words in s, t.
    std::vector<Word> fii_basis;
    /// pi as permutations of m + 2 points: s cycles 0..m-1, t swaps m, m+1.
    PermutationTarget pi;
  };

  SubgroupWitness witness_subgroup(long m, int eta);

  struct PiImage {
    long c;        // exponent of c in C_m, in [0, modulus)
    int  d;        // exponent of d in D
    long modulus;  // m

    friend bool operator==(PiImage const&, PiImage const&) = default;
  };

  /// Requires |m| = |n|.
  PiImage pi_image(BSGroup const& g, Word const& w);
  /// Throws InvalidInput when the moduli differ.
  PiImage operator*(PiImage const& a, PiImage const& b);

  struct WitnessReport {
    bool                     commute   = false;  // (a)
    bool                     in_kernel = false;  // (b)
    std::size_t              index     = 0;      // (c)
    bool                     index_ok  = false;
    bool                     free      = false;  // (d)
    std::size_t              words_checked = 0;
    std::size_t              length_bound  = 0;
    AbelianInvariants        kernel_abelianization;  // (e)
    bool                     abelianization_ok = false;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
  };

  /// Requires |m| = |n| >= 2.
  WitnessReport verify_witness(BSGroup const&         g,
                               SubgroupWitness const& w,
                               std::size_t            length_bound);

  struct BSVerdict {
    Verdict                        verdict;
    std::optional<SubgroupWitness> witness;
    std::optional<WitnessReport>   report;
  };

  /// The default freeness bound used by bs_presentable.
  std::size_t default_verify_bound(long m);

  BSVerdict bs_presentable(long m, long n,
                           std::optional<std::size_t> verify_bound = {});

  /// s -> [[1, 1], [0, 1]], t -> [[n, 0], [0, 1]]; requires |n| >= 2.
  QMatrix affine_rep(long n, Word const& w);

}  // namespace pbp

#endif  // PBP_BS_HPP_
