#ifndef PBP_WORD_HPP_
#define PBP_WORD_HPP_

// Free-group words and finite presentations.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pbp {

  struct Letter {
    std::size_t gen;
    int         sign;  // +1 or -1

    Letter inverse() const noexcept { return {gen, -sign}; }
    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  using Word = std::vector<Letter>;

  /// The unique freely reduced word equal to w in the free group.
  Word free_reduce(Word const& w);
  bool is_freely_reduced(Word const& w);
  Word inverse(Word const& w);
  /// Concatenation followed by free reduction.
  Word multiply(Word const& a, Word const& b);
  /// The k-th power of generator gen, k may be negative.
  Word power(std::size_t gen, long k);
  /// Freely reduced a b a^-1 b^-1.
  Word commutator(Word const& a, Word const& b);
  /// Sum of the signs of the occurrences of gen.
  long exponent_sum(Word const& w, std::size_t gen);

  /// Whitespace-separated "name^exp" tokens; "1" or "" is the identity.
  Word parse_word(std::string const& text,
                  std::vector<std::string> const& names);
  /// Inverse of parse_word, grouping runs of equal letters.
  std::string to_string(Word const& w, std::vector<std::string> const& names);

  class FinitePresentation {
   public:
    FinitePresentation() = default;
    /// Generator names default to g0, g1, ...
    FinitePresentation(std::size_t generators, std::vector<Word> relators);
    FinitePresentation(std::vector<std::string> names,
                       std::vector<Word>        relators);

    std::size_t generator_count() const noexcept { return _names.size(); }
    std::size_t relator_count() const noexcept { return _relators.size(); }
    std::vector<std::string> const& names() const noexcept { return _names; }
    std::vector<Word> const& relators() const noexcept { return _relators; }

   private:
    std::vector<std::string> _names;
    std::vector<Word>        _relators;
  };

  /// a - b for this presentation.
  long deficiency_count(FinitePresentation const& p);

  /// Generator and relator counts of the Reidemeister-Schreier presentation
  /// of an index-d subgroup: ((a-1)d+1, bd).
  std::pair<long, long> rs_counts(long a, long b, long d);

  /// Rational Betti numbers of a direct product by the Kunneth formula.
  std::vector<long> kunneth_betti(std::vector<long> const& a,
                                  std::vector<long> const& b);

  /// b1 - b2 of F_k x F_l, the upper bound on the deficiency of a group
  /// with these Betti numbers: k + l - kl.
  long kunneth_bound(long k, long l);

}  // namespace pbp

#endif  // PBP_WORD_HPP_
