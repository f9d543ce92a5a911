#ifndef PBP_CLASSIFIER_HPP_
#define PBP_CLASSIFIER_HPP_

// A rules engine mapping group descriptors to presentability verdicts.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pbp/coxeter.hpp"
#include "pbp/verdict.hpp"
#include "pbp/word.hpp"

namespace pbp {

  enum class Ends { zero, one, two, infinitely_many };
  enum class Centre { finite, infinite };

  /// F_k x F_l; F_1 is Z and F_0 is trivial, so Z is {1, 0}.
  struct VirtualForm {
    long k = 0;
    long l = 0;

    bool        infinite_cyclic() const noexcept;
    std::string to_string() const;

    friend bool operator==(VirtualForm const&, VirtualForm const&) = default;
  };

  /// User-asserted facts; absent means unknown.
  struct Flags {
    std::optional<bool>        infinite;
    std::optional<bool>        finitely_generated;
    std::optional<bool>        finitely_presented;
    std::optional<bool>        schreier;
    std::optional<Ends>        ends;
    std::optional<long>        vcd;
    std::optional<long>        deficiency;
    std::optional<bool>        l2_betti1_positive;
    std::optional<bool>        hyperbolic;
    std::optional<bool>        elementary;
    std::optional<bool>        simple;
    std::optional<Centre>      centre;
    std::optional<bool>        three_manifold;
    std::optional<bool>        seifert;
    std::optional<VirtualForm> virtually;

    friend bool operator==(Flags const&, Flags const&) = default;
  };

  struct GroupDescriptor;

  struct CoxeterKind {
    CoxeterMatrix matrix;
  };
  struct BSKind {
    long m;
    long n;
  };
  /// Factor orders, 0 meaning infinite.
  struct FreeProductKind {
    std::vector<unsigned long> orders;
  };
  struct DirectProductKind {
    std::size_t count;
  };
  struct FlaggedKind {
    std::optional<FinitePresentation> presentation;
    Flags                             flags;
  };
  /// A group containing `inner` as a subgroup of finite index.
  struct VirtuallyKind {
    std::shared_ptr<GroupDescriptor const> inner;
  };

  struct GroupDescriptor {
    std::variant<CoxeterKind,
                 BSKind,
                 FreeProductKind,
                 DirectProductKind,
                 FlaggedKind,
                 VirtuallyKind>
        kind;
  };

  /// Throws InconsistentInput on contradictory flags.
  void check_consistency(Flags const& f);

  /// The rule identifiers in priority order.
  std::vector<std::string> const& classifier_rules();

  /// Structured kinds delegate; flag rules fire in the order of
  /// classifier_rules() and the first one decides. Any other firing rule
  /// with an incompatible conclusion raises InconsistentInput. A YES next
  /// to a NO qualified by not_by_fg_product is compatible and yields a
  /// qualified YES.
  Verdict classify(GroupDescriptor const& d);

}  // namespace pbp

#endif  // PBP_CLASSIFIER_HPP_
