#ifndef PBP_JSON_IO_HPP_
#define PBP_JSON_IO_HPP_

// JSON readers and writers for the command line formats. Every reader
// throws InvalidInput on malformed data.

#include <string>

#include <nlohmann/json.hpp>

#include "pbp/abels.hpp"
#include "pbp/bs.hpp"
#include "pbp/classifier.hpp"
#include "pbp/coset.hpp"
#include "pbp/coxeter.hpp"
#include "pbp/ideal_lattice.hpp"
#include "pbp/lie.hpp"
#include "pbp/word.hpp"

namespace pbp {

  using json = nlohmann::json;

  /// Parses a file; errors name the path.
  json read_json_file(std::string const& path);

  /// {"generators": ["s", "t"], "relators": ["t s^2 t^-1 s^-2"]}
  FinitePresentation parse_presentation(json const& j);
  json               to_json(FinitePresentation const& p);

  /// {"n": 3, "m": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]}, "inf" off-diagonal.
  CoxeterMatrix parse_coxeter(json const& j);
  json          to_json(CoxeterMatrix const& m);

  /// {"dim": 3, "basis": ["e", "f", "g"],
  ///  "brackets": [{"x": "g", "y": "e", "value": {"e": "1"}}]}
  LieAlgebra parse_algebra(json const& j);
  json       to_json(LieAlgebra const& l);

  /// {"degree": 3, "images": {"s": [1, 2, 0], "t": [0, 1, 2]}}: images of
  /// the presentation's generators as permutations of 0..degree-1, in
  /// image notation (point i goes to images[i]).
  PermutationTarget parse_permutation_target(json const& j, FinitePresentation const& p);

  /// {"kind": "coxeter", "matrix": {...}} or {"kind": "coxeter", "name": "~A2"},
  /// {"kind": "bs", "m": 2, "n": 3}, {"kind": "free-product", "orders": [2, "inf"]},
  /// {"kind": "direct-product", "count": 2},
  /// {"kind": "flagged", "presentation": {...}, "flags": {...}},
  /// {"kind": "virtually", "of": {...}}.
  GroupDescriptor parse_descriptor(json const& j);
  Flags           parse_flags(json const& j);

  /// The verdict plus per-component signatures and types.
  nlohmann::ordered_json to_json(CoxeterVerdict const& v);
  /// The verdict plus, when requested, the witness and its check report.
  nlohmann::ordered_json to_json(BSVerdict const& v, bool with_witness);
  /// The verdict plus the ideal lattice status and the ideals found.
  nlohmann::ordered_json to_json(LieAlgebra const& l, LiePresentability const& r);

}  // namespace pbp

#endif  // PBP_JSON_IO_HPP_
