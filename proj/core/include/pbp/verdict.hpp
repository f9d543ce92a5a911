#ifndef PBP_VERDICT_HPP_
#define PBP_VERDICT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pbp {

  enum class Answer { yes, no, not_applicable, unknown };

  /// "YES", "NO", "NOT_APPLICABLE" or "UNKNOWN".
  std::string to_string(Answer a);
  Answer      parse_answer(std::string const& s);

  struct TraceEntry {
    std::string rule;
    std::string cite;

    friend bool operator==(TraceEntry const&, TraceEntry const&) = default;
  };

  inline constexpr char const* not_by_fg_product =
      "not by a product of finitely generated groups";

  struct Verdict {
    Answer                     answer = Answer::unknown;
    std::optional<std::string> qualifier;
    nlohmann::ordered_json     certificate;  // null when absent
    std::vector<TraceEntry>    trace;
  };

  /// {"answer", "qualifier", "certificate", "trace": [{"rule", "cite"}]}
  nlohmann::ordered_json to_json(Verdict const& v);

  /// One line per trace entry, in trace order.
  std::string explain(Verdict const& v);

}  // namespace pbp

#endif  // PBP_VERDICT_HPP_
