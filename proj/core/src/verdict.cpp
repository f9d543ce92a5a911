#include "pbp/verdict.hpp"

#include <sstream>

#include "pbp/error.hpp"

namespace pbp {

  std::string to_string(Answer a) {
    switch (a) {
      case Answer::yes: return "YES";
      case Answer::no: return "NO";
      case Answer::not_applicable: return "NOT_APPLICABLE";
      case Answer::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  Answer parse_answer(std::string const& s) {
    for (Answer a : {Answer::yes, Answer::no, Answer::not_applicable,
                     Answer::unknown}) {
      if (to_string(a) == s) {
        return a;
      }
    }
    throw InvalidInput("unknown answer '" + s + "'");
  }

  nlohmann::ordered_json to_json(Verdict const& v) {
    nlohmann::ordered_json j;
    j["answer"]    = to_string(v.answer);
    j["qualifier"] = v.qualifier ? nlohmann::ordered_json(*v.qualifier)
                                 : nlohmann::ordered_json(nullptr);
    j["certificate"] = v.certificate;
    j["trace"]       = nlohmann::ordered_json::array();
    for (auto const& t : v.trace) {
      j["trace"].push_back({{"rule", t.rule}, {"cite", t.cite}});
    }
    return j;
  }

  std::string explain(Verdict const& v) {
    std::ostringstream out;
    out << "answer: " << to_string(v.answer);
    if (v.qualifier) {
      out << " (" << *v.qualifier << ")";
    }
    out << '\n';
    if (v.trace.empty()) {
      out << "no applicable rule\n";
    }
    for (auto const& t : v.trace) {
      out << "[" << t.rule << "] " << t.cite << '\n';
    }
    return out.str();
  }

}  // namespace pbp
