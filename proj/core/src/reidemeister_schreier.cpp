#include "pbp/coset.hpp"

#include <string>

#include "pbp/error.hpp"

namespace pbp {

  FinitePresentation reidemeister_schreier(FinitePresentation const& p,
                                           CosetTable const&         t) {
    validate(p, t);
    SchreierTransversal st = schreier_transversal(t);
    std::size_t         a  = p.generator_count();

    constexpr std::size_t           none = static_cast<std::size_t>(-1);
    std::vector<std::vector<size_t>> label(a, std::vector<size_t>(t.cosets, none));
    for (std::size_t i = 0; i < st.generators.size(); ++i) {
      auto [c, g]  = st.generators[i];
      label[g][c]  = i;
    }

    std::vector<Word> relators;
    relators.reserve(p.relator_count() * t.cosets);
    for (auto const& r : p.relators()) {
      for (std::size_t start = 0; start < t.cosets; ++start) {
        Word        rewritten;
        std::size_t c = start;
        for (auto const& l : r) {
          if (l.sign > 0) {
            if (label[l.gen][c] != none) {
              rewritten.push_back(Letter{label[l.gen][c], 1});
            }
            c = t.action[l.gen][c];
          } else {
            std::size_t d = t.apply(c, l);
            if (label[l.gen][d] != none) {
              rewritten.push_back(Letter{label[l.gen][d], -1});
            }
            c = d;
          }
        }
        if (c != start) {
          throw VerificationFailure("relator does not close up at a coset");
        }
        relators.push_back(std::move(rewritten));
      }
    }

    std::vector<std::string> names;
    for (std::size_t i = 0; i < st.generators.size(); ++i) {
      names.push_back("y" + std::to_string(i));
    }
    return FinitePresentation(std::move(names), std::move(relators));
  }

}  // namespace pbp
