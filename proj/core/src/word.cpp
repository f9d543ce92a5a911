#include "pbp/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "pbp/error.hpp"

namespace pbp {

  Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto const& l : w) {
      if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  bool is_freely_reduced(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i].gen == w[i - 1].gen && w[i].sign == -w[i - 1].sign) {
        return false;
      }
    }
    return true;
  }

  Word inverse(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return out;
  }

  Word multiply(Word const& a, Word const& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return free_reduce(w);
  }

  Word power(std::size_t gen, long k) {
    return Word(static_cast<std::size_t>(std::abs(k)),
                Letter{gen, k < 0 ? -1 : 1});
  }

  Word commutator(Word const& a, Word const& b) {
    return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
  }

  long exponent_sum(Word const& w, std::size_t gen) {
    long s = 0;
    for (auto const& l : w) {
      if (l.gen == gen) {
        s += l.sign;
      }
    }
    return s;
  }

  Word parse_word(std::string const& text,
                  std::vector<std::string> const& names) {
    std::istringstream in(text);
    std::string        token;
    Word               w;
    while (in >> token) {
      if (token == "1") {
        continue;
      }
      std::string name = token;
      long        exp  = 1;
      auto        hat  = token.find('^');
      if (hat != std::string::npos) {
        name             = token.substr(0, hat);
        std::string e    = token.substr(hat + 1);
        char const* last = e.data() + e.size();
        auto [ptr, ec]   = std::from_chars(e.data(), last, exp);
        if (ec != std::errc() || ptr != last || e.empty()) {
          throw InvalidInput("malformed exponent in token '" + token + "'");
        }
        if (exp == 0) {
          throw InvalidInput("zero exponent in token '" + token + "'");
        }
      }
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        throw InvalidInput("unknown generator '" + name + "'");
      }
      Word p = power(static_cast<std::size_t>(it - names.begin()), exp);
      w.insert(w.end(), p.begin(), p.end());
    }
    return w;
  }

  std::string to_string(Word const& w, std::vector<std::string> const& names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      long k = static_cast<long>(j - i) * w[i].sign;
      if (!out.empty()) {
        out += ' ';
      }
      out += w[i].gen < names.size() ? names[w[i].gen]
                                     : "g" + std::to_string(w[i].gen);
      if (k != 1) {
        out += '^' + std::to_string(k);
      }
      i = j;
    }
    return out;
  }

  namespace {
    std::vector<std::string> default_names(std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back("g" + std::to_string(i));
      }
      return names;
    }
  }  // namespace

  FinitePresentation::FinitePresentation(std::size_t       generators,
                                         std::vector<Word> relators)
      : FinitePresentation(default_names(generators), std::move(relators)) {}

  FinitePresentation::FinitePresentation(std::vector<std::string> names,
                                         std::vector<Word>        relators)
      : _names(std::move(names)) {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (_names[i] == _names[j]) {
          throw InvalidInput("duplicate generator name '" + _names[i] + "'");
        }
      }
    }
    _relators.reserve(relators.size());
    for (auto const& r : relators) {
      for (auto const& l : r) {
        if (l.gen >= _names.size() || (l.sign != 1 && l.sign != -1)) {
          throw InvalidInput("relator letter out of range");
        }
      }
      _relators.push_back(free_reduce(r));
    }
  }

  long deficiency_count(FinitePresentation const& p) {
    return static_cast<long>(p.generator_count())
           - static_cast<long>(p.relator_count());
  }

  std::pair<long, long> rs_counts(long a, long b, long d) {
    return {(a - 1) * d + 1, b * d};
  }

  std::vector<long> kunneth_betti(std::vector<long> const& a,
                                  std::vector<long> const& b) {
    if (a.empty() || b.empty()) {
      return {};
    }
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        c[i + j] += a[i] * b[j];
      }
    }
    return c;
  }

  long kunneth_bound(long k, long l) {
    auto b = kunneth_betti({1, k}, {1, l});
    return b[1] - b[2];
  }

}  // namespace pbp
