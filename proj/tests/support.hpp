#ifndef PBP_TESTS_SUPPORT_HPP_
#define PBP_TESTS_SUPPORT_HPP_

// Helpers shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pbp/coset.hpp"
#include "pbp/coxeter.hpp"
#include "pbp/word.hpp"

namespace pbp::test {

  /// Letter with index k in the order g0, g0^-1, g1, g1^-1, ...
  inline Letter letter(std::size_t k) {
    return {k / 2, k % 2 == 0 ? 1 : -1};
  }

  /// Calls f on every word of length exactly len over `gens` generators.
  inline void for_each_word(std::size_t gens, std::size_t len,
                            std::function<void(Word const&)> const& f) {
    Word                     w(len);
    std::vector<std::size_t> digit(len, 0);
    std::size_t const        base = 2 * gens;
    while (true) {
      for (std::size_t i = 0; i < len; ++i) {
        w[i] = letter(digit[i]);
      }
      f(w);
      std::size_t i = 0;
      while (i < len && ++digit[i] == base) {
        digit[i++] = 0;
      }
      if (i == len) {
        return;
      }
    }
  }

  inline Word random_word(std::size_t gens, std::size_t len,
                          std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * gens - 1);
    Word                                       w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(letter(pick(rng)));
    }
    return w;
  }

  inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = i;
    }
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

  /// Floating point Tits form, independent of the exact field code.
  inline Eigen::MatrixXd float_tits_form(CoxeterMatrix const& m) {
    double const    pi = 3.14159265358979323846;
    std::size_t const n = m.size();
    Eigen::MatrixXd b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          b(i, j) = 1.0;
        } else if (m.is_infinite(i, j)) {
          b(i, j) = -1.0;
        } else {
          b(i, j) = -std::cos(pi / static_cast<double>(m.at(i, j)));
        }
      }
    }
    return b;
  }

  /// Eigenvalue sign counts with tolerance tol.
  inline Signature float_signature(Eigen::MatrixXd const& b, double tol = 1e-9) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    Signature                                      s;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      double const e = es.eigenvalues()(i);
      if (e > tol) {
        ++s.p;
      } else if (e < -tol) {
        ++s.q;
      } else {
        ++s.r;
      }
    }
    return s;
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

}  // namespace pbp::test

#endif  // PBP_TESTS_SUPPORT_HPP_
