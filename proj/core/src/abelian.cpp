#include "pbp/coset.hpp"

#include <utility>

namespace pbp {

  std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m) {
    std::vector<Integer> diag;
    std::size_t          rows = m.size();
    std::size_t          cols = rows == 0 ? 0 : m[0].size();

    for (std::size_t t = 0; t < rows && t < cols; ++t) {
      while (true) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (m[i][j] != 0
                && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
              pi = i;
              pj = j;
            }
          }
        }
        if (pi == rows) {
          return diag;
        }
        std::swap(m[t], m[pi]);
        for (auto& row : m) {
          std::swap(row[t], row[pj]);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (m[i][t] == 0) {
            continue;
          }
          Integer q = m[i][t] / m[t][t];
          for (std::size_t j = t; j < cols; ++j) {
            m[i][j] -= q * m[t][j];
          }
          clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[t][j] == 0) {
            continue;
          }
          Integer q = m[t][j] / m[t][t];
          for (std::size_t i = t; i < rows; ++i) {
            m[i][j] -= q * m[i][t];
          }
          clean = clean && m[t][j] == 0;
        }
        if (!clean) {
          continue;
        }
        // Enforce the divisibility chain.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) {
                m[t][k] += m[i][k];
              }
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          break;
        }
      }
      diag.push_back(abs(m[t][t]));
    }
    return diag;
  }

  AbelianInvariants abelianization(FinitePresentation const& p) {
    std::vector<std::vector<Integer>> m;
    for (auto const& r : p.relators()) {
      std::vector<Integer> row(p.generator_count());
      for (auto const& l : r) {
        row[l.gen] += l.sign;
      }
      m.push_back(std::move(row));
    }
    AbelianInvariants inv;
    auto              diag = smith_invariants(std::move(m));
    inv.free_rank          = p.generator_count() - diag.size();
    for (auto const& d : diag) {
      if (d > 1) {
        inv.torsion.push_back(d);
      }
    }
    return inv;
  }

}  // namespace pbp
