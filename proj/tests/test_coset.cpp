#include <numeric>

#include <catch2/catch.hpp>

#include "pbp/bs.hpp"
#include "pbp/coset.hpp"
#include "pbp/error.hpp"
#include "support.hpp"

using namespace pbp;

namespace {

  // Determinant by cofactor expansion over the integers.
  Integer minor_det(std::vector<std::vector<Integer>> const& m,
                    std::vector<std::size_t> const& rows,
                    std::vector<std::size_t> const& cols) {
    if (rows.size() == 1) {
      return m[rows[0]][cols[0]];
    }
    Integer                  total = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<std::size_t> sub_cols;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (k != j) {
          sub_cols.push_back(cols[k]);
        }
      }
      Integer term = m[rows[0]][cols[j]] * minor_det(m, sub_rows, sub_cols);
      total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
  }

  void subsets(std::size_t n, std::size_t k, std::size_t start,
               std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      subsets(n, k, i + 1, cur, out);
      cur.pop_back();
    }
  }

  // Invariant factors as quotients of successive determinantal divisors.
  std::vector<Integer> smith_oracle(std::vector<std::vector<Integer>> const& m) {
    std::size_t const    rows = m.size();
    std::size_t const    cols = rows ? m[0].size() : 0;
    std::vector<Integer> out;
    Integer              prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      std::vector<std::vector<std::size_t>> rs, cs;
      std::vector<std::size_t>              cur;
      subsets(rows, k, 0, cur, rs);
      subsets(cols, k, 0, cur, cs);
      Integer g = 0;
      for (auto const& r : rs) {
        for (auto const& c : cs) {
          Integer d = minor_det(m, r, c);
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
      }
      if (g == 0) {
        break;
      }
      out.push_back(g / prev);
      prev = g;
    }
    return out;
  }

  std::vector<std::string> const st{"s", "t"};

  PermutationTarget pi_target(long m) {
    PermutationTarget t;
    t.degree = static_cast<std::size_t>(m) + 2;
    Permutation s(t.degree), tt(t.degree);
    for (std::size_t i = 0; i < t.degree; ++i) {
      s[i] = tt[i] = i;
    }
    for (long i = 0; i < m; ++i) {
      s[i] = static_cast<std::size_t>((i + 1) % m);
    }
    std::swap(tt[m], tt[m + 1]);
    t.images = {s, tt};
    return t;
  }

}  // namespace

TEST_CASE("coset enumeration of small kernels", "[coset]") {
  FinitePresentation bs22 = BSGroup(2, 2).presentation();
  CHECK(coset_enumerate(bs22, pi_target(2)).cosets == 4);

  FinitePresentation c3({"s"}, {parse_word("s^3", {"s"})});
  CHECK(coset_enumerate(c3, {3, {{1, 2, 0}}}).cosets == 3);

  FinitePresentation z2({"a", "b"}, {parse_word("a b a^-1 b^-1", {"a", "b"})});
  CHECK(coset_enumerate(z2, {2, {{1, 0}, {0, 1}}}).cosets == 2);
}

TEST_CASE("coset enumeration rejects non-homomorphisms and respects the cap", "[coset]") {
  FinitePresentation c3({"s"}, {parse_word("s^3", {"s"})});
  CHECK_THROWS_AS(coset_enumerate(c3, {2, {{1, 0}}}), RelatorNotKilled);
  CHECK_THROWS_AS(coset_enumerate(c3, {3, {{1, 1, 0}}}), InvalidInput);
  FinitePresentation f1(1, {});
  CHECK_THROWS_AS(coset_enumerate(f1, {5, {{1, 2, 3, 4, 0}}}, 3), BoundExceeded);
}

TEST_CASE("coset tables are closed, bijective and transitive", "[coset]") {
  FinitePresentation bs33 = BSGroup(3, -3).presentation();
  CosetTable         t    = coset_enumerate(bs33, pi_target(3));
  CHECK(t.cosets == 6);
  CHECK_NOTHROW(validate(bs33, t));
  CosetTable broken = t;
  std::swap(broken.action[0][0], broken.action[0][1]);
  CHECK_THROWS_AS(validate(bs33, broken), InvalidInput);
}

TEST_CASE("Schreier generators lie in the kernel and have the Nielsen-Schreier count", "[coset]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t const  a = 2 + trial % 3;
    FinitePresentation f(a, {});
    PermutationTarget  target{4, {}};
    for (std::size_t g = 0; g < a; ++g) {
      target.images.push_back(test::random_permutation(4, rng));
    }
    CosetTable t    = coset_enumerate(f, target);
    auto       gens = schreier_generators(t);
    CHECK(gens.size() == (a - 1) * t.cosets + 1);
    for (auto const& g : gens) {
      CHECK(is_identity(image(target, g)));
    }
  }
}

TEST_CASE("Schreier transversal is BFS ordered and prefix closed", "[coset]") {
  FinitePresentation bs22 = BSGroup(2, 2).presentation();
  auto               tr   = schreier_transversal(coset_enumerate(bs22, pi_target(2)));
  REQUIRE(tr.representative.size() == 4);
  CHECK(tr.representative[0].empty());
  for (std::size_t c = 1; c < tr.representative.size(); ++c) {
    CHECK(tr.representative[c].size() >= tr.representative[c - 1].size());
    Word prefix(tr.representative[c].begin(), tr.representative[c].end() - 1);
    bool found = false;
    for (auto const& r : tr.representative) {
      found = found || r == prefix;
    }
    CHECK(found);
  }
}

TEST_CASE("Reidemeister-Schreier presentations have the predicted size", "[coset]") {
  FinitePresentation bs22 = BSGroup(2, 2).presentation();
  FinitePresentation sub  = reidemeister_schreier(bs22, coset_enumerate(bs22, pi_target(2)));
  CHECK(sub.generator_count() == 5);
  CHECK(sub.relator_count() == 4);

  FinitePresentation z(std::vector<std::string>{"s"}, {});
  FinitePresentation z3 = reidemeister_schreier(z, coset_enumerate(z, {3, {{1, 2, 0}}}));
  CHECK(z3.generator_count() == 1);
  CHECK(z3.relator_count() == 0);

  FinitePresentation f2(2, {});
  FinitePresentation k = reidemeister_schreier(f2, coset_enumerate(f2, {2, {{1, 0}, {1, 0}}}));
  CHECK(k.generator_count() == 3);
  CHECK(k.relator_count() == 0);
}

TEST_CASE("abelianization examples", "[coset]") {
  CHECK(abelianization(BSGroup(2, 3).presentation()) == AbelianInvariants{1, {}});
  FinitePresentation bs22 = BSGroup(2, 2).presentation();
  auto ab = abelianization(reidemeister_schreier(bs22, coset_enumerate(bs22, pi_target(2))));
  CHECK(ab == AbelianInvariants{4, {}});
  FinitePresentation c4({"a"}, {parse_word("a^4", {"a"})});
  CHECK(abelianization(c4) == AbelianInvariants{0, {Integer(4)}});
  FinitePresentation c2c6({"a", "b"}, {parse_word("a^2", {"a", "b"}),
                                       parse_word("b^6", {"a", "b"}),
                                       parse_word("a b a^-1 b^-1", {"a", "b"})});
  CHECK(abelianization(c2c6) == AbelianInvariants{0, {Integer(2), Integer(6)}});
}

TEST_CASE("abelianization ignores relator order, inversion and rotation", "[coset]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Word> rels;
    for (int r = 0; r < 3; ++r) {
      rels.push_back(test::random_word(3, 3 + rng() % 6, rng));
    }
    AbelianInvariants base = abelianization(FinitePresentation(3, rels));
    std::vector<Word> changed = rels;
    std::shuffle(changed.begin(), changed.end(), rng);
    changed[0] = inverse(changed[0]);
    std::rotate(changed[1].begin(), changed[1].begin() + 1, changed[1].end());
    CHECK(abelianization(FinitePresentation(3, changed)) == base);
  }
}

TEST_CASE("finite-index subgroups of Z^2 are free abelian of rank 2", "[coset]") {
  FinitePresentation z2({"a", "b"}, {parse_word("a b a^-1 b^-1", {"a", "b"})});
  std::vector<PermutationTarget> quotients = {
      {2, {{1, 0}, {0, 1}}},
      {3, {{1, 2, 0}, {1, 2, 0}}},
      {4, {{1, 2, 3, 0}, {2, 3, 0, 1}}},
      {4, {{1, 0, 3, 2}, {2, 3, 0, 1}}},
      {6, {{1, 2, 0, 4, 5, 3}, {3, 4, 5, 0, 1, 2}}},
      {5, {{1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}}},
  };
  for (auto const& q : quotients) {
    CosetTable t = coset_enumerate(z2, q);
    CHECK(abelianization(reidemeister_schreier(z2, t)).free_rank == 2);
  }
}

TEST_CASE("Smith invariants agree with determinantal divisors", "[coset][snf]") {
  std::mt19937_64                     rng(2024);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const rows = 1 + rng() % 4;
    std::size_t const cols = 1 + rng() % 4;
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (auto& row : m) {
      for (auto& x : row) {
        x = entry(rng);
      }
    }
    if (trial % 5 == 0 && rows > 1) {
      for (std::size_t j = 0; j < cols; ++j) {
        m[rows - 1][j] = 2 * m[0][j];
      }
    }
    std::vector<Integer> got    = smith_invariants(m);
    std::vector<Integer> expect = smith_oracle(m);
    for (auto& g : got) {
      g = abs(g);
    }
    CHECK(got == expect);
  }
}
