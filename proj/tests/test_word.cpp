#include <catch2/catch.hpp>

#include "pbp/error.hpp"
#include "pbp/word.hpp"
#include "support.hpp"

using namespace pbp;

namespace {
  std::vector<std::string> const st{"s", "t"};

  Word w(std::string const& text) { return parse_word(text, st); }
}  // namespace

TEST_CASE("free_reduce cancels adjacent inverse pairs", "[word]") {
  CHECK(free_reduce(w("s t t^-1 s")) == w("s^2"));
  CHECK(free_reduce(Word{}).empty());
  CHECK(free_reduce(w("s^-1 s t")) == w("t"));
  CHECK(free_reduce(w("s t s^-1 t^-1")).size() == 4);
}

TEST_CASE("free_reduce is idempotent and never lengthens, up to length 12", "[word][exhaustive]") {
  std::size_t failures = 0;
  for (std::size_t len = 0; len <= 12; ++len) {
    test::for_each_word(2, len, [&](Word const& x) {
      Word r = free_reduce(x);
      if (r.size() > x.size() || free_reduce(r) != r || !is_freely_reduced(r)) {
        ++failures;
      }
    });
  }
  CHECK(failures == 0);
}

TEST_CASE("word parsing and printing", "[word]") {
  CHECK(w("1").empty());
  CHECK(w("").empty());
  CHECK(w("t s^2 t^-1 s^-2").size() == 6);
  CHECK(to_string(w("t s^2 t^-1 s^-2"), st) == "t s^2 t^-1 s^-2");
  CHECK(to_string(Word{}, st) == "1");
  CHECK_THROWS_AS(w("u"), InvalidInput);
  CHECK_THROWS_AS(w("s^0"), InvalidInput);
}

TEST_CASE("word operations", "[word]") {
  Word a = w("s t^2");
  CHECK(multiply(a, inverse(a)).empty());
  CHECK(power(1, -3).size() == 3);
  CHECK(exponent_sum(w("t s^2 t^-1 s^-3"), 0) == -1);
  CHECK(exponent_sum(w("t s^2 t^-1 s^-3"), 1) == 0);
  CHECK(commutator(w("s"), w("s")).empty());
  CHECK(commutator(w("s"), w("t")) == w("s t s^-1 t^-1"));
}

TEST_CASE("deficiency of a presentation", "[word]") {
  FinitePresentation bs({"s", "t"}, {w("t s^2 t^-1 s^-2")});
  CHECK(deficiency_count(bs) == 1);
  CHECK(deficiency_count(FinitePresentation(4, {})) == 4);
  FinitePresentation c5({"a"}, {parse_word("a^5", {"a"})});
  CHECK(deficiency_count(c5) == 0);
}

TEST_CASE("Reidemeister-Schreier counts", "[word]") {
  CHECK(rs_counts(2, 1, 4) == std::pair<long, long>{5, 4});
  CHECK(rs_counts(1, 0, 3) == std::pair<long, long>{1, 0});
  for (long d = 1; d <= 20; ++d) {
    for (long a = 1; a <= 6; ++a) {
      auto [ga, gb] = rs_counts(a, a - 1, d);
      CHECK(ga - gb == 1);
    }
  }
}

TEST_CASE("Kunneth Betti numbers of F_k x F_l", "[word]") {
  CHECK(kunneth_betti({1, 2}, {1, 3}) == std::vector<long>{1, 5, 6});
  CHECK(kunneth_betti({1, 1}, {1, 1}) == std::vector<long>{1, 2, 1});
  for (long k = 1; k <= 10; ++k) {
    for (long l = 1; l <= 10; ++l) {
      CHECK(kunneth_bound(k, l) == k + l - k * l);
    }
  }
  CHECK(kunneth_bound(1, 1) == 1);
  CHECK(kunneth_bound(2, 2) == 0);
}
