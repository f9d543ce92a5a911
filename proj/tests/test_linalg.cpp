#include <catch2/catch.hpp>

#include "pbp/error.hpp"
#include "pbp/linalg.hpp"

using namespace pbp;

TEST_CASE("rational parsing", "[linalg]") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("rank, nullspace and determinant", "[linalg]") {
  QMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  CHECK(determinant(QMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(determinant(QMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(rank(QMatrix::identity(4)) == 4);
}

TEST_CASE("matrix arithmetic", "[linalg]") {
  QMatrix a{{1, 2}, {3, 4}};
  QMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == QMatrix{{2, 1}, {4, 3}});
  CHECK(a + b - b == a);
  CHECK((a * QMatrix::identity(2)) == a);
  CHECK(a.transpose() == QMatrix{{1, 3}, {2, 4}});
  CHECK((Rational(1, 2) * a)(1, 1) == 2);
}

TEST_CASE("subspaces have canonical bases", "[linalg]") {
  Subspace a(3, {{1, 1, 0}, {0, 1, 1}});
  Subspace b(3, {{1, 0, -1}, {2, 3, 1}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  Subspace c(3, {{0, 0, 1}});
  CHECK((a + c).is_whole());
  CHECK(a.intersect(c).is_zero());
  Subspace d(3, {{1, 0, 0}});
  CHECK(a.intersect(Subspace(3, {{1, 0, 0}, {0, 1, 0}})) == Subspace(3, {{1, 1, 0}}));
  CHECK(a.contains(QVector{2, 1, -1}));
  CHECK(!a.contains(QVector{1, 0, 0}));
  CHECK(a.contains(Subspace(3, {{1, 1, 0}})));
  QVector co = a.coordinates(QVector{2, 1, -1});
  QVector back(3);
  for (std::size_t i = 0; i < co.size(); ++i) {
    back = add(back, scale(co[i], a.basis()[i]));
  }
  CHECK(back == QVector{2, 1, -1});
  CHECK(!(d == a));
}
