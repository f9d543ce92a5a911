#include <random>

#include <catch2/catch.hpp>

#include "pbp/abels.hpp"
#include "pbp/error.hpp"

using namespace pbp;

TEST_CASE("Z[1/p] membership and arithmetic", "[abels]") {
  CHECK(in_zinvp(Rational(5, 9), 3));
  CHECK(!in_zinvp(Rational(5, 6), 3));
  CHECK(in_zinvp(Rational(-7), 2));
  ZInvP a(Rational(1, 3), 3), b(Rational(2, 9), 3);
  CHECK((a + b).value() == Rational(5, 9));
  CHECK((a - b).value() == Rational(1, 9));
  CHECK((a * b).value() == Rational(2, 27));
  CHECK(a.divide_by_power(2).value() == Rational(1, 27));
  CHECK(a.divide_by_power(-1).value() == 1);
  CHECK_THROWS_AS(ZInvP(Rational(1, 2), 3), InvalidInput);
  CHECK_THROWS_AS(a + ZInvP(Rational(1, 2), 2), InvalidInput);

  std::mt19937_64                     rng(53);
  std::uniform_int_distribution<long> num(-50, 50);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int trial = 0; trial < 100; ++trial) {
      Rational x(num(rng)), y(num(rng));
      x /= Rational(Integer(p) * p);
      y /= Rational(Integer(p));
      ZInvP zx(x, p), zy(y, p);
      CHECK(in_zinvp((zx + zy).value(), p));
      CHECK(in_zinvp((zx - zy).value(), p));
      CHECK(in_zinvp((zx * zy).value(), p));
      CHECK(in_zinvp(zx.divide_by_power(3).value(), p));
    }
  }
}

TEST_CASE("A3 matrices are validated", "[abels]") {
  CHECK_THROWS_AS(A3Matrix(4, 0, 0, 0, Unit{1, 1}), InvalidInput);
  CHECK_THROWS_AS(A3Matrix(3, Rational(1, 2), 0, 0, Unit{1, 0}), InvalidInput);
  CHECK_THROWS_AS(A3Matrix::e12(2, 1) * A3Matrix::e12(3, 1), InvalidInput);
}

TEST_CASE("A3 group operations", "[abels]") {
  std::mt19937_64 rng(59);
  A3Matrix        diag = A3Matrix::diagonal(3, Unit{1, 1});
  CHECK(diag.inverse().u() == Unit{1, -1});
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int trial = 0; trial < 200; ++trial) {
      A3Matrix a = random_a3(p, rng), b = random_a3(p, rng), c = random_a3(p, rng);
      CHECK(A3Matrix::identity(p) * a == a);
      CHECK(a * a.inverse() == A3Matrix::identity(p));
      CHECK((a * b) * c == a * (b * c));
      // against plain rational matrix multiplication
      CHECK((a * b).to_matrix() == a.to_matrix() * b.to_matrix());
      CHECK(a.inverse().to_matrix() * a.to_matrix() == QMatrix::identity(3));
      CHECK(commutator(a, b).to_matrix()
            == a.to_matrix() * b.to_matrix() * a.inverse().to_matrix()
                   * b.inverse().to_matrix());
    }
  }
}

TEST_CASE("the centre is the set of matrices commuting with the generators", "[abels]") {
  std::mt19937_64 rng(61);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    auto gens = a3_generators(p);
    for (int trial = 0; trial < 300; ++trial) {
      A3Matrix h       = random_a3(p, rng);
      bool     commute = true;
      for (auto const& g : gens) {
        commute = commute && g * h == h * g;
      }
      CHECK(commute == h.is_central());
    }
    A3Matrix z(p, 0, 0, Rational(7, static_cast<long>(p)), Unit{1, 0});
    CHECK(z.is_central());
    for (int trial = 0; trial < 100; ++trial) {
      A3Matrix h = random_a3(p, rng);
      CHECK(z * h == h * z);
    }
  }
}

TEST_CASE("commutation in Gamma", "[abels]") {
  std::mt19937_64 rng(67);
  A3Matrix        central(3, 0, 0, Rational(2, 9), Unit{1, 0});
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(gamma_commutes(random_a3(3, rng), central));
  }
  A3Matrix g = A3Matrix::diagonal(3, Unit{1, 1});
  CHECK(!gamma_commutes(g, A3Matrix(3, 1, 0, 0, Unit{1, 0})));
  CHECK(gamma_commutes(g, A3Matrix::diagonal(3, Unit{-1, 2})));
  CHECK(!gamma_commutes(A3Matrix::diagonal(5, Unit{1, 1}),
                        A3Matrix(5, 0, Rational(1, 5), 0, Unit{1, 0})));
  // commutator z-entry 1 is trivial in Gamma but not in A3
  A3Matrix x = A3Matrix::e12(2, 1), y = A3Matrix::e23(2, 1);
  CHECK(commutator(x, y).z() == 1);
  CHECK(gamma_commutes(x, y));
  CHECK(!(x * y == y * x));
  A3Matrix yh = A3Matrix::e23(2, Rational(1, 2));
  CHECK(!gamma_commutes(x, yh));
}

TEST_CASE("Gamma elements compare modulo the central integers", "[abels]") {
  GammaElement a(A3Matrix(2, 1, 1, Rational(5, 4), Unit{1, 1}));
  GammaElement b(A3Matrix(2, 1, 1, Rational(-3, 4), Unit{1, 1}));
  CHECK(a == b);
  CHECK(a.lift().z() == Rational(1, 4));
  GammaElement c(A3Matrix(2, 1, 1, Rational(1, 2), Unit{1, 1}));
  CHECK(!(a == c));
  CHECK(gamma_commutes(a, a));
}

TEST_CASE("symbolic acentrality identity", "[abels]") {
  SymbolicReport r = symbolic_acentrality();
  CHECK(r.conjugation);
  CHECK(r.x_entry);
  CHECK(r.y_entry);
  CHECK(r.z_entry);
  CHECK(r.u_entry);
  CHECK(!r.commutator.empty());
}

TEST_CASE("randomised acentrality", "[abels]") {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    auto r = acentral_check(p, Unit{1, 1}, 2000);
    CHECK(r.passed());
    CHECK(r.commuting > 0);
  }
  auto neg = acentral_check(2, Unit{-1, 2}, 1000);
  CHECK(neg.passed());
  CHECK_THROWS_AS(acentral_check(3, Unit{1, 0}, 10), InvalidInput);
  auto j = to_json(acentral_check(3, Unit{1, 1}, 100));
  CHECK(j["symbolic"] == "pass");
  CHECK(j["randomized"] == "pass");
  CHECK(j["counterexamples"].empty());
}
