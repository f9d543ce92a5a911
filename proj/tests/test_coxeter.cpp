#include <cmath>
#include <random>

#include <catch2/catch.hpp>

#include "pbp/coxeter.hpp"
#include "pbp/error.hpp"
#include "pbp/ideal_lattice.hpp"
#include "support.hpp"

using namespace pbp;
namespace cat = pbp::coxeter_catalogue;

namespace {

  unsigned long const inf = CoxeterMatrix::infinity;

  CoxeterMatrix pair(unsigned long m) {
    return CoxeterMatrix(std::vector<std::vector<unsigned long>>{{1, m}, {m, 1}});
  }

  // Admissible: unit diagonal, symmetric, off-diagonal entries in [-1, 0].
  QMatrix random_admissible(std::size_t n, std::mt19937_64& rng, bool irreducible) {
    std::uniform_int_distribution<int> num(0, 12);
    while (true) {
      QMatrix b = QMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          b(i, j) = b(j, i) = Rational(-num(rng), 12);
        }
      }
      if (!irreducible) {
        return b;
      }
      std::vector<bool>        seen(n, false);
      std::vector<std::size_t> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
          if (!seen[j] && b(i, j) != 0) {
            seen[j] = true;
            stack.push_back(j);
          }
        }
      }
      if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
        return b;
      }
    }
  }

  Eigen::MatrixXd to_eigen(QMatrix const& q) {
    Eigen::MatrixXd m(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i) {
      for (std::size_t j = 0; j < q.cols(); ++j) {
        m(i, j) = q(i, j).get_d();
      }
    }
    return m;
  }

}  // namespace

TEST_CASE("Coxeter matrices are validated", "[coxeter]") {
  using Rows = std::vector<std::vector<unsigned long>>;
  CHECK_THROWS_AS(CoxeterMatrix(Rows{{1, 3}, {2, 1}}), InvalidInput);
  CHECK_THROWS_AS(CoxeterMatrix(Rows{{2, 3}, {3, 1}}), InvalidInput);
  CHECK_THROWS_AS(CoxeterMatrix(Rows{{1, 1}, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(CoxeterMatrix(Rows{{1, 3}}), InvalidInput);
  CHECK_NOTHROW(CoxeterMatrix(Rows{{1, inf}, {inf, 1}}));
}

TEST_CASE("Tits form entries", "[coxeter]") {
  SymmetricForm f3 = tits_form(pair(3));
  CHECK(f3.at(0, 1).to_rational() == Rational(-1, 2));
  CHECK(f3.at(0, 0).to_rational() == 1);
  CHECK(tits_form(pair(inf)).at(0, 1).to_rational() == -1);
  SymmetricForm f5 = tits_form(pair(5));
  CHECK(f5.at(0, 1).minimal_polynomial() == QPoly{-1, 2, 4});
  CHECK(std::abs(f5.at(0, 1).to_double() + 0.80901699437) < 1e-9);
}

TEST_CASE("Coxeter graph components", "[coxeter]") {
  using Rows = std::vector<std::vector<unsigned long>>;
  CoxeterMatrix discrete(Rows{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
  CHECK(components(discrete).size() == 3);
  CHECK(components(cat::by_name("A3")).size() == 1);
  CoxeterMatrix a2a2(Rows{{1, 3, 2, 2}, {3, 1, 2, 2}, {2, 2, 1, 3}, {2, 2, 3, 1}});
  auto          comps = components(a2a2);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::size_t>{0, 1});
  CHECK(comps[1] == std::vector<std::size_t>{2, 3});
}

TEST_CASE("signature examples", "[coxeter]") {
  CHECK(signature(QMatrix{{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}) == Signature{2, 1, 0});
  CHECK(signature(QMatrix{{1, -1}, {-1, 1}}) == Signature{1, 0, 1});
  CHECK(signature(tits_form(cat::by_name("A3"))) == Signature{3, 0, 0});
  CHECK(signature(QMatrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
  CHECK(signature(QMatrix{{0, 0}, {0, 0}}) == Signature{0, 0, 2});
}

TEST_CASE("classification of catalogue diagrams agrees with eigenvalues", "[coxeter]") {
  std::vector<std::string> names = {"A1", "A3", "B4", "D5", "E6", "E7", "E8", "F4",
                                    "H3", "H4", "I2(7)", "~A1", "~A2", "~C2", "~G2",
                                    "~F4", "~E6", "~E7", "~E8", "triangle(3,3,7)",
                                    "triangle(2,3,7)", "triangle(3,3,4)", "triangle(3,3,3)"};
  for (auto const& name : names) {
    CAPTURE(name);
    CoxeterMatrix m = cat::by_name(name);
    Signature     s = signature(tits_form(m));
    CHECK(s == test::float_signature(test::float_tits_form(m)));
    CHECK(s.p + s.q + s.r == m.size());
    auto reports = classify(m);
    REQUIRE(reports.size() == 1);
    if (name[0] == '~') {
      CHECK(reports[0].type == CoxeterType::affine);
      CHECK(s.r == 1);
    } else if (name == "triangle(3,3,3)") {
      CHECK(reports[0].type == CoxeterType::affine);
      CHECK(s == Signature{2, 0, 1});
    } else if (name.rfind("triangle", 0) == 0) {
      CHECK(reports[0].type == CoxeterType::indefinite);
    } else {
      CHECK(reports[0].type == CoxeterType::finite);
    }
  }
  CHECK(signature(tits_form(cat::by_name("triangle(3,3,7)"))) == Signature{2, 1, 0});
  CHECK_THROWS_AS(cat::by_name("Q7"), UnsupportedParams);
}

TEST_CASE("rank two Coxeter groups", "[coxeter]") {
  for (unsigned long m = 3; m <= 40; ++m) {
    CHECK(signature(tits_form(pair(m))) == Signature{2, 0, 0});
    CHECK(classify(pair(m))[0].type == CoxeterType::finite);
  }
  CHECK(signature(tits_form(pair(inf))) == Signature{1, 0, 1});
  CHECK(classify(pair(inf))[0].type == CoxeterType::affine);
}

TEST_CASE("admissible 3x3 forms have p >= 2, and p = 3 when det > 0", "[coxeter][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    QMatrix   b = random_admissible(3, rng, false);
    Signature s = signature(b);
    CHECK(s.p + s.q + s.r == 3);
    CHECK(s.p >= 2);
    if (determinant(b) > 0) {
      CHECK(s.p == 3);
    }
    Signature f = test::float_signature(to_eigen(b));
    if (determinant(b) != 0) {
      CHECK(s == f);
    }
  }
}

TEST_CASE("irreducible admissible 4x4 forms have p >= 3", "[coxeter][property]") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    Signature s = signature(random_admissible(4, rng, true));
    CHECK(s.p + s.q + s.r == 4);
    CHECK(s.p >= 3);
  }
}

TEST_CASE("Coxeter verdicts", "[coxeter]") {
  CHECK(coxeter_presentable(cat::by_name("A3")).verdict.answer == Answer::not_applicable);
  auto affine = coxeter_presentable(cat::by_name("triangle(3,3,3)"));
  CHECK(affine.verdict.answer == Answer::yes);
  CHECK(affine.verdict.certificate["type"] == "virtually-abelian");
  auto hyper = coxeter_presentable(cat::by_name("triangle(3,3,7)"));
  CHECK(hyper.verdict.answer == Answer::no);
  CHECK(hyper.verdict.trace.back().rule == "coxeter-indefinite");

  using Rows = std::vector<std::vector<unsigned long>>;
  // ~A1 x ~A1: two infinite components
  CoxeterMatrix prod(Rows{{1, inf, 2, 2}, {inf, 1, 2, 2}, {2, 2, 1, inf}, {2, 2, inf, 1}});
  auto          p = coxeter_presentable(prod);
  CHECK(p.verdict.answer == Answer::yes);
  CHECK(p.verdict.certificate["type"] == "direct-product");
  // A1 x (3,3,7): finite factor, indefinite component decides
  CoxeterMatrix mixed(Rows{{1, 2, 2, 2}, {2, 1, 3, 7}, {2, 3, 1, 3}, {2, 7, 3, 1}});
  CHECK(coxeter_presentable(mixed).verdict.answer == Answer::no);
  // A1 x ~A1
  CoxeterMatrix fa(Rows{{1, 2, 2}, {2, 1, inf}, {2, inf, 1}});
  CHECK(coxeter_presentable(fa).verdict.answer == Answer::yes);
}

TEST_CASE("of(B) has the expected dimension and is not presentable", "[coxeter][lie]") {
  CHECK(of_algebra({2, 1, 0}).dim() == 3);
  CHECK(of_algebra({3, 0, 0}).dim() == 3);
  CHECK(of_algebra({2, 1, 1}).dim() == 6);
  for (std::size_t p = 0; p <= 4; ++p) {
    for (std::size_t q = 0; p + q <= 4; ++q) {
      for (std::size_t r = 0; r <= 2; ++r) {
        if ((p + q) * (p + q - 1) / 2 + (p + q) * r == 0) {
          continue;
        }
        LieAlgebra l = of_algebra({p, q, r});
        CHECK(l.dim() == (p + q) * (p + q - 1) / 2 + (p + q) * r);
        CHECK(validate(l).ok());
      }
    }
  }
  using Rows = std::vector<std::vector<unsigned long>>;
  std::vector<CoxeterMatrix> corpus = {
      cat::by_name("triangle(3,3,7)"), cat::by_name("triangle(2,3,7)"),
      cat::by_name("triangle(3,3,4)"),
      CoxeterMatrix(Rows{{1, inf, inf, inf}, {inf, 1, inf, inf},
                         {inf, inf, 1, inf}, {inf, inf, inf, 1}})};
  for (auto const& m : corpus) {
    Signature s = signature(tits_form(m));
    REQUIRE(s.q >= 1);
    bool const excluded = (s.p == 4 && s.q == 0) || (s.p == 2 && s.q == 2)
                          || (s.p == 0 && s.q == 4);
    if (s.p + s.q >= 3 && !excluded) {
      CHECK(lie_presentable(of_algebra(s)).verdict.answer == Answer::no);
    }
  }
}
