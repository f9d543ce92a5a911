#include <catch2/catch.hpp>

#include "pbp/error.hpp"
#include "pbp/json_io.hpp"

using namespace pbp;

TEST_CASE("presentations round trip", "[json]") {
  json j = json::parse(R"({"generators": ["s", "t"], "relators": ["t s^2 t^-1 s^-2"]})");
  FinitePresentation p = parse_presentation(j);
  CHECK(p.generator_count() == 2);
  CHECK(p.relator_count() == 1);
  CHECK(to_json(p) == j);
  CHECK_THROWS_AS(parse_presentation(json::parse(R"({"generators": ["s"], "relators": ["u"]})")),
                  InvalidInput);
  CHECK_THROWS_AS(parse_presentation(json::parse(R"({"generators": ["s"], "relators": ["s^0"]})")),
                  InvalidInput);
  CHECK_THROWS_AS(parse_presentation(json::parse(R"({"relators": []})")), InvalidInput);
  CHECK_THROWS_AS(parse_presentation(json::parse(R"([1, 2])")), InvalidInput);
}

TEST_CASE("Coxeter matrices accept inf", "[json]") {
  CoxeterMatrix m = parse_coxeter(json::parse(R"({"n": 2, "m": [[1, "inf"], ["inf", 1]]})"));
  CHECK(m.is_infinite(0, 1));
  CHECK(parse_coxeter(to_json(m)) == m);
  CHECK_THROWS_AS(parse_coxeter(json::parse(R"({"n": 3, "m": [[1, 3], [3, 1]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(parse_coxeter(json::parse(R"({"n": 2, "m": [[1, "oo"], ["oo", 1]]})")),
                  InvalidInput);
}

TEST_CASE("Lie algebras from brackets", "[json]") {
  json j = json::parse(R"({"dim": 2, "basis": ["e", "g"],
                           "brackets": [{"x": "g", "y": "e", "value": {"e": "1"}}]})");
  LieAlgebra l = parse_algebra(j);
  CHECK(l.dim() == 2);
  CHECK(l.bracket(1, 0) == QVector{1, 0});
  CHECK(l.bracket(0, 1) == QVector{-1, 0});
  CHECK(parse_algebra(to_json(l)).bracket(1, 0) == l.bracket(1, 0));
  CHECK_THROWS_AS(parse_algebra(json::parse(R"({"dim": 3, "basis": ["e", "g"], "brackets": []})")),
                  InvalidInput);
  CHECK_THROWS_AS(
      parse_algebra(json::parse(R"({"dim": 1, "basis": ["e"],
                                    "brackets": [{"x": "e", "y": "f", "value": {}}]})")),
      InvalidInput);
}

TEST_CASE("permutation targets", "[json]") {
  FinitePresentation p = parse_presentation(
      json::parse(R"({"generators": ["a", "b"], "relators": ["a b a^-1 b^-1"]})"));
  PermutationTarget t =
      parse_permutation_target(json::parse(R"({"degree": 2, "images": {"a": [1, 0], "b": [0, 1]}})"), p);
  CHECK(t.degree == 2);
  CHECK(t.images[0] == Permutation{1, 0});
  CHECK_THROWS_AS(
      parse_permutation_target(json::parse(R"({"degree": 2, "images": {"a": [1, 0]}})"), p),
      InvalidInput);
  CHECK_THROWS_AS(parse_permutation_target(
                      json::parse(R"({"degree": 2, "images": {"a": [1, 1], "b": [0, 1]}})"), p),
                  InvalidInput);
}

TEST_CASE("descriptors and flags", "[json]") {
  Flags f = parse_flags(json::parse(
      R"({"infinite": true, "ends": "inf", "centre": "finite", "virtually": [2, 1], "vcd": 2})"));
  CHECK(f.infinite == true);
  CHECK(f.ends == Ends::infinitely_many);
  CHECK(f.centre == Centre::finite);
  CHECK(f.virtually == VirtualForm{2, 1});
  CHECK(f.vcd == 2);
  CHECK_THROWS_AS(parse_flags(json::parse(R"({"amenable": true})")), InvalidInput);
  CHECK_THROWS_AS(parse_flags(json::parse(R"({"ends": 3})")), InvalidInput);
  CHECK_THROWS_AS(parse_descriptor(json::parse(R"({"kind": "wreath"})")), InvalidInput);
  CHECK_THROWS_AS(parse_descriptor(json::parse(R"({"kind": "bs", "m": 0, "n": 1})")),
                  InvalidInput);
  auto d = parse_descriptor(json::parse(R"({"kind": "free-product", "orders": [2, "inf"]})"));
  CHECK(std::get<FreeProductKind>(d.kind).orders == std::vector<unsigned long>{2, 0});
  auto v = parse_descriptor(json::parse(R"({"kind": "virtually", "of": {"kind": "bs", "m": 1, "n": 1}})"));
  CHECK(std::holds_alternative<VirtuallyKind>(v.kind));
}

TEST_CASE("verdict output shape", "[json]") {
  auto j = to_json(bs_presentable(2, -2), true);
  CHECK(j["answer"] == "YES");
  CHECK(j.contains("witness"));
  CHECK(j.contains("checks"));
  auto keys  = std::vector<std::string>{};
  auto empty = to_json(Verdict{});
  for (auto const& [k, _] : empty.items()) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<std::string>{"answer", "qualifier", "certificate", "trace"});
  auto cox = to_json(coxeter_presentable(coxeter_catalogue::by_name("~A2")));
  CHECK(cox["components"][0]["signature"].dump() == "[2,0,1]");
  CHECK(cox["components"][0]["vertices"].dump() == "[1,2,3]");
}

TEST_CASE("missing files are reported", "[json]") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
}
