#include <string>

#include "doctest.h"
#include "pwmap/io.hpp"
#include "pwmap/random_maps.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::fixture_path;
using pwmap::testing::v;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_map(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("identity document") {
  const SetValuedMap id = parse_map(read_file(fixture_path("identity.json")));
  CHECK(id.n == 1);
  CHECK(id.m == 1);
  REQUIRE(id.graph.cells.size() == 1);
  REQUIRE(id.graph.cells[0].eq.size() == 1);
  CHECK(id.graph.cells[0].le.empty());
  CHECK(cell_membership(id.graph.cells[0], v({3, 3})));
  CHECK(parse_map(read_file(fixture_path("step.json"))).graph.cells.size() == 2);
}

TEST_CASE("fixtures round-trip") {
  for (const char* name : {"identity", "abs", "step", "halfopen", "fan", "veec", "diagonal", "pareto", "empty"}) {
    CAPTURE(name);
    const SetValuedMap a = parse_map(read_file(fixture_path(std::string(name) + ".json")));
    const std::string text = serialize_map(a);
    const SetValuedMap b = parse_map(text);
    CHECK(b.n == a.n);
    CHECK(b.m == a.m);
    CHECK(b.name == a.name);
    CHECK(b.graph.cells == a.graph.cells);
    CHECK(serialize_map(b) == text);
  }
  for (const char* name : {"abs_fn", "two_wells_fn"}) {
    const PLFunction f = parse_function(read_file(fixture_path(std::string(name) + ".json")));
    const PLFunction g = parse_function(serialize_function(f));
    REQUIRE(g.pieces.size() == f.pieces.size());
    for (std::size_t i = 0; i < f.pieces.size(); ++i) {
      CHECK(g.pieces[i].cell == f.pieces[i].cell);
      CHECK(g.pieces[i].coeffs == f.pieces[i].coeffs);
      CHECK(g.pieces[i].offset == f.pieces[i].offset);
    }
  }
}

TEST_CASE("random documents round-trip") {
  Rng rng(2);
  RandomMapOptions opts;
  for (int t = 0; t < 50; ++t) {
    opts.n = rng.uniform(1, 2);
    opts.m = rng.uniform(1, 2);
    const SetValuedMap a = random_map(rng, opts);
    const SetValuedMap b = parse_map(serialize_map(a));
    CHECK(b.graph.cells == a.graph.cells);
  }
}

TEST_CASE("positioned parse errors") {
  const std::string arity =
      R"({"format":"svmap/1","n":1,"m":1,"cells":[{"eq":[["1","-1","0"]]},{"le":[["1","0"]]}]})";
  CHECK(error_of(arity) == "cells[1].le[0]: expected 3 entries, got 2");
  const std::string bad_rational = R"({"format":"svmap/1","n":1,"m":1,"cells":[{"eq":[["1","x/2","0"]]}]})";
  CHECK(error_of(bad_rational).rfind("cells[0].eq[0][1]", 0) == 0);
  const std::string zero_den = R"({"format":"svmap/1","n":1,"m":1,"cells":[{"eq":[["1","1/0","0"]]}]})";
  CHECK(error_of(zero_den).rfind("cells[0].eq[0][1]", 0) == 0);
  const std::string unknown = R"({"format":"svmap/1","n":1,"m":1,"cells":[{"ge":[["1","0","0"]]}]})";
  CHECK(error_of(unknown).find("cells[0]") != std::string::npos);
  CHECK(error_of(unknown).find("ge") != std::string::npos);
  const std::string top = R"({"format":"svmap/1","n":1,"m":1,"cells":[],"color":"red"})";
  CHECK(error_of(top).find("color") != std::string::npos);
  CHECK_FALSE(error_of(R"({"format":"svmap/2","n":1,"m":1,"cells":[]})").empty());
  CHECK_FALSE(error_of(R"({"format":"svmap/1","n":0,"m":1,"cells":[]})").empty());
  CHECK_FALSE(error_of("{not json").empty());
}

TEST_CASE("integers are accepted as rationals") {
  const SetValuedMap m = parse_map(R"({"format":"svmap/1","n":1,"m":1,"cells":[{"eq":[[1,-1,"1/2"]]}]})");
  CHECK(cell_membership(m.graph.cells[0], v({Rational(1, 2), 0})));
}

TEST_CASE("points on the command line") {
  CHECK(parse_point("1/2,-3") == v({Rational(1, 2), -3}));
  CHECK_THROWS_AS(parse_point("1,,2", "--point"), ParseError);
  CHECK_THROWS_AS(parse_point("", "--point"), ParseError);
}

TEST_CASE("polynomial map document") {
  const PolynomialMap pm = parse_polynomial_map(read_file(fixture_path("parabola_polymap.json")));
  CHECK(pm.n == 1);
  CHECK(pm.m == 1);
  CHECK(pm.cells.size() == 2);
  CHECK_THROWS_AS(parse_polynomial_map(R"({"format":"polymap/1","n":1,"m":1,"cells":[{"zero":[[{"coeff":"1","exp":[1]}]]}]})"),
                  ParseError);
}

TEST_CASE("missing files are input errors") { CHECK_THROWS(read_file(fixture_path("missing.json"))); }
