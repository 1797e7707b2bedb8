#include "doctest.h"
#include "pwmap/pareto.hpp"
#include "pwmap/svmap.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::fixture_map;
using pwmap::testing::q;
using pwmap::testing::v;

namespace {

ConvexCone orthant2() { return ConvexCone::from_generators(2, {}, {v({1, 0}), v({0, 1})}); }

}  // namespace

TEST_CASE("pointedness") {
  CHECK(is_pointed(orthant2()));
  CHECK_FALSE(is_pointed(ConvexCone::from_constraints(2, {}, {v({0, -1})})));
}

TEST_CASE("Pareto values of (|x|, 0) + orthant on [-1, 1]") {
  const SetValuedMap map = fixture_map("pareto");
  CHECK(is_k_invariant(map, orthant2()));
  const ParetoReport r = pareto_min_values(map, orthant2());
  REQUIRE(r.values.size() == 1);
  CHECK(cell_membership(r.values[0], v({0, 0})));
  CHECK(cell_dimension(r.values[0]) == 0);
  CHECK(r.dim == 0);
  CHECK(r.meager);
}

TEST_CASE("constant orthant has only its apex") {
  LinearCell k(3);
  k.add_ge(v({0, 1, 0}), 0).add_ge(v({0, 0, 1}), 0);
  const ParetoReport r = pareto_min_values(SetValuedMap(1, 2, {k}), orthant2());
  REQUIRE(r.values.size() == 1);
  CHECK(cell_membership(r.values[0], v({0, 0})));
  CHECK(r.dim == 0);
}

TEST_CASE("the whole space has no Pareto minima") {
  const ParetoReport r = pareto_min_values(SetValuedMap(1, 2, {whole_space(3)}), orthant2());
  CHECK(r.values.empty());
  CHECK(r.dim == -1);
  CHECK(r.meager);
}

TEST_CASE("non-pointed cones and non-invariant maps are rejected") {
  const SetValuedMap map = fixture_map("pareto");
  CHECK_THROWS_AS(pareto_min_values(map, ConvexCone::from_constraints(2, {}, {v({0, -1})})), std::invalid_argument);
  LinearCell pt(3);
  pt.add_eq(v({0, 1, 0}), 0).add_eq(v({0, 0, 1}), 0);
  const SetValuedMap origin(1, 2, {pt});
  CHECK_FALSE(is_k_invariant(origin, orthant2()));
  CHECK_THROWS_AS(pareto_min_values(origin, orthant2()), std::invalid_argument);
  const SetValuedMap epi = epigraphical_map(origin, orthant2());
  CHECK(is_k_invariant(epi, orthant2()));
  const ParetoReport r = pareto_min_values(epi, orthant2());
  REQUIRE(r.values.size() == 1);
  CHECK(cell_membership(r.values[0], v({0, 0})));
}

TEST_CASE("segment of values along an antichain") {
  // S(x) = (x, -x) + orthant on [0, 1]: every value (t, -t) is a Pareto minimum.
  LinearCell c(3);
  c.add_ge(v({1, 0, 0}), 0).add_le(v({1, 0, 0}), 1).add_ge(v({-1, 1, 0}), 0).add_ge(v({1, 0, 1}), 0);
  const ParetoReport r = pareto_min_values(SetValuedMap(1, 2, {c}), orthant2());
  CHECK(r.dim == 1);
  CHECK(r.meager);
  bool mid = false;
  for (const auto& cell : r.values) mid = mid || cell_membership(cell, v({q("1/2"), q("-1/2")}));
  CHECK(mid);
}
