#include <algorithm>

#include "doctest.h"
#include "pwmap/lp.hpp"
#include "pwmap/random_maps.hpp"
#include "pwmap/stratification.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::q;
using pwmap::testing::v;

namespace {

// Graph of the step map: {(x, 0)} ∪ {(x, 1) : x >= 0}.
CellComplex step_graph() {
  LinearCell low(2), high(2);
  low.add_eq(v({0, 1}), 0);
  high.add_eq(v({0, 1}), 1).add_ge(v({1, 0}), 0);
  return CellComplex(2, {low, high});
}

bool contains_pair(const Stratification& s, std::size_t f, std::size_t g) {
  return std::find(s.frontier.begin(), s.frontier.end(), std::pair{f, g}) != s.frontier.end();
}

// cl(G) ⊆ cl(F), decided by one LP per row of cl(F).
bool closure_contains(const LinearCell& f, const LinearCell& g) {
  for (const auto& r : f.le) {
    const auto m = lp_max(g, r.normal);
    if (!m || *m > r.rhs) return false;
  }
  for (const auto& r : f.eq) {
    const auto hi = lp_max(g, r.normal), lo = lp_max(g, Vec(-r.normal));
    if (!hi || !lo || *hi != r.rhs || -*lo != r.rhs) return false;
  }
  return true;
}

void check_invariants(const CellComplex& cx, const Stratification& s, Rng& rng) {
  for (std::size_t i = 0; i < s.strata.size(); ++i) {
    const Stratum& st = s.strata[i];
    CHECK(cell_membership(st.cell, st.sample));
    CHECK(complex_membership(cx, st.sample));
    CHECK(cell_dimension(st.cell) == st.dim);
    for (auto c : st.origin) CHECK(cell_membership(cx.cells[c], st.sample));
  }
  // Disjoint cover of the union.
  for (int t = 0; t < 60; ++t) {
    Vec z(cx.dim);
    for (Eigen::Index i = 0; i < cx.dim; ++i) z(i) = Rational(rng.uniform(-20, 20), 4);
    int hits = 0;
    for (const auto& st : s.strata) hits += cell_membership(st.cell, z) ? 1 : 0;
    CHECK(hits == (complex_membership(cx, z) ? 1 : 0));
    const auto at = locate(s, z);
    CHECK(at.has_value() == (hits == 1));
    if (at) CHECK(cell_membership(s.strata[*at].cell, z));
  }
  // Frontier condition: cl(F) meets G iff G ⊆ cl(F), and exactly those pairs are recorded.
  for (std::size_t f = 0; f < s.strata.size(); ++f)
    for (std::size_t g = 0; g < s.strata.size(); ++g) {
      if (f == g) continue;
      const LinearCell cf = stratum_closure(s.strata[f]);
      const bool meets = cell_membership(cf, s.strata[g].sample);
      if (meets) {
        CHECK(closure_contains(cf, stratum_closure(s.strata[g])));
        CHECK(s.strata[g].dim < s.strata[f].dim);
      }
      CHECK(contains_pair(s, f, g) == meets);
    }
}

}  // namespace

TEST_CASE("step graph has five strata") {
  const Stratification s = refine(step_graph());
  REQUIRE(s.strata.size() == 5);
  std::vector<int> dims;
  for (const auto& st : s.strata) dims.push_back(st.dim);
  CHECK(dims == std::vector<int>{0, 0, 1, 1, 1});
  Rng rng(1);
  check_invariants(step_graph(), s, rng);
}

TEST_CASE("closed square has nine strata") {
  const CellComplex box(2, {box_cell(v({0, 0}), v({1, 1}))});
  const Stratification s = refine(box);
  CHECK(s.strata.size() == 9);
  int vertices = 0, edges = 0, squares = 0;
  for (const auto& st : s.strata) (st.dim == 0 ? vertices : st.dim == 1 ? edges : squares)++;
  CHECK(vertices == 4);
  CHECK(edges == 4);
  CHECK(squares == 1);
  const auto corner = locate(s, v({0, 0}));
  REQUIRE(corner);
  const auto up = incident_strata(s, *corner);
  CHECK(up.size() == 3);
  const auto open = locate(s, v({q("1/2"), q("1/2")}));
  REQUIRE(open);
  CHECK(incident_strata(s, *open).empty());
}

TEST_CASE("a line is one stratum") {
  LinearCell line(2);
  line.add_eq(v({0, 1}), 0);
  CHECK(refine(CellComplex(2, {line})).strata.size() == 1);
}

TEST_CASE("locate and incident strata on the step graph") {
  const Stratification s = refine(step_graph());
  const auto top = locate(s, v({0, 1}));
  REQUIRE(top);
  CHECK(s.strata[*top].dim == 0);
  CHECK(s.strata[*top].sample == v({0, 1}));
  const auto right = locate(s, v({2, 0}));
  REQUIRE(right);
  CHECK(s.strata[*right].dim == 1);
  CHECK(cell_membership(s.strata[*right].cell, v({7, 0})));
  CHECK_FALSE(cell_membership(s.strata[*right].cell, v({0, 0})));
  CHECK_FALSE(locate(s, v({5, 5})));
  const auto origin = locate(s, v({0, 0}));
  REQUIRE(origin);
  auto inc = incident_strata(s, *origin);
  REQUIRE(inc.size() == 2);
  for (auto f : inc) {
    CHECK(s.strata[f].dim == 1);
    CHECK(cell_membership(s.strata[f].cell, v({f == *right ? 1 : -1, 0})));
  }
}

TEST_CASE("hyperplane cap") {
  RefineOptions opts;
  opts.max_hyperplanes = 1;
  CHECK_THROWS_AS(refine(step_graph(), opts), std::length_error);
}

TEST_CASE("invariants on random complexes") {
  Rng rng(29);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index dim = rng.uniform(1, 3);
    const CellComplex cx = random_complex(rng, dim, 4, 4, 3);
    CAPTURE(t);
    check_invariants(cx, refine(cx), rng);
  }
}
