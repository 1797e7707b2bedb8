#include <optional>

#include "doctest.h"
#include "pwmap/lp.hpp"
#include "pwmap/random_maps.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::v;

namespace {

// Solves the square system rows·z = rhs exactly; nullopt when singular.
std::optional<Vec> solve_square(const std::vector<Constraint>& rows, Eigen::Index dim) {
  Mat a(dim, dim + 1);
  for (Eigen::Index i = 0; i < dim; ++i) {
    a.row(i).head(dim) = rows[static_cast<std::size_t>(i)].normal.transpose();
    a(i, dim) = rows[static_cast<std::size_t>(i)].rhs;
  }
  const auto pivots = rref_in_place(a);
  if (static_cast<Eigen::Index>(pivots.size()) != dim || pivots.back() == dim) return std::nullopt;
  return Vec(a.col(dim));
}

// Best objective over the vertices of a bounded closed cell, by trying every basis of tight rows.
std::optional<Rational> vertex_oracle(const LinearProgram& lp) {
  const Eigen::Index dim = lp.cell.dim;
  std::vector<Constraint> rows = lp.cell.le;
  rows.insert(rows.end(), lp.cell.eq.begin(), lp.cell.eq.end());
  for (const auto& e : lp.cell.eq) rows.push_back({-e.normal, -e.rhs});
  std::optional<Rational> best;
  std::vector<std::size_t> pick(static_cast<std::size_t>(dim));
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == pick.size()) {
      std::vector<Constraint> basis;
      for (auto i : pick) basis.push_back(rows[i]);
      const auto z = solve_square(basis, dim);
      if (!z || !cell_membership(lp.cell, *z)) return;
      const Rational val = dot(lp.objective, *z);
      if (!best || (lp.sense == Sense::maximize ? val > *best : val < *best)) best = val;
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

LinearCell boxed(LinearCell cell, long r) {
  for (Eigen::Index i = 0; i < cell.dim; ++i) {
    cell.add_le(unit(cell.dim, i), Rational(r));
    cell.add_ge(unit(cell.dim, i), Rational(-r));
  }
  return cell;
}

}  // namespace

TEST_CASE("one-dimensional box") {
  LinearCell c(1);
  c.add_ge(v({1}), 0).add_le(v({1}), 1);
  const LinearProgram lp{v({1}), c, Sense::maximize};
  const LpOutcome out = lp_solve(lp);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.value == Rational(1));
  CHECK(out.witness == v({1}));
  CHECK(check_optimality_certificate(lp, out));
}

TEST_CASE("half-line is unbounded along (1)") {
  LinearCell c(1);
  c.add_ge(v({1}), 0);
  const LinearProgram lp{v({1}), c, Sense::maximize};
  const LpOutcome out = lp_solve(lp);
  REQUIRE(out.status == LpStatus::unbounded);
  CHECK(out.ray == v({1}));
  CHECK(check_unbounded_ray(lp, out));
}

TEST_CASE("simplex maximum of x + y") {
  LinearCell c(2);
  c.add_le(v({1, 1}), 1).add_ge(v({1, 0}), 0).add_ge(v({0, 1}), 0);
  const LinearProgram lp{v({1, 1}), c, Sense::maximize};
  const LpOutcome out = lp_solve(lp);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.value == Rational(1));
  CHECK(check_optimality_certificate(lp, out));
}

TEST_CASE("infeasible system has a Farkas certificate") {
  LinearCell c(1);
  c.add_le(v({1}), 0).add_ge(v({1}), 1);
  const LpOutcome out = lp_solve({v({1}), c, Sense::maximize});
  REQUIRE(out.status == LpStatus::infeasible);
  CHECK(check_farkas_certificate(c, out));
}

TEST_CASE("strict rows and dimension mismatches are rejected") {
  LinearCell c(1);
  c.add_lt(v({1}), 0);
  CHECK_THROWS(lp_solve({v({1}), c, Sense::maximize}));
  LinearCell d(2);
  CHECK_THROWS(lp_solve({v({1}), d, Sense::maximize}));
}

TEST_CASE("random boxed LPs agree with vertex enumeration and carry exact certificates") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const Eigen::Index dim = rng.uniform(1, 3);
    LinearProgram lp = random_lp(rng, dim, 5, 4);
    lp.cell = boxed(lp.cell, 6);
    const LpOutcome out = lp_solve(lp);
    const auto oracle = vertex_oracle(lp);
    CAPTURE(t);
    if (!oracle) {
      CHECK(out.status == LpStatus::infeasible);
      CHECK(check_farkas_certificate(lp.cell, out));
    } else {
      REQUIRE(out.status == LpStatus::optimal);
      CHECK(out.value == *oracle);
      CHECK(cell_membership(lp.cell, out.witness));
      CHECK(check_optimality_certificate(lp, out));
    }
  }
}

TEST_CASE("certificates on unboxed random LPs") {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const LinearProgram lp = random_lp(rng, rng.uniform(1, 4));
    const LpOutcome out = lp_solve(lp);
    CAPTURE(t);
    if (out.status == LpStatus::optimal) CHECK(check_optimality_certificate(lp, out));
    else if (out.status == LpStatus::unbounded) CHECK(check_unbounded_ray(lp, out));
    else CHECK(check_farkas_certificate(lp.cell, out));
  }
}

TEST_CASE("certificate checkers reject tampered certificates") {
  LinearCell c(1);
  c.add_ge(v({1}), 0).add_le(v({1}), 1);
  const LinearProgram lp{v({1}), c, Sense::maximize};
  LpOutcome out = lp_solve(lp);
  out.value = Rational(2);
  CHECK_FALSE(check_optimality_certificate(lp, out));
}
