#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "pwmap/cell.hpp"
#include "pwmap/random_maps.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::q;
using pwmap::testing::v;

namespace {

// {y = 0, 0 < x <= 1} in R^2.
LinearCell halfopen_segment() {
  LinearCell c(2);
  c.add_eq(v({0, 1}), 0).add_gt(v({1, 0}), 0).add_le(v({1, 0}), 1);
  return c;
}

Vec random_point(Rng& rng, Eigen::Index dim, long r) {
  Vec p(dim);
  for (Eigen::Index i = 0; i < dim; ++i) p(i) = Rational(rng.uniform(-4 * r, 4 * r), 4);
  return p;
}

}  // namespace

TEST_CASE("implicit equalities") {
  LinearCell a(1);
  a.add_le(v({1}), 0).add_le(v({-1}), 0);
  CHECK(implicit_equalities(a) == std::vector<std::size_t>{0, 1});
  LinearCell b(1);
  b.add_le(v({1}), 1);
  CHECK(implicit_equalities(b).empty());
  LinearCell c(2);
  c.add_le(v({1, 1}), 1).add_le(v({-1, -1}), -1).add_le(v({1, 0}), 2);
  CHECK(implicit_equalities(c) == std::vector<std::size_t>{0, 1});
  LinearCell e(1);
  e.add_le(v({1}), 0).add_ge(v({1}), 1);
  CHECK_THROWS_AS(implicit_equalities(e), std::domain_error);
}

TEST_CASE("relative interior points") {
  LinearCell a(1);
  a.add_ge(v({1}), 0).add_le(v({1}), 1);
  const Vec p = relative_interior_point(a);
  CHECK(p(0) > Rational(0));
  CHECK(p(0) < Rational(1));
  LinearCell b(1);
  b.add_eq(v({1}), 0);
  CHECK(relative_interior_point(b) == v({0}));
  LinearCell c(2);
  c.add_le(v({1, 1}), 1).add_le(v({-1, -1}), -1);
  const Vec r = relative_interior_point(c);
  CHECK(r(0) + r(1) == Rational(1));
  LinearCell e(1);
  e.add_lt(v({1}), 0).add_gt(v({1}), 0);
  CHECK_THROWS(relative_interior_point(e));
}

TEST_CASE("membership") {
  LinearCell diag(2);
  diag.add_eq(v({-1, 1}), 0);
  CHECK(cell_membership(diag, v({3, 3})));
  CHECK_FALSE(cell_membership(halfopen_segment(), v({0, 0})));
  LinearCell cone(2);
  cone.add_le(v({1, -1}), 0).add_le(v({-1, -1}), 0);
  CHECK(cell_membership(cone, v({1, 1})));
  CHECK_FALSE(cell_membership(cone, v({1, 0})));
}

TEST_CASE("closure relaxes strict rows") {
  LinearCell expected(2);
  expected.add_eq(v({0, 1}), 0).add_ge(v({1, 0}), 0).add_le(v({1, 0}), 1);
  const LinearCell cl = cell_closure(halfopen_segment());
  CHECK(cell_membership(cl, v({0, 0})));
  CHECK(cell_membership(cl, v({1, 0})));
  CHECK_FALSE(cell_membership(cl, v({q("-1/10"), 0})));
  CHECK(cl.is_closed());
  LinearCell box = box_cell(v({0, 0}), v({1, 1}));
  CHECK(cell_closure(box) == box);
  LinearCell open(1);
  open.add_lt(v({1}), 1).add_gt(v({1}), -1);
  const LinearCell ocl = cell_closure(open);
  CHECK(cell_membership(ocl, v({-1})));
  CHECK(cell_membership(ocl, v({1})));
  LinearCell e(1);
  e.add_lt(v({1}), 0).add_gt(v({1}), 0);
  CHECK_THROWS(cell_closure(e));
}

TEST_CASE("dimension") {
  CHECK(cell_dimension(box_cell(v({0, 0}), v({1, 1}))) == 2);
  LinearCell line(2);
  line.add_eq(v({0, 1}), 0);
  CHECK(cell_dimension(line) == 1);
  LinearCell pt(1);
  pt.add_le(v({1}), 0).add_le(v({-1}), 0);
  CHECK(cell_dimension(pt) == 0);
  LinearCell e(1);
  e.add_le(v({1}), 0).add_ge(v({1}), 1);
  CHECK(cell_dimension(e) == -1);
}

TEST_CASE("projection and slices") {
  const LinearCell d = project_prefix(halfopen_segment(), 1);
  CHECK_FALSE(cell_membership(d, v({0})));
  CHECK(cell_membership(d, v({1})));
  CHECK(cell_membership(d, v({q("1/2")})));
  const LinearCell s = slice_at(halfopen_segment(), v({q("1/2")}));
  CHECK(s.dim == 1);
  CHECK(cell_membership(s, v({0})));
  CHECK(is_empty(slice_at(halfopen_segment(), v({0}))));
}

TEST_CASE("random cells: interior points, dimension, redundancy removal and projection") {
  Rng rng(8);
  int nonempty = 0;
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index dim = rng.uniform(1, 3);
    const CellComplex cx = random_complex(rng, dim, 1, 5, 3);
    const LinearCell& c = cx.cells.front();
    CAPTURE(t);
    const auto p = find_point(c);
    if (!p) {
      CHECK(cell_dimension(c) == -1);
      continue;
    }
    ++nonempty;
    CHECK(cell_membership(c, *p));
    const Vec ri = relative_interior_point(c);
    CHECK(cell_membership(relative_interior_cell(c), ri));
    // The affine hull has the cell's dimension and contains it.
    const auto hull = affine_hull(c);
    CHECK(static_cast<Eigen::Index>(hull.size()) == dim - cell_dimension(c));
    CHECK(direction_space(c).cols() == cell_dimension(c));
    for (const auto& h : hull) CHECK(h.value(ri).is_zero());
    const LinearCell lean = remove_redundant(c);
    const LinearCell proj = project_prefix(c, dim - 1 > 0 ? dim - 1 : 1);
    for (int s = 0; s < 30; ++s) {
      const Vec z = random_point(rng, dim, 3);
      CHECK(cell_membership(lean, z) == cell_membership(c, z));
      if (dim > 1) {
        // Projection oracle: the slice over x is nonempty.
        const Vec x = z.head(dim - 1);
        CHECK(cell_membership(proj, x) == !is_empty(slice_at(c, x)));
      }
    }
  }
  CHECK(nonempty > 20);
}
