#include "doctest.h"
#include "pwmap/cone.hpp"
#include "pwmap/lp.hpp"
#include "pwmap/random_maps.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::q;
using pwmap::testing::v;

namespace {

bool satisfies(const ConvexCone& k, const Vec& x) {
  for (const auto& r : k.eq_rows())
    if (!dot(r, x).is_zero()) return false;
  for (const auto& r : k.ineq_rows())
    if (dot(r, x) > Rational(0)) return false;
  return true;
}

// x ∈ lin(L) + cone(R), decided by an LP over the combination coefficients.
bool in_generated(const std::vector<Vec>& lin, const std::vector<Vec>& rays, const Vec& x) {
  const Eigen::Index dim = x.size();
  const Eigen::Index k = static_cast<Eigen::Index>(2 * lin.size() + rays.size());
  if (k == 0) return is_zero(x);
  LinearCell c(k);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vec row(k);
    Eigen::Index j = 0;
    for (const auto& l : lin) {
      row(j++) = l(i);
      row(j++) = -l(i);
    }
    for (const auto& r : rays) row(j++) = r(i);
    c.add_eq(row, x(i));
  }
  for (Eigen::Index j = 0; j < k; ++j) c.add_ge(unit(k, j), 0);
  return !is_empty(c);
}

Vec random_vec(Rng& rng, Eigen::Index dim) {
  Vec x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x(i) = Rational(rng.uniform(-5, 5));
  return x;
}

bool same_rays(std::vector<Vec> a, std::vector<Vec> b) {
  auto key = [](const Vec& x) {
    std::string s;
    for (Eigen::Index i = 0; i < x.size(); ++i) s += x(i).str() + ",";
    return s;
  };
  auto cmp = [&](const Vec& x, const Vec& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  return a == b;
}

}  // namespace

TEST_CASE("double description examples") {
  const auto quadrant = dd_rays(2, {}, {v({-1, 0}), v({0, -1})});
  CHECK(quadrant.lineality.empty());
  CHECK(same_rays(quadrant.rays, {v({1, 0}), v({0, 1})}));
  const auto half = dd_rays(2, {}, {v({0, -1})});
  REQUIRE(half.lineality.size() == 1);
  CHECK(exact_rank(stack_rows({half.lineality[0], v({1, 0})}, 2)) == 1);
  CHECK(same_rays(half.rays, {v({0, 1})}));
  const auto vee = dd_rays(2, {}, {v({1, -1}), v({-1, -1})});
  CHECK(same_rays(vee.rays, {v({1, 1}), v({-1, 1})}));
}

TEST_CASE("normal and tangent cones of convex cells") {
  const LinearCell box = box_cell(v({0, 0}), v({1, 1}));
  const ConvexCone n0 = normal_cone_convex(box, v({0, 0}));
  CHECK(n0.same_as(ConvexCone::from_generators(2, {}, {v({-1, 0}), v({0, -1})})));
  const ConvexCone n1 = normal_cone_convex(box, v({q("1/2"), 0}));
  CHECK(n1.same_as(ConvexCone::from_generators(2, {}, {v({0, -1})})));
  LinearCell epi(2);
  epi.add_le(v({1, -1}), 0).add_le(v({-1, -1}), 0);
  const ConvexCone ne = normal_cone_convex(epi, v({0, 0}));
  CHECK(ne.same_as(ConvexCone::from_generators(2, {}, {v({1, -1}), v({-1, -1})})));

  LinearCell diag(2);
  diag.add_eq(v({-1, 1}), 0);
  CHECK(tangent_cone_convex(diag, v({2, 2})).same_as(ConvexCone::from_generators(2, {v({1, 1})}, {})));
  CHECK(tangent_cone_convex(box, v({0, 0})).same_as(ConvexCone::from_constraints(2, {}, {v({-1, 0}), v({0, -1})})));
  const ConvexCone te = tangent_cone_convex(epi, v({0, 0}));
  CHECK(te.same_as(ConvexCone::from_constraints(2, {}, {v({1, -1}), v({-1, -1})})));
  CHECK(te.same_as(ne.polar()));
}

TEST_CASE("cone intersected with a subspace") {
  const ConvexCone half = ConvexCone::from_constraints(2, {}, {v({0, -1})});
  const ConvexCone line = cone_intersect_subspace(half, {v({1, 0})});
  CHECK(line.same_as(ConvexCone::from_generators(2, {v({1, 0})}, {})));
  const ConvexCone vee = ConvexCone::from_generators(2, {}, {v({1, -1}), v({-1, -1})});
  CHECK(cone_intersect_subspace(vee, {v({1, 0})}).is_zero());
  const ConvexCone left = ConvexCone::from_constraints(2, {}, {v({1, 0})});
  CHECK(cone_intersect_subspace(left, {v({1, 0})}).same_as(ConvexCone::from_generators(2, {}, {v({-1, 0})})));
}

TEST_CASE("double description round-trip on random cones") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index dim = rng.uniform(1, 4);
    const ConvexCone k = random_cone(rng, dim);
    CAPTURE(t);
    const auto& lin = k.lineality();
    const auto& rays = k.rays();
    // Soundness: every generator lies in the H-cone.
    for (const auto& l : lin) {
      CHECK(satisfies(k, l));
      CHECK(satisfies(k, Vec(-l)));
    }
    for (const auto& r : rays) CHECK(satisfies(k, r));
    // Completeness: random members of the H-cone are generated.
    for (int s = 0; s < 10; ++s) {
      const Vec x = random_vec(rng, dim);
      CHECK(satisfies(k, x) == in_generated(lin, rays, x));
    }
    // Rays are extreme: no ray is generated by the others.
    for (std::size_t i = 0; i < rays.size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < rays.size(); ++j)
        if (j != i) others.push_back(rays[j]);
      CHECK_FALSE(in_generated(lin, others, rays[i]));
    }
    // Back to constraints from the generators.
    const ConvexCone g = ConvexCone::from_generators(dim, lin, rays);
    for (int s = 0; s < 10; ++s) {
      const Vec x = random_vec(rng, dim);
      CHECK(satisfies(g, x) == satisfies(k, x));
    }
    CHECK(k.polar().polar().same_as(k));
  }
}
