#include "doctest.h"
#include "pwmap/random_maps.hpp"
#include "pwmap/variational.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::fixture_map;
using pwmap::testing::q;
using pwmap::testing::v;

namespace {

// {y >= -x} ∪ {y >= x}.
CellComplex veec() {
  LinearCell a(2), b(2);
  a.add_le(v({-1, -1}), 0);
  b.add_le(v({1, -1}), 0);
  return CellComplex(2, {a, b});
}

ConvexCone ray(const Vec& r) { return ConvexCone::from_generators(r.size(), {}, {r}); }

bool has_member(const ConeUnion& u, const ConvexCone& k) {
  for (const auto& c : u.members)
    if (c.same_as(k)) return true;
  return false;
}

}  // namespace

TEST_CASE("Hadamard normal cone of a union") {
  CHECK(hadamard_normal_cone(veec(), v({0, 0})).is_zero());
  CHECK(hadamard_normal_cone(veec(), v({1, -1})).same_as(ray(v({-1, -1}))));
  const LinearCell box = box_cell(v({0, 0}), v({1, 1}));
  CHECK(hadamard_normal_cone(CellComplex(2, {box}), v({0, 0})).same_as(normal_cone_convex(box, v({0, 0}))));
  CHECK_THROWS(hadamard_normal_cone(veec(), v({0, -1})));
}

TEST_CASE("limiting normal cone of a union") {
  const ConeUnion lim = limiting_normal_cone(veec(), v({0, 0}));
  CHECK(lim.members.size() == 3);
  CHECK(has_member(lim, ray(v({-1, -1}))));
  CHECK(has_member(lim, ray(v({1, -1}))));
  CHECK(has_member(lim, ConvexCone::zero(2)));
  LinearCell epi(2);
  epi.add_le(v({1, -1}), 0).add_le(v({-1, -1}), 0);
  const ConeUnion conv = limiting_normal_cone(CellComplex(2, {epi}), v({0, 0}));
  const ConvexCone expected = ConvexCone::from_generators(2, {}, {v({1, -1}), v({-1, -1})});
  CHECK(has_member(conv, expected));
  for (const auto& k : conv.members) CHECK(k.subset_of(expected));
}

TEST_CASE("coderivatives") {
  const auto id = coderivative(fixture_map("identity"), v({0}), v({0}), v({1}));
  REQUIRE(id.size() == 1);
  CHECK(cell_membership(id[0], v({1})));
  CHECK(cell_dimension(id[0]) == 0);
  // STEP at (0, 1), y* = 0: (-inf, 0].
  const auto step = coderivative(fixture_map("step"), v({0}), v({1}), v({0}));
  bool neg = false, pos = false;
  for (const auto& c : step) {
    neg = neg || cell_membership(c, v({-5}));
    pos = pos || cell_membership(c, v({q("1/10")}));
  }
  CHECK(neg);
  CHECK_FALSE(pos);
  const auto abs = coderivative(fixture_map("abs"), v({0}), v({0}), v({1}));
  bool in = false, out = false;
  for (const auto& c : abs) {
    in = in || (cell_membership(c, v({-1})) && cell_membership(c, v({1})));
    out = out || cell_membership(c, v({q("11/10")})) || cell_membership(c, v({q("-11/10")}));
  }
  CHECK(in);
  CHECK_FALSE(out);
}

TEST_CASE("outer norms") {
  ConeUnion line(2);
  line.add(ConvexCone::from_generators(2, {v({1, -1})}, {}));
  for (NormKind d : {NormKind::sup, NormKind::sum})
    for (NormKind r : {NormKind::sup, NormKind::sum}) CHECK(outer_norm(line, 1, {d, r}).value == Rational(1));
  ConeUnion wedge(3);
  wedge.add(ConvexCone::from_generators(3, {}, {v({1, 0, 1}), v({1, 0, -1})}));
  CHECK_FALSE(outer_norm(wedge, 2, {}).value.has_value());
  ConeUnion vee(2);
  vee.add(ConvexCone::from_generators(2, {}, {v({1, -1}), v({-1, -1})}));
  const OuterNorm on = outer_norm(vee, 1, {});
  CHECK(on.value == Rational(1));
  REQUIRE(on.euclidean);
  CHECK(on.euclidean->lo <= Rational(1));
  CHECK(on.euclidean->hi >= Rational(1));
}

TEST_CASE("Aubin property by the coderivative criterion") {
  const AubinVerdict id = aubin_check(fixture_map("identity"), v({0}), v({0}));
  CHECK(id.applicable);
  CHECK(id.holds);
  CHECK(id.modulus.value == Rational(1));
  const AubinVerdict step = aubin_check(fixture_map("step"), v({0}), v({1}));
  CHECK(step.applicable);
  CHECK_FALSE(step.holds);
  const AubinVerdict abs = aubin_check(fixture_map("abs"), v({0}), v({0}));
  CHECK(abs.holds);
  CHECK(abs.modulus.value == Rational(1));
  const AubinVerdict open = aubin_check(fixture_map("halfopen"), v({1}), v({0}));
  CHECK(open.applicable);
  CHECK_FALSE(aubin_check(fixture_map("halfopen"), v({0}), v({0})).applicable);
}

TEST_CASE("relative Aubin property") {
  const SetValuedMap diag = fixture_map("diagonal");
  CHECK_FALSE(aubin_check(diag, v({0, 0}), v({0})).holds);
  LinearCell line(2);
  line.add_eq(v({1, -1}), 0);
  const AubinVerdict rel = aubin_check_relative(diag, line, v({0, 0}), v({0}));
  CHECK(rel.holds);
  CHECK(rel.modulus.value == Rational(1));
  const AubinVerdict rel1 = aubin_check_relative(diag, line, v({0, 0}), v({0}), {NormKind::sum, NormKind::sup});
  CHECK(rel1.modulus.value == Rational(1, 2));
  const AubinVerdict pt = aubin_check_relative(fixture_map("step"), point_cell(v({0})), v({0}), v({1}));
  CHECK(pt.holds);
  CHECK(pt.modulus.value == Rational(0));
  const AubinVerdict whole = aubin_check_relative(fixture_map("identity"), whole_space(1), v({0}), v({0}));
  CHECK(whole.holds);
  CHECK(whole.modulus.value == Rational(1));
}

TEST_CASE("uniform graphical modulus") {
  CHECK(uniform_kappa(fixture_map("fan")).value == Rational(2));
  CHECK(uniform_kappa(fixture_map("identity")).value == Rational(1));
  CHECK(uniform_kappa(fixture_map("step")).value == Rational(0));
}

TEST_CASE("euclidean bounds bracket the modulus under norm equivalence") {
  const Interval i = euclidean_bounds(Rational(2), 2, 1, {});
  CHECK(i.lo <= Rational(2));
  CHECK(i.hi >= Rational(2));
  CHECK(i.lo > Rational(0));
}

TEST_CASE("Hadamard cone is polar to every tangent cone and lies in the limiting cone") {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    const CellComplex cx = random_closed_complex(rng, 2, 3, 4, 3);
    CAPTURE(t);
    for (const auto& cell : cx.cells) {
      const auto p = find_point(cell);
      if (!p) continue;
      const Vec z = relative_interior_point(cell);
      const NormalConeResult nc = normal_cones(cx, z);
      for (const auto& c : cx.cells) {
        if (!cell_membership(c, z)) continue;
        const ConvexCone tc = tangent_cone_convex(c, z);
        CHECK(nc.hadamard.subset_of(tc.polar()));
      }
      bool member = false;
      for (const auto& k : nc.limiting.members) member = member || nc.hadamard.subset_of(k);
      CHECK(member);
    }
  }
}
