#include <algorithm>
#include <set>

#include "doctest.h"
#include "pwmap/random_maps.hpp"
#include "pwmap/sublevel.hpp"
#include "pwmap/svmap.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::fixture_function;
using pwmap::testing::q;
using pwmap::testing::v;

namespace {

// Continuous PL function through the points (xs[i], ys[i]).
PLFunction interpolant(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  PLFunction f;
  f.n = 1;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    f.pieces.push_back({box_cell(v({xs[i]}), v({xs[i + 1]})), v({slope}), ys[i] - slope * xs[i]});
  }
  return f;
}

bool in_value(const SetValuedMap& l, const Rational& r, const Rational& x) {
  for (const auto& c : evaluate(l, v({r})))
    if (cell_membership(c, v({x}))) return true;
  return false;
}

// Local minimum values over int(D) by checking every breakpoint and flat piece directly.
std::set<Rational> brute_local_mins(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  std::set<Rational> out;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i)
    if (ys[i] <= ys[i - 1] && ys[i] <= ys[i + 1]) out.insert(ys[i]);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (ys[i] == ys[i + 1]) out.insert(ys[i]);
  return out;
}

}  // namespace

TEST_CASE("sublevel map of |x| on [-1, 1]") {
  const PLFunction f = fixture_function("abs_fn");
  const SetValuedMap l = sublevel_map(f, function_domain(f));
  CHECK(l.n == 1);
  CHECK(l.m == 1);
  for (const char* x : {"-1", "-1/2", "0", "1/2", "1"}) CHECK(in_value(l, q("1/2"), q(x)) == (abs(q(x)) <= q("1/2") || abs(q(x)) == 1));
  for (const char* x : {"-1", "-1/2", "0", "1"}) CHECK(in_value(l, q("-1"), q(x)) == (abs(q(x)) == 1));
  CHECK(in_value(l, q("2"), q("1/3")));
  CHECK_FALSE(in_value(l, q("2"), q("3/2")));
}

TEST_CASE("sublevel maps of constant and linear functions on [0, 1]") {
  const PLFunction zero = interpolant({0, 1}, {0, 0});
  const SetValuedMap lz = sublevel_map(zero, function_domain(zero));
  CHECK(in_value(lz, 0, q("1/2")));
  CHECK_FALSE(in_value(lz, q("-1/10"), q("1/2")));
  CHECK(in_value(lz, q("-1/10"), 0));
  CHECK(in_value(lz, q("-1/10"), 1));
  const PLFunction lin = interpolant({0, 1}, {0, 1});
  const SetValuedMap ll = sublevel_map(lin, function_domain(lin));
  CHECK(in_value(ll, q("1/2"), q("1/2")));
  CHECK_FALSE(in_value(ll, q("1/2"), q("3/4")));
  CHECK(in_value(ll, q("1/2"), 1));
  CHECK(in_value(ll, 2, q("3/4")));
}

TEST_CASE("local minimum values") {
  const PLFunction abs = fixture_function("abs_fn");
  const LocalMinReport a = local_min_values(abs, function_domain(abs));
  CHECK(a.values == std::vector<Rational>{0});
  CHECK(a.consistent);
  const PLFunction wells = fixture_function("two_wells_fn");
  const LocalMinReport w = local_min_values(wells, function_domain(wells));
  CHECK(w.values == std::vector<Rational>{0, 1});
  CHECK(w.sublevel_jumps == std::vector<Rational>{0, 1});
  CHECK(w.consistent);
  const PLFunction lin = interpolant({0, 1}, {0, 1});
  const LocalMinReport l = local_min_values(lin, function_domain(lin));
  CHECK(l.values.empty());
  CHECK(l.consistent);
}

TEST_CASE("function validation") {
  PLFunction clash = interpolant({0, 1}, {0, 1});
  clash.pieces.push_back({box_cell(v({0}), v({1})), v({0}), 5});
  CHECK_THROWS_AS(validate_function(clash, function_domain(clash)), std::invalid_argument);
  const PLFunction f = interpolant({0, 1}, {0, 1});
  CHECK_THROWS_AS(validate_function(f, CellComplex(1, {box_cell(v({0}), v({2}))})), std::invalid_argument);
  CHECK(evaluate(f, v({q("1/2")})) == q("1/2"));
  CHECK_FALSE(evaluate(f, v({3})).has_value());
}

TEST_CASE("random interpolants: local minimum values and sublevel jumps agree with brute force") {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const int k = static_cast<int>(rng.uniform(2, 5));
    std::vector<Rational> xs, ys;
    Rational x(rng.uniform(-3, 0));
    for (int i = 0; i <= k; ++i) {
      xs.push_back(x);
      ys.push_back(Rational(rng.uniform(-2, 2)));
      x += Rational(rng.uniform(1, 2));
    }
    const PLFunction f = interpolant(xs, ys);
    CAPTURE(t);
    const LocalMinReport r = local_min_values(f, function_domain(f));
    const std::set<Rational> expected = brute_local_mins(xs, ys);
    CHECK(std::set<Rational>(r.values.begin(), r.values.end()) == expected);
    CHECK(r.consistent);
  }
}
