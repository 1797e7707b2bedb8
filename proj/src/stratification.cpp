#include "pwmap/stratification.hpp"

#include <algorithm>
#include <stdexcept>

#include "pwmap/lp.hpp"

namespace pwmap {

namespace {

struct Piece {
  LinearCell cell;
  std::vector<signed char> signs;
  Vec sample;
  std::vector<std::size_t> cells;  // input cells compatible with the signs so far
};

// Adds the relation sign * h(z) > 0 (or h(z) = 0) to a cell.
void constrain(LinearCell& cell, const Hyperplane& h, int sign) {
  if (sign == 0) cell.add_eq(h.normal, h.rhs);
  else if (sign > 0) cell.add_gt(h.normal, h.rhs);
  else cell.add_lt(h.normal, h.rhs);
}

// Optimizes h over the closure of the piece.
LpOutcome extreme(const LinearCell& cell, const Hyperplane& h, Sense sense) {
  LinearCell closed(cell.dim);
  closed.eq = cell.eq;
  closed.le = cell.le;
  closed.le.insert(closed.le.end(), cell.lt.begin(), cell.lt.end());
  LpOutcome out = lp_solve({h.normal, closed, sense});
  if (out.status == LpStatus::infeasible) throw std::logic_error("refine: piece became infeasible");
  return out;
}

// Points of the (relatively open) piece where h has the target sign, found on the segment from
// the sample x towards an optimal vertex w, or along a recession ray. For x in a cell and w in
// its closure, [x, w) stays in the cell.
struct Reach {
  std::optional<Vec> beyond;  // a point with sign(h) = target
  std::optional<Vec> zero;    // a point with h = 0
};

Reach reach(const Piece& piece, const Hyperplane& h, int target) {
  Reach r;
  const Vec& x = piece.sample;
  const Rational v0 = h.value(x);
  const LpOutcome out = extreme(piece.cell, h, target > 0 ? Sense::maximize : Sense::minimize);
  Vec dir;
  Rational slope;
  if (out.status == LpStatus::unbounded) {
    dir = out.ray;
    slope = dot(h.normal, dir);
  } else {
    // h of the target sign only on the relative boundary means none in the piece.
    const Rational v1 = out.value - h.rhs;
    if (v1.sign() != target) return r;
    dir = out.witness - x;
    slope = v1 - v0;
  }
  // h(x + t·dir) = v0 + t·slope; pick t past the zero crossing (and below 1 for a vertex).
  const Rational t0 = -v0 / slope;
  const Rational t1 = out.status == LpStatus::unbounded ? t0 + 1 : (t0 + 1) / 2;
  if (!v0.is_zero()) r.zero = Vec(x + dir * t0);
  r.beyond = Vec(x + dir * t1);
  return r;
}

void split(std::vector<Piece>& out, const Piece& piece, const Hyperplane& h,
           const std::vector<std::vector<unsigned char>>& allowed, std::size_t k) {
  unsigned char any = 0;
  for (auto c : piece.cells) any |= allowed[c][k];
  const int s0 = h.value(piece.sample).sign();
  std::optional<Vec> at[3];
  at[s0 + 1] = piece.sample;
  bool skipped = false;
  for (int target : {-1, 1}) {
    if (target == s0) continue;
    // An LP is needed only if some compatible cell allows the target sign, or zero lies on the way.
    if (!(any & (1U << (target + 1))) && !(s0 != 0 && (any & 2U))) {
      skipped = true;
      continue;
    }
    const Reach r = reach(piece, h, target);
    if (r.beyond) at[target + 1] = r.beyond;
    if (r.zero) at[1] = r.zero;
  }
  const bool cut = skipped || (at[0] ? 1 : 0) + (at[1] ? 1 : 0) + (at[2] ? 1 : 0) > 1;
  for (int sign : {-1, 0, 1}) {
    if (!at[sign + 1]) continue;
    std::vector<std::size_t> cells;
    const unsigned char bit = static_cast<unsigned char>(1U << (sign + 1));
    for (auto c : piece.cells)
      if (allowed[c][k] & bit) cells.push_back(c);
    if (cells.empty()) continue;
    Piece child{piece.cell, piece.signs, std::move(*at[sign + 1]), std::move(cells)};
    // When h is known not to cut the piece its sign is implied, so the row would be redundant.
    if (cut) constrain(child.cell, h, sign);
    child.signs.push_back(static_cast<signed char>(sign));
    out.push_back(std::move(child));
  }
}

// For each cell and hyperplane, the bitmask of signs of h allowed by the cell's rows
// (bit 0: negative, bit 1: zero, bit 2: positive).
std::vector<unsigned char> allowed_signs(const LinearCell& cell, const std::vector<Hyperplane>& hyperplanes) {
  std::vector<unsigned char> mask(hyperplanes.size(), 7);
  auto apply = [&](const Constraint& c, int kind) {
    if (is_zero(c.normal)) return;
    Vec a = c.normal;
    Rational b = c.rhs;
    int orient = 0;
    for (Eigen::Index i = 0; i < a.size() && orient == 0; ++i) orient = a(i).sign();
    normalize_hyperplane(a, b);
    const auto it = std::find(hyperplanes.begin(), hyperplanes.end(), Hyperplane{a, b});
    if (it == hyperplanes.end()) throw std::logic_error("refine: row without hyperplane");
    auto& m = mask[static_cast<std::size_t>(it - hyperplanes.begin())];
    // Row value = orient-scaled h; allowed row signs: eq {0}, le {-, 0}, lt {-}.
    const unsigned char neg = orient > 0 ? 1 : 4;
    if (kind == 0) m &= 2;
    else if (kind == 1) m &= static_cast<unsigned char>(neg | 2);
    else m &= neg;
  };
  for (const auto& c : cell.eq) apply(c, 0);
  for (const auto& c : cell.le) apply(c, 1);
  for (const auto& c : cell.lt) apply(c, 2);
  return mask;
}

}  // namespace

void add_hyperplane(std::vector<Hyperplane>& list, Vec normal, Rational rhs) {
  if (is_zero(normal)) return;
  normalize_hyperplane(normal, rhs);
  Hyperplane h{std::move(normal), std::move(rhs)};
  if (std::find(list.begin(), list.end(), h) == list.end()) list.push_back(std::move(h));
}

std::vector<Hyperplane> collect_hyperplanes(const CellComplex& complex) {
  std::vector<Hyperplane> out;
  for (const auto& cell : complex.cells) {
    for (const auto& c : cell.eq) add_hyperplane(out, c.normal, c.rhs);
    for (const auto& c : cell.le) add_hyperplane(out, c.normal, c.rhs);
    for (const auto& c : cell.lt) add_hyperplane(out, c.normal, c.rhs);
  }
  return out;
}

bool in_closure_of(const std::vector<signed char>& g, const std::vector<signed char>& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0 && g[i] != 0) return false;
    if (f[i] != 0 && g[i] != 0 && g[i] != f[i]) return false;
  }
  return true;
}

Stratification refine(const CellComplex& complex, const RefineOptions& options) {
  Stratification strat;
  strat.dim = complex.dim;
  strat.hyperplanes = collect_hyperplanes(complex);
  for (const auto& h : options.extra) add_hyperplane(strat.hyperplanes, h.normal, h.rhs);
  if (strat.hyperplanes.size() > options.max_hyperplanes)
    throw std::length_error("refine: " + std::to_string(strat.hyperplanes.size()) +
                            " hyperplanes exceed the cap of " + std::to_string(options.max_hyperplanes));

  // One pass over the arrangement; pieces compatible with no nonempty cell are dropped.
  std::vector<std::vector<unsigned char>> allowed;
  std::vector<std::size_t> live;
  for (std::size_t ci = 0; ci < complex.cells.size(); ++ci) {
    allowed.push_back(allowed_signs(complex.cells[ci], strat.hyperplanes));
    if (find_point(complex.cells[ci])) live.push_back(ci);
  }
  std::vector<Piece> pieces;
  if (!live.empty()) pieces.push_back({LinearCell(complex.dim), {}, zeros(complex.dim), live});
  for (std::size_t k = 0; k < strat.hyperplanes.size(); ++k) {
    std::vector<Piece> next;
    for (const auto& p : pieces) split(next, p, strat.hyperplanes[k], allowed, k);
    pieces = std::move(next);
  }
  for (auto& p : pieces) {
    Stratum s;
    std::vector<Vec> zero_normals;
    for (std::size_t k = 0; k < p.signs.size(); ++k)
      if (p.signs[k] == 0) zero_normals.push_back(strat.hyperplanes[k].normal);
    const int rank = zero_normals.empty() ? 0 : exact_rank(stack_rows(zero_normals, complex.dim));
    s.dim = static_cast<int>(complex.dim) - rank;
    s.cell = std::move(p.cell);
    s.signs = std::move(p.signs);
    s.origin = std::move(p.cells);
    s.sample = std::move(p.sample);
    strat.strata.push_back(std::move(s));
  }
  // Deterministic order: by dimension, then sign vector.
  std::vector<std::size_t> order(strat.strata.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& sa = strat.strata[a];
    const auto& sb = strat.strata[b];
    if (sa.dim != sb.dim) return sa.dim < sb.dim;
    return sa.signs < sb.signs;
  });
  std::vector<Stratum> sorted;
  for (auto i : order) sorted.push_back(std::move(strat.strata[i]));
  strat.strata = std::move(sorted);

  for (std::size_t f = 0; f < strat.strata.size(); ++f)
    for (std::size_t g = 0; g < strat.strata.size(); ++g)
      if (f != g && strat.strata[g].dim < strat.strata[f].dim &&
          in_closure_of(strat.strata[g].signs, strat.strata[f].signs))
        strat.frontier.emplace_back(f, g);
  return strat;
}

std::vector<signed char> sign_vector(const Stratification& strat, const Vec& point) {
  if (point.size() != strat.dim) throw std::invalid_argument("sign_vector: dimension mismatch");
  std::vector<signed char> s;
  s.reserve(strat.hyperplanes.size());
  for (const auto& h : strat.hyperplanes) s.push_back(static_cast<signed char>(h.value(point).sign()));
  return s;
}

std::optional<std::size_t> locate(const Stratification& strat, const Vec& point) {
  const auto s = sign_vector(strat, point);
  for (std::size_t i = 0; i < strat.strata.size(); ++i)
    if (strat.strata[i].signs == s) return i;
  return std::nullopt;
}

std::vector<std::size_t> incident_strata(const Stratification& strat, std::size_t s) {
  std::vector<std::size_t> out;
  for (const auto& [f, g] : strat.frontier)
    if (g == s) out.push_back(f);
  return out;
}

LinearCell stratum_closure(const Stratum& s) {
  LinearCell c(s.cell.dim);
  c.eq = s.cell.eq;
  c.le = s.cell.le;
  c.le.insert(c.le.end(), s.cell.lt.begin(), s.cell.lt.end());
  return c;
}

}  // namespace pwmap
