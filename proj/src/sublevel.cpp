#include "pwmap/sublevel.hpp"

#include <algorithm>
#include <stdexcept>

#include "pwmap/cone.hpp"
#include "pwmap/germ.hpp"
#include "pwmap/lp.hpp"

namespace pwmap {

namespace {

LinearCell relaxed(const LinearCell& c) {
  LinearCell out(c.dim);
  out.eq = c.eq;
  out.le = c.le;
  out.le.insert(out.le.end(), c.lt.begin(), c.lt.end());
  return out;
}

// Embeds a cell of R^n into R^(1+n) with a free leading coordinate.
LinearCell prepend_free(const LinearCell& c) {
  LinearCell out(c.dim + 1);
  auto shift = [&](const std::vector<Constraint>& src, std::vector<Constraint>& dst) {
    for (const auto& r : src) {
      Vec a(c.dim + 1);
      a << Rational(0), r.normal;
      dst.push_back({a, r.rhs});
    }
  };
  shift(c.eq, out.eq);
  shift(c.le, out.le);
  shift(c.lt, out.lt);
  return out;
}

std::vector<Hyperplane> piece_hyperplanes(const PLFunction& f) {
  std::vector<Hyperplane> hs;
  for (const auto& p : f.pieces) {
    for (const auto& r : p.cell.eq) add_hyperplane(hs, r.normal, r.rhs);
    for (const auto& r : p.cell.le) add_hyperplane(hs, r.normal, r.rhs);
    for (const auto& r : p.cell.lt) add_hyperplane(hs, r.normal, r.rhs);
  }
  return hs;
}

CellComplex closed_nonempty(const CellComplex& d) {
  CellComplex out(d.dim);
  for (const auto& c : d.cells)
    if (!is_empty(c)) out.cells.push_back(relaxed(c));
  return out;
}

Stratification domain_strata(const PLFunction& f, const CellComplex& d) {
  return refine(closed_nonempty(d), RefineOptions{40, piece_hyperplanes(f)});
}

std::optional<std::size_t> piece_at(const PLFunction& f, const Vec& x) {
  for (std::size_t k = 0; k < f.pieces.size(); ++k)
    if (cell_membership(f.pieces[k].cell, x)) return k;
  return std::nullopt;
}

void check_dims(const PLFunction& f, const CellComplex& d) {
  if (d.dim != f.n) throw std::invalid_argument("function and domain dimensions differ");
  for (const auto& p : f.pieces)
    if (p.cell.dim != f.n || p.coeffs.size() != f.n) throw std::invalid_argument("piece has wrong dimension");
}

}  // namespace

std::optional<Rational> evaluate(const PLFunction& f, const Vec& x) {
  if (x.size() != f.n) throw std::invalid_argument("evaluate: point has wrong dimension");
  const auto k = piece_at(f, x);
  if (!k) return std::nullopt;
  return f.pieces[*k].value(x);
}

CellComplex function_domain(const PLFunction& f) {
  CellComplex out(f.n);
  for (const auto& p : f.pieces)
    if (!is_empty(p.cell)) out.cells.push_back(relaxed(p.cell));
  return out;
}

void validate_function(const PLFunction& f, const CellComplex& d) {
  check_dims(f, d);
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < f.pieces.size(); ++j) {
      const LinearCell inter = f.pieces[i].cell.intersect(f.pieces[j].cell);
      if (is_empty(inter)) continue;
      const Vec diff = f.pieces[i].coeffs - f.pieces[j].coeffs;
      const Rational off = f.pieces[i].offset - f.pieces[j].offset;
      const LinearCell closed = relaxed(inter);
      const auto hi = lp_max(closed, diff);
      const auto lo = lp_max(closed, Vec(-diff));
      if (!hi || !lo || *hi + off != 0 || -*lo + off != 0)
        throw std::invalid_argument("pieces " + std::to_string(i) + " and " + std::to_string(j) +
                                    " disagree on their overlap");
    }
  }
  const Stratification strat = domain_strata(f, d);
  std::vector<std::size_t> piece_of(strat.strata.size());
  for (std::size_t s = 0; s < strat.strata.size(); ++s) {
    const auto k = piece_at(f, strat.strata[s].sample);
    if (!k) throw std::invalid_argument("the pieces do not cover the domain");
    piece_of[s] = *k;
  }
  for (const auto& [hi, lo] : strat.frontier) {
    // f on the lower stratum must not exceed the limit from the higher one.
    const auto& pl = f.pieces[piece_of[lo]];
    const auto& ph = f.pieces[piece_of[hi]];
    const auto gap = lp_max(relaxed(strat.strata[lo].cell), Vec(pl.coeffs - ph.coeffs));
    if (!gap || *gap + pl.offset - ph.offset > 0)
      throw std::invalid_argument("function is not lower semicontinuous on the domain");
  }
}

SetValuedMap sublevel_map(const PLFunction& f, const CellComplex& d) {
  check_dims(f, d);
  std::vector<LinearCell> cells;
  const CellComplex dd = closed_nonempty(d);
  for (const auto& p : f.pieces) {
    for (const auto& dc : dd.cells) {
      const LinearCell inter = p.cell.intersect(dc);
      if (is_empty(inter)) continue;
      LinearCell g = prepend_free(inter);
      Vec row(f.n + 1);
      row << Rational(-1), p.coeffs;
      g.add_le(row, -p.offset);
      cells.push_back(remove_redundant(g));
    }
  }
  const Stratification strat = refine(dd, RefineOptions{40, {}});
  for (const auto& s : strat.strata) {
    if (s.dim == f.n) continue;
    if (germ_covers_space(make_germ(dd, s.sample))) continue;
    cells.push_back(prepend_free(s.cell));
  }
  return SetValuedMap(1, f.n, std::move(cells), f.name.empty() ? "" : "L_" + f.name);
}

LocalMinReport local_min_values(const PLFunction& f, const CellComplex& d) {
  validate_function(f, d);
  const CellComplex dd = closed_nonempty(d);
  const Stratification strat = domain_strata(f, d);
  LocalMinReport rep;
  for (std::size_t s = 0; s < strat.strata.size(); ++s) {
    const Stratum& st = strat.strata[s];
    if (st.dim < f.n && !germ_covers_space(make_germ(dd, st.sample))) continue;
    const Vec& x = st.sample;
    const AffinePiece& p = f.pieces[*piece_at(f, x)];
    const Mat dirs = direction_space(st.cell);
    bool flat = true;
    for (Eigen::Index k = 0; k < dirs.cols() && flat; ++k) flat = dot(p.coeffs, Vec(dirs.col(k))).is_zero();
    if (!flat) continue;
    const Rational fx = p.value(x);
    bool minimal = true;
    for (auto hi : incident_strata(strat, s)) {
      const AffinePiece& q = f.pieces[*piece_at(f, strat.strata[hi].sample)];
      if (q.value(x) != fx) continue;
      const ConvexCone t = tangent_cone_convex(stratum_closure(strat.strata[hi]), x);
      for (const auto& l : t.lineality()) minimal = minimal && dot(q.coeffs, l).is_zero();
      for (const auto& r : t.rays()) minimal = minimal && dot(q.coeffs, r).sign() >= 0;
      if (!minimal) break;
    }
    if (!minimal) continue;
    rep.minimizer_strata.push_back(remove_redundant(st.cell));
    if (std::find(rep.values.begin(), rep.values.end(), fx) == rep.values.end()) rep.values.push_back(fx);
  }
  std::sort(rep.values.begin(), rep.values.end());

  const SetValuedMap lf = sublevel_map(f, d);
  const MapStructure ls = map_structure(lf);
  const FailureSet jumps = discontinuity_set(lf, ls, ContinuityProperty::continuity);
  bool interval_jump = false;
  auto in_range = [&](const LinearCell& rcell) {
    // Some x in D with f(x) in rcell.
    for (const auto& p : f.pieces) {
      for (const auto& dc : dd.cells) {
        LinearCell g = prepend_free(p.cell.intersect(dc));
        Vec row(f.n + 1);
        row << Rational(-1), p.coeffs;
        g.add_eq(row, -p.offset);
        if (!is_empty(g.intersect(lift_cell(rcell, f.n)))) return true;
      }
    }
    return false;
  };
  auto add_jump = [&](const Rational& r) {
    if (std::find(rep.sublevel_jumps.begin(), rep.sublevel_jumps.end(), r) == rep.sublevel_jumps.end())
      rep.sublevel_jumps.push_back(r);
  };
  for (std::size_t i = 0; i < jumps.strata.size(); ++i) {
    if (!in_range(jumps.strata[i])) continue;
    if (jumps.dims[i] > 0) {
      interval_jump = true;
      continue;
    }
    add_jump((*find_point(jumps.strata[i]))(0));
  }
  // Continuity here is in all of R: at an end point of dom L_f the values are empty on one side.
  for (std::size_t g = 0; g < ls.dom.strata.size(); ++g) {
    if (ls.dom.strata[g].dim != 0 || !ls.in_dom[g]) continue;
    int sides = 0;
    for (auto h : incident_strata(ls.dom, g)) sides += ls.in_dom[h] ? 1 : 0;
    if (sides < 2 && in_range(ls.dom.strata[g].cell)) add_jump(ls.dom.strata[g].sample(0));
  }
  std::sort(rep.sublevel_jumps.begin(), rep.sublevel_jumps.end());
  rep.consistent = !interval_jump && rep.sublevel_jumps == rep.values;
  return rep;
}

}  // namespace pwmap
