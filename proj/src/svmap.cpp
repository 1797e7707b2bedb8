#include "pwmap/svmap.hpp"

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

Vec slice_point(const LinearCell& graph_cell, const Vec& x) {
  const auto y = find_point(slice_at(graph_cell, x));
  if (!y) throw std::logic_error("slice of a stratum over its domain stratum is empty");
  return *y;
}

Rational point_distance(const Vec& v, const LinearCell& target, NormKind norm) {
  const Eigen::Index d = v.size();
  LinearCell lp(2 * d);
  auto lift = [&](const Vec& a) {
    Vec out = zeros(2 * d);
    out.head(d) = a;
    return out;
  };
  for (const auto& c : target.eq) lp.add_eq(lift(c.normal), c.rhs);
  for (const auto& c : target.le) lp.add_le(lift(c.normal), c.rhs);
  Vec objective = zeros(2 * d);
  if (norm == NormKind::sup) {
    // u_0 serves as the single bound s; the other auxiliaries are pinned to 0.
    for (Eigen::Index i = 0; i < d; ++i) {
      Vec row = unit(2 * d, i);
      row(d) = -1;
      lp.add_le(row, v(i));
      Vec row2 = -unit(2 * d, i);
      row2(d) = -1;
      lp.add_le(row2, -v(i));
      if (i > 0) lp.add_eq(unit(2 * d, d + i), 0);
    }
    objective(d) = 1;
  } else {
    for (Eigen::Index i = 0; i < d; ++i) {
      Vec row = unit(2 * d, i);
      row(d + i) = -1;
      lp.add_le(row, v(i));
      Vec row2 = -unit(2 * d, i);
      row2(d + i) = -1;
      lp.add_le(row2, -v(i));
      objective(d + i) = 1;
    }
  }
  const LpOutcome out = lp_solve({objective, lp, Sense::minimize});
  if (out.status != LpStatus::optimal) throw std::logic_error("point_distance: LP failed");
  return out.value;
}

}  // namespace

std::vector<LinearCell> evaluate(const SetValuedMap& map, const Vec& x) {
  if (x.size() != map.n) throw std::invalid_argument("evaluate: point has wrong dimension");
  std::vector<LinearCell> out;
  for (const auto& c : map.graph.cells) {
    LinearCell s = slice_at(c, x);
    if (!is_empty(s)) out.push_back(remove_redundant(s));
  }
  return out;
}

CellComplex domain(const SetValuedMap& map) {
  CellComplex out(map.n);
  for (const auto& c : map.graph.cells)
    if (!is_empty(c)) out.cells.push_back(project_prefix(c, map.n));
  return out;
}

SetValuedMap closure_map(const SetValuedMap& map) {
  SetValuedMap out;
  out.n = map.n;
  out.m = map.m;
  out.name = map.name;
  out.graph = closed_graph(map);
  return out;
}

MapStructure map_structure(const SetValuedMap& map, const StructureOptions& options) {
  MapStructure s;
  s.n = map.n;
  s.m = map.m;
  CellComplex closed = closed_graph(map);
  s.graph = refine(closed, RefineOptions{options.max_hyperplanes, {}});
  for (const auto& st : s.graph.strata) {
    bool in = false;
    for (const auto& c : map.graph.cells) in = in || cell_membership(c, st.sample);
    s.in_graph.push_back(in);
    s.graph_proj.push_back(project_prefix(st.cell, map.n));
  }
  CellComplex proj(map.n);
  RefineOptions dopts{64, {}};
  for (const auto& c : closed.cells) proj.cells.push_back(project_prefix(c, map.n));
  for (const auto& p : s.graph_proj) {
    for (const auto& r : p.eq) add_hyperplane(dopts.extra, r.normal, r.rhs);
    for (const auto& r : p.le) add_hyperplane(dopts.extra, r.normal, r.rhs);
    for (const auto& r : p.lt) add_hyperplane(dopts.extra, r.normal, r.rhs);
  }
  s.dom = refine(proj, dopts);
  for (const auto& g : s.dom.strata) {
    std::vector<std::size_t> over;
    bool in = false;
    for (std::size_t k = 0; k < s.graph_proj.size(); ++k) {
      if (!cell_membership(s.graph_proj[k], g.sample)) continue;
      over.push_back(k);
      in = in || s.in_graph[k];
    }
    s.over.push_back(std::move(over));
    s.in_dom.push_back(in);
    if (in) s.dom_dim = std::max(s.dom_dim, g.dim);
  }
  return s;
}

ContinuityReport classify_stratum(const SetValuedMap& map, const MapStructure& s, std::size_t g, const Vec& x,
                                  const NormSpec& norms) {
  ContinuityReport r;
  r.point = x;
  r.in_domain = s.in_dom[g];
  const auto& over = s.over[g];

  r.osc = true;
  for (auto k : over) {
    if (s.in_graph[k]) continue;
    r.osc = false;
    r.osc_witness = slice_point(s.graph.strata[k].cell, x);
    break;
  }

  r.isc = true;
  const auto incident = incident_strata(s.dom, g);
  bool has_dom_neighbour = false;
  for (auto h : incident) has_dom_neighbour = has_dom_neighbour || s.in_dom[h];
  r.isolated = r.in_domain && !has_dom_neighbour && s.dom.strata[g].dim == 0;
  if (r.in_domain) {
    for (auto q : over) {
      if (!s.in_graph[q] || !r.isc) continue;
      for (auto h : incident) {
        if (!s.in_dom[h]) continue;
        bool reached = false;
        for (auto f : s.over[h])
          if (s.in_graph[f] && in_closure_of(s.graph.strata[q].signs, s.graph.strata[f].signs)) {
            reached = true;
            break;
          }
        if (!reached) {
          r.isc = false;
          r.isc_witness = slice_point(s.graph.strata[q].cell, x);
          r.isc_direction = Vec(s.dom.strata[h].sample - x);
          break;
        }
      }
    }
  }
  r.continuous = r.osc && r.isc;

  r.strictly_continuous = r.continuous;
  if (r.continuous && r.in_domain) {
    for (auto q : over) {
      if (!s.in_graph[q]) continue;
      const Vec y = slice_point(s.graph.strata[q].cell, x);
      const AubinVerdict v = aubin_check_relative(map, s.dom.strata[g].cell, x, y, norms);
      if (!v.applicable || !v.holds) {
        r.strictly_continuous = false;
        r.lip_witness = y;
        break;
      }
    }
  }
  return r;
}

ContinuityReport classify_point(const SetValuedMap& map, const Vec& x, const NormSpec& norms) {
  if (x.size() != map.n) throw std::invalid_argument("classify_point: point has wrong dimension");
  const MapStructure s = map_structure(map);
  const auto g = locate(s.dom, x);
  if (!g) throw std::domain_error("classify_point: point outside the closure of the domain");
  return classify_stratum(map, s, *g, x, norms);
}

Extended lipschitz_modulus(const SetValuedMap& map, const MapStructure& s, std::size_t g, const Vec& x,
                           const NormSpec& norms) {
  Rational best = 0;
  for (auto q : s.over[g]) {
    if (!s.in_graph[q]) continue;
    const Vec y = slice_point(s.graph.strata[q].cell, x);
    const AubinVerdict v = aubin_check_relative(map, s.dom.strata[g].cell, x, y, norms);
    if (!v.applicable || !v.holds) return std::nullopt;
    best = max(best, *v.modulus.value);
  }
  return best;
}

Extended lipschitz_modulus(const SetValuedMap& map, const Vec& x, const NormSpec& norms) {
  const MapStructure s = map_structure(map);
  const auto g = locate(s.dom, x);
  if (!g || !s.in_dom[*g]) throw std::domain_error("lipschitz_modulus: point outside the domain");
  return lipschitz_modulus(map, s, *g, x, norms);
}

FailureSet make_failure_set(std::vector<LinearCell> strata, std::vector<int> dims, int reference_dim) {
  FailureSet f;
  f.strata = std::move(strata);
  f.dims = std::move(dims);
  for (int d : f.dims) f.dim = std::max(f.dim, d);
  f.reference_dim = reference_dim;
  f.verdict = f.strata.empty() || f.dim < reference_dim;
  return f;
}

FailureSet closedness_defect(const SetValuedMap& map, const MapStructure& s) {
  (void)map;
  std::vector<LinearCell> cells;
  std::vector<int> dims;
  for (std::size_t g = 0; g < s.dom.strata.size(); ++g) {
    const bool defect = std::any_of(s.over[g].begin(), s.over[g].end(), [&](std::size_t k) { return !s.in_graph[k]; });
    if (!defect) continue;
    cells.push_back(remove_redundant(s.dom.strata[g].cell));
    dims.push_back(s.dom.strata[g].dim);
  }
  return make_failure_set(std::move(cells), std::move(dims), s.dom_dim);
}

FailureSet closedness_defect(const SetValuedMap& map) { return closedness_defect(map, map_structure(map)); }

FailureSet discontinuity_set(const SetValuedMap& map, const MapStructure& s, ContinuityProperty property,
                             const NormSpec& norms) {
  std::vector<LinearCell> cells;
  std::vector<int> dims;
  for (std::size_t g = 0; g < s.dom.strata.size(); ++g) {
    const auto& st = s.dom.strata[g];
    const ContinuityReport r = classify_stratum(map, s, g, st.sample, norms);
    const bool ok = property == ContinuityProperty::continuity ? r.continuous : r.strictly_continuous;
    if (ok) continue;
    cells.push_back(remove_redundant(st.cell));
    dims.push_back(st.dim);
  }
  return make_failure_set(std::move(cells), std::move(dims), s.dom_dim);
}

FailureSet discontinuity_set(const SetValuedMap& map, ContinuityProperty property, const NormSpec& norms) {
  return discontinuity_set(map, map_structure(map), property, norms);
}

bool is_closed_valued(const SetValuedMap& map, const MapStructure& s) {
  (void)map;
  for (std::size_t g = 0; g < s.dom.strata.size(); ++g) {
    for (auto q : s.over[g]) {
      if (!s.in_graph[q]) continue;
      for (auto p : s.over[g]) {
        if (s.in_graph[p] || p == q) continue;
        if (in_closure_of(s.graph.strata[p].signs, s.graph.strata[q].signs)) return false;
      }
    }
  }
  return true;
}

bool is_closed_valued(const SetValuedMap& map) { return is_closed_valued(map, map_structure(map)); }

std::vector<Vec> polytope_vertices(const LinearCell& cell) {
  if (is_empty(cell)) throw std::domain_error("polytope_vertices: empty cell");
  const LinearCell c = relaxed(cell);
  const Eigen::Index d = c.dim;
  auto hom = [&](const Constraint& r) {
    Vec v(d + 1);
    v << r.normal, -r.rhs;
    return v;
  };
  std::vector<Vec> eq, ineq;
  for (const auto& r : c.eq) eq.push_back(hom(r));
  for (const auto& r : c.le) ineq.push_back(hom(r));
  ineq.push_back(-unit(d + 1, d));
  const ConeGenerators g = dd_rays(d + 1, eq, ineq);
  if (!g.lineality.empty()) throw std::domain_error("polytope_vertices: unbounded cell");
  std::vector<Vec> out;
  for (const auto& r : g.rays) {
    if (r(d).sign() <= 0) throw std::domain_error("polytope_vertices: unbounded cell");
    out.push_back(Vec(r.head(d) / r(d)));
  }
  return out;
}

Rational hausdorff_distance(const LinearCell& a, const LinearCell& b, NormKind norm) {
  if (a.dim != b.dim) throw std::invalid_argument("hausdorff_distance: dimension mismatch");
  const auto va = polytope_vertices(a);
  const auto vb = polytope_vertices(b);
  const LinearCell ca = relaxed(a), cb = relaxed(b);
  Rational best = 0;
  for (const auto& v : va) best = max(best, point_distance(v, cb, norm));
  for (const auto& v : vb) best = max(best, point_distance(v, ca, norm));
  return best;
}

FailureSet generic_regularity_check(const CellComplex& closed_cells) {
  CellComplex c(closed_cells.dim);
  for (const auto& k : closed_cells.cells)
    if (!is_empty(k)) c.cells.push_back(relaxed(k));
  const Stratification strat = refine(c, RefineOptions{40, {}});
  std::vector<LinearCell> cells;
  std::vector<int> dims;
  int boundary_dim = -1;
  for (const auto& st : strat.strata) {
    if (st.dim == c.dim) continue;  // open strata are interior: both cones are {0}
    const Germ germ = make_germ(c, st.sample);
    if (germ_covers_space(germ)) continue;
    boundary_dim = std::max(boundary_dim, st.dim);
    const ConvexCone h = hadamard_normal_cone(c, st.sample);
    const ConeUnion lim = limiting_normal_cone(c, st.sample);
    bool equal = true;
    for (const auto& k : lim.members) equal = equal && k.subset_of(h);
    if (equal) continue;
    cells.push_back(remove_redundant(st.cell));
    dims.push_back(st.dim);
  }
  return make_failure_set(std::move(cells), std::move(dims), boundary_dim);
}

}  // namespace pwmap
