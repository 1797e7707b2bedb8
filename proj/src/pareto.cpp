#include "pwmap/pareto.hpp"

#include <algorithm>
#include <stdexcept>

#include "pwmap/germ.hpp"
#include "pwmap/svmap.hpp"

namespace pwmap {

namespace {

bool in_graph(const SetValuedMap& map, const Vec& z) { return complex_membership(map.graph, z); }

// Exact test that z + t·dir stays in the graph for all t >= 0.
bool ray_in_graph(const SetValuedMap& map, const Vec& z, const Vec& dir) {
  std::vector<Rational> breaks;
  auto scan = [&](const std::vector<Constraint>& rows) {
    for (const auto& r : rows) {
      const Rational slope = dot(r.normal, dir);
      if (slope.is_zero()) continue;
      const Rational t = -r.value(z) / slope;
      if (t.sign() > 0) breaks.push_back(t);
    }
  };
  for (const auto& c : map.graph.cells) {
    scan(c.eq);
    scan(c.le);
    scan(c.lt);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Rational> probes{Rational(0)};
  Rational prev = 0;
  for (const auto& b : breaks) {
    probes.push_back((prev + b) / 2);
    probes.push_back(b);
    prev = b;
  }
  probes.push_back(prev + 1);
  for (const auto& t : probes)
    if (!in_graph(map, Vec(z + dir * t))) return false;
  return true;
}

LinearCell project_to_range(const LinearCell& cell, Eigen::Index n, Eigen::Index m) {
  LinearCell swapped(n + m);
  auto swap_rows = [&](const std::vector<Constraint>& src, std::vector<Constraint>& dst) {
    for (const auto& r : src) {
      Vec a(n + m);
      a << r.normal.tail(m), r.normal.head(n);
      dst.push_back({a, r.rhs});
    }
  };
  swap_rows(cell.eq, swapped.eq);
  swap_rows(cell.le, swapped.le);
  swap_rows(cell.lt, swapped.lt);
  return project_prefix(swapped, m);
}

}  // namespace

bool is_pointed(const ConvexCone& k) { return k.lineality().empty(); }

bool is_k_invariant(const SetValuedMap& map, const ConvexCone& k) {
  if (k.dim() != map.m) throw std::invalid_argument("ordering cone has wrong dimension");
  if (k.rays().empty() && k.lineality().empty()) return true;
  const MapStructure s = map_structure(map);
  for (std::size_t q = 0; q < s.graph.strata.size(); ++q) {
    if (!s.in_graph[q]) continue;
    const Vec& z = s.graph.strata[q].sample;
    std::vector<Vec> dirs = k.rays();
    for (const auto& l : k.lineality()) {
      dirs.push_back(l);
      dirs.push_back(-l);
    }
    for (const auto& r : dirs) {
      Vec dir = zeros(map.n + map.m);
      dir.tail(map.m) = r;
      if (!ray_in_graph(map, z, dir)) return false;
    }
  }
  return true;
}

SetValuedMap epigraphical_map(const SetValuedMap& map, const ConvexCone& k) {
  const Eigen::Index n = map.n, m = map.m, d = n + 2 * m;
  std::vector<LinearCell> cells;
  for (const auto& c : map.graph.cells) {
    if (is_empty(c)) continue;
    LinearCell big(d);
    auto lift = [&](const Constraint& r) {
      Vec a(d);
      a << r.normal, Vec(-r.normal.tail(m));
      return a;
    };
    for (const auto& r : c.eq) big.add_eq(lift(r), r.rhs);
    for (const auto& r : c.le) big.add_le(lift(r), r.rhs);
    for (const auto& r : c.lt) big.add_lt(lift(r), r.rhs);
    for (const auto& r : k.eq_rows()) {
      Vec a = zeros(d);
      a.tail(m) = r;
      big.add_eq(a, 0);
    }
    for (const auto& r : k.ineq_rows()) {
      Vec a = zeros(d);
      a.tail(m) = r;
      big.add_le(a, 0);
    }
    cells.push_back(project_prefix(big, n + m));
  }
  return SetValuedMap(n, m, std::move(cells), map.name.empty() ? "" : map.name + "+K");
}

ParetoReport pareto_min_values(const SetValuedMap& map, const ConvexCone& k) {
  if (k.dim() != map.m) throw std::invalid_argument("ordering cone has wrong dimension");
  if (!is_pointed(k)) throw std::invalid_argument("ordering cone is not pointed");
  if (!is_k_invariant(map, k))
    throw std::invalid_argument("map is not invariant under adding the ordering cone (use its epigraphical map)");
  const Eigen::Index n = map.n, m = map.m;
  Vec c = zeros(m);
  for (const auto& r : k.ineq_rows()) c -= r;

  const MapStructure s = map_structure(map);
  ParetoReport rep;
  for (std::size_t q = 0; q < s.graph.strata.size(); ++q) {
    if (!s.in_graph[q]) continue;
    const Germ germ = make_germ(map.graph, s.graph.strata[q].sample);
    bool dominated = false;
    for (const auto& cone : germ.cones) {
      LinearCell probe = cone;
      for (const auto& r : k.eq_rows()) {
        Vec a = zeros(n + m);
        a.tail(m) = r;
        probe.add_eq(a, 0);
      }
      for (const auto& r : k.ineq_rows()) {
        Vec a = zeros(n + m);
        a.tail(m) = -r;
        probe.add_le(a, 0);
      }
      Vec a = zeros(n + m);
      a.tail(m) = c;
      probe.add_lt(a, 0);
      if (find_point(probe)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    LinearCell values = remove_redundant(project_to_range(s.graph.strata[q].cell, n, m));
    if (std::find(rep.values.begin(), rep.values.end(), values) != rep.values.end()) continue;
    rep.dims.push_back(cell_dimension(values));
    rep.dim = std::max(rep.dim, rep.dims.back());
    rep.values.push_back(std::move(values));
  }
  rep.meager = rep.dim < m;
  return rep;
}

}  // namespace pwmap
