#include "pwmap/germ.hpp"

#include <stdexcept>

namespace pwmap {

namespace {

bool in_relaxation(const LinearCell& cell, const Vec& p) {
  for (const auto& c : cell.eq)
    if (!c.value(p).is_zero()) return false;
  for (const auto& c : cell.le)
    if (c.value(p).sign() > 0) return false;
  for (const auto& c : cell.lt)
    if (c.value(p).sign() > 0) return false;
  return true;
}

}  // namespace

Germ make_germ(const CellComplex& complex, const Vec& point) {
  if (point.size() != complex.dim) throw std::invalid_argument("make_germ: dimension mismatch");
  Germ g;
  g.base = point;
  g.dim = complex.dim;
  for (std::size_t i = 0; i < complex.cells.size(); ++i) {
    const LinearCell& cell = complex.cells[i];
    if (!in_relaxation(cell, point)) continue;
    if (!cell_membership(cell, point) && is_empty(cell)) continue;
    LinearCell cone(complex.dim);
    for (const auto& c : cell.eq) cone.add_eq(c.normal, 0);
    for (const auto& c : cell.le)
      if (c.value(point).is_zero()) cone.add_le(c.normal, 0);
    for (const auto& c : cell.lt)
      if (c.value(point).is_zero()) cone.add_lt(c.normal, 0);
    g.cones.push_back(std::move(cone));
    g.source.push_back(i);
  }
  return g;
}

Stratification germ_faces(const Germ& germ, bool whole_space, const std::vector<Vec>& extra_normals) {
  CellComplex closed(germ.dim);
  RefineOptions opts;
  opts.max_hyperplanes = 64;
  for (const auto& cone : germ.cones) {
    LinearCell c(germ.dim);
    c.eq = cone.eq;
    c.le = cone.le;
    c.le.insert(c.le.end(), cone.lt.begin(), cone.lt.end());
    for (const auto& r : c.eq) add_hyperplane(opts.extra, r.normal, 0);
    for (const auto& r : c.le) add_hyperplane(opts.extra, r.normal, 0);
    if (!whole_space) closed.cells.push_back(std::move(c));
  }
  for (const auto& v : extra_normals) add_hyperplane(opts.extra, v, 0);
  if (whole_space) closed.cells.push_back(LinearCell(germ.dim));
  return refine(closed, opts);
}

bool germ_contains(const Germ& germ, const Vec& direction) {
  for (const auto& c : germ.cones)
    if (cell_membership(c, direction)) return true;
  return false;
}

bool germ_locally_closed(const Germ& germ) {
  bool any_strict = false;
  for (const auto& c : germ.cones) any_strict = any_strict || !c.lt.empty();
  if (!any_strict) return true;
  const Stratification faces = germ_faces(germ);
  for (const auto& f : faces.strata)
    if (!germ_contains(germ, f.sample)) return false;
  return true;
}

bool germ_covers_space(const Germ& germ) {
  if (germ.cones.empty()) return false;
  const Stratification faces = germ_faces(germ, true);
  for (const auto& f : faces.strata)
    if (!germ_contains(germ, f.sample)) return false;
  return true;
}

}  // namespace pwmap
