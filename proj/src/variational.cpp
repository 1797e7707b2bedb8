#include "pwmap/variational.hpp"

#include <stdexcept>

#include "pwmap/germ.hpp"
#include "pwmap/lp.hpp"

namespace pwmap {

namespace {

bool in_closed(const LinearCell& cell, const Vec& p) {
  for (const auto& c : cell.eq)
    if (!c.value(p).is_zero()) return false;
  for (const auto& c : cell.le)
    if (c.value(p).sign() > 0) return false;
  for (const auto& c : cell.lt)
    if (c.value(p).sign() > 0) return false;
  return true;
}

std::vector<Vec> sign_vectors(Eigen::Index k) {
  std::vector<Vec> out;
  const long total = 1L << k;
  for (long mask = 0; mask < total; ++mask) {
    Vec s(k);
    for (Eigen::Index i = 0; i < k; ++i) s(i) = ((mask >> i) & 1) ? -1 : 1;
    out.push_back(s);
  }
  return out;
}

// Vectors whose maxima of v·w over w give the dual of the given primal norm.
std::vector<Vec> dual_norm_functionals(Eigen::Index k, NormKind primal) {
  if (primal == NormKind::sup) return sign_vectors(k);
  std::vector<Vec> out;
  for (Eigen::Index i = 0; i < k; ++i) {
    out.push_back(unit(k, i));
    out.push_back(-unit(k, i));
  }
  return out;
}

Extended outer_norm_member(const ConvexCone& k, Eigen::Index n, const NormSpec& norms) {
  const Eigen::Index d = k.dim();
  const Eigen::Index m = d - n;
  std::vector<Vec> range_zero;
  for (Eigen::Index j = 0; j < m; ++j) range_zero.push_back(unit(d, n + j));
  if (!k.with_equalities(range_zero).is_zero()) return std::nullopt;

  LinearCell poly(d);
  for (const auto& r : k.eq_rows()) poly.add_eq(r, 0);
  for (const auto& r : k.ineq_rows()) poly.add_le(r, 0);
  for (const auto& f : dual_norm_functionals(m, norms.range)) {
    Vec row = zeros(d);
    row.tail(m) = f;
    poly.add_le(row, 1);
  }
  Rational best = 0;
  for (const auto& f : dual_norm_functionals(n, norms.domain)) {
    Vec obj = zeros(d);
    obj.head(n) = f;
    const auto v = lp_max(poly, obj);
    if (!v) throw std::logic_error("outer_norm: unbounded slice of a cone with trivial horizontal part");
    if (*v > best) best = *v;
  }
  return best;
}

CellComplex closed_cells_of(const CellComplex& complex) {
  CellComplex out(complex.dim);
  for (const auto& c : complex.cells) {
    if (is_empty(c)) continue;
    out.cells.push_back(cell_closure(c));
  }
  return out;
}

Vec join(const Vec& x, const Vec& y) { return concat(x, y); }

std::vector<Vec> padded_basis(const Mat& dirs, Eigen::Index n, Eigen::Index m) {
  std::vector<Vec> basis;
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
    Vec v = zeros(n + m);
    v.head(n) = dirs.col(k);
    basis.push_back(v);
  }
  for (Eigen::Index j = 0; j < m; ++j) basis.push_back(unit(n + m, n + j));
  return basis;
}

}  // namespace

std::string to_string(NormKind k) { return k == NormKind::sup ? "sup" : "sum"; }

std::string to_string(const NormSpec& s) { return to_string(s.domain) + "," + to_string(s.range); }

std::string format_extended(const Extended& v) { return v ? v->str() : "inf"; }

Interval euclidean_bounds(const Rational& value, Eigen::Index n, Eigen::Index m, const NormSpec& norms) {
  if (value.is_zero()) return {0, 0};
  const long range_up = norms.range == NormKind::sup ? m : 1;
  const long dom_up = norms.domain == NormKind::sup ? 1 : n;
  const long range_down = norms.range == NormKind::sup ? 1 : m;
  const long dom_down = norms.domain == NormKind::sup ? n : 1;
  return {value / sqrt_upper(Rational(range_down * dom_down)), value * sqrt_upper(Rational(range_up * dom_up))};
}

ConvexCone hadamard_normal_cone(const CellComplex& closed_cells, const Vec& point) {
  std::optional<ConvexCone> acc;
  for (const auto& cell : closed_cells.cells) {
    if (!in_closed(cell, point)) continue;
    ConvexCone k = normal_cone_convex(cell, point);
    acc = acc ? acc->intersect(k) : k;
  }
  if (!acc) throw std::domain_error("hadamard_normal_cone: point outside the union");
  return *acc;
}

ConeUnion limiting_normal_cone(const CellComplex& closed_cells, const Vec& point) {
  CellComplex closed(closed_cells.dim);
  for (const auto& c : closed_cells.cells) {
    LinearCell k(c.dim);
    k.eq = c.eq;
    k.le = c.le;
    k.le.insert(k.le.end(), c.lt.begin(), c.lt.end());
    closed.cells.push_back(std::move(k));
  }
  const Germ germ = make_germ(closed, point);
  if (germ.cones.empty()) throw std::domain_error("limiting_normal_cone: point outside the union");
  CellComplex local(germ.dim, germ.cones);
  ConeUnion out(closed.dim);
  const Stratification faces = germ_faces(germ);
  for (const auto& f : faces.strata) out.add(hadamard_normal_cone(local, f.sample));
  return out;
}

NormalConeResult normal_cones(const CellComplex& closed_cells, const Vec& point) {
  return {hadamard_normal_cone(closed_cells, point), limiting_normal_cone(closed_cells, point), point};
}

CellComplex closed_graph(const SetValuedMap& map) { return closed_cells_of(map.graph); }

std::vector<LinearCell> coderivative(const SetValuedMap& map, const Vec& x, const Vec& y, const Vec& y_star) {
  if (x.size() != map.n || y.size() != map.m || y_star.size() != map.m)
    throw std::invalid_argument("coderivative: dimension mismatch");
  const ConeUnion n_graph = limiting_normal_cone(closed_graph(map), join(x, y));
  std::vector<LinearCell> out;
  for (const auto& k : n_graph.members) {
    LinearCell slice(map.n);
    for (const auto& r : k.eq_rows()) slice.add_eq(Vec(r.head(map.n)), dot(Vec(r.tail(map.m)), y_star));
    for (const auto& r : k.ineq_rows()) slice.add_le(Vec(r.head(map.n)), dot(Vec(r.tail(map.m)), y_star));
    if (is_empty(slice)) continue;
    LinearCell reduced = remove_redundant(slice);
    bool dup = false;
    for (const auto& o : out) dup = dup || o == reduced;
    if (!dup) out.push_back(std::move(reduced));
  }
  return out;
}

OuterNorm outer_norm(const ConeUnion& cones, Eigen::Index n, const NormSpec& norms) {
  Rational best = 0;
  for (const auto& k : cones.members) {
    const Extended v = outer_norm_member(k, n, norms);
    if (!v) return {std::nullopt, std::nullopt};
    if (*v > best) best = *v;
  }
  return {best, euclidean_bounds(best, n, cones.dim - n, norms)};
}

AubinVerdict aubin_check(const SetValuedMap& map, const Vec& x, const Vec& y, const NormSpec& norms) {
  if (x.size() != map.n || y.size() != map.m) throw std::invalid_argument("aubin_check: dimension mismatch");
  const Vec z = join(x, y);
  AubinVerdict v;
  v.norms = norms;
  const Germ germ = make_germ(map.graph, z);
  if (germ.cones.empty()) throw std::domain_error("aubin_check: point is not on the closed graph");
  v.applicable = germ_locally_closed(germ);
  v.modulus = outer_norm(limiting_normal_cone(closed_graph(map), z), map.n, norms);
  v.holds = v.modulus.value.has_value();
  return v;
}

AubinVerdict aubin_check_relative(const SetValuedMap& map, const LinearCell& stratum, const Vec& x, const Vec& y,
                                  const NormSpec& norms) {
  if (x.size() != map.n || y.size() != map.m || stratum.dim != map.n)
    throw std::invalid_argument("aubin_check_relative: dimension mismatch");
  if (!cell_membership(stratum, x)) throw std::domain_error("aubin_check_relative: point not in the stratum");
  const auto hull = affine_hull(stratum);
  CellComplex restricted(map.n + map.m);
  for (const auto& c : map.graph.cells) {
    LinearCell r = c;
    for (const auto& h : hull) {
      Vec a = zeros(map.n + map.m);
      a.head(map.n) = h.normal;
      r.add_eq(a, h.rhs);
    }
    restricted.cells.push_back(std::move(r));
  }
  const Vec z = join(x, y);
  AubinVerdict v;
  v.norms = norms;
  const Germ germ = make_germ(restricted, z);
  if (germ.cones.empty()) throw std::domain_error("aubin_check_relative: point is not on the closed graph");
  v.applicable = germ_locally_closed(germ);
  const ConeUnion n_graph = limiting_normal_cone(closed_cells_of(restricted), z);
  const auto basis = padded_basis(direction_space(stratum), map.n, map.m);
  ConeUnion cut(n_graph.dim);
  for (const auto& k : n_graph.members) cut.add(cone_intersect_subspace(k, basis));
  v.modulus = outer_norm(cut, map.n, norms);
  v.holds = v.modulus.value.has_value();
  return v;
}

OuterNorm uniform_kappa(const SetValuedMap& map, const NormSpec& norms) {
  Rational best = 0;
  for (const auto& piece : closed_graph(map).cells) {
    const LinearCell dom = project_prefix(piece, map.n);
    const LinearCell ri_dom = lift_cell(relative_interior_cell(dom), map.m);
    const auto basis = padded_basis(direction_space(dom), map.n, map.m);
    const Stratification faces = refine(CellComplex(piece.dim, {piece}), RefineOptions{64, {}});
    ConeUnion cones(piece.dim);
    for (const auto& f : faces.strata) {
      if (is_empty(f.cell.intersect(ri_dom))) continue;
      cones.add(cone_intersect_subspace(normal_cone_convex(piece, f.sample), basis));
    }
    const OuterNorm v = outer_norm(cones, map.n, norms);
    if (!v.value) return {std::nullopt, std::nullopt};
    if (*v.value > best) best = *v.value;
  }
  return {best, euclidean_bounds(best, map.n, map.m, norms)};
}

}  // namespace pwmap
