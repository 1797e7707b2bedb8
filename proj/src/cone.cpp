#include "pwmap/cone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pwmap {

namespace {

struct DdRay {
  Vec u;
  std::vector<bool> tight;
};

int rank_of_rows(const Mat& rows, const std::vector<bool>& pick) {
  std::vector<Vec> sel;
  for (std::size_t i = 0; i < pick.size(); ++i)
    if (pick[i]) sel.push_back(rows.row(static_cast<Eigen::Index>(i)).transpose());
  if (sel.empty()) return 0;
  return exact_rank(stack_rows(sel, rows.cols()));
}

// Extreme rays of the pointed cone {u : A u <= 0} in R^d, rank(A) = d.
std::vector<Vec> pointed_rays(const Mat& a) {
  const Eigen::Index d = a.cols();
  const auto nrows = static_cast<std::size_t>(a.rows());
  if (d == 0) return {};

  // Pick d independent rows for the initial simplicial cone.
  Mat at = a.transpose();
  const auto pivots = rref_in_place(at);
  if (static_cast<Eigen::Index>(pivots.size()) != d) throw std::logic_error("dd: cone is not pointed");
  std::vector<Eigen::Index> basis_rows(pivots.begin(), pivots.end());
  Mat s(d, d);
  for (Eigen::Index k = 0; k < d; ++k) s.row(k) = a.row(basis_rows[static_cast<std::size_t>(k)]);
  // Columns of -S^{-1}: solve S X = -I by elimination on [S | -I].
  Mat aug(d, 2 * d);
  aug.leftCols(d) = s;
  aug.rightCols(d) = Mat::Constant(d, d, Rational(0));
  for (Eigen::Index k = 0; k < d; ++k) aug(k, d + k) = -1;
  rref_in_place(aug);
  Mat inv = aug.rightCols(d);

  std::vector<bool> processed(nrows, false);
  for (auto r : basis_rows) processed[static_cast<std::size_t>(r)] = true;

  std::vector<DdRay> rays;
  for (Eigen::Index k = 0; k < d; ++k) {
    DdRay ray{primitive(Vec(inv.col(k))), std::vector<bool>(nrows, false)};
    for (std::size_t i = 0; i < nrows; ++i)
      if (processed[i] && dot(Vec(a.row(static_cast<Eigen::Index>(i)).transpose()), ray.u).is_zero()) ray.tight[i] = true;
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < nrows; ++i) {
    if (processed[i]) continue;
    const Vec h = a.row(static_cast<Eigen::Index>(i)).transpose();
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<DdRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(h, rays[r].u);
      const int sg = val[r].sign();
      if (sg > 0) pos.push_back(r);
      else {
        if (sg < 0) neg.push_back(r);
        DdRay keep = rays[r];
        keep.tight[i] = (sg == 0);
        next.push_back(std::move(keep));
      }
    }
    if (!pos.empty()) {
      for (auto p : pos) {
        for (auto n : neg) {
          std::vector<bool> common(nrows, false);
          int count = 0;
          for (std::size_t j = 0; j < nrows; ++j) {
            common[j] = rays[p].tight[j] && rays[n].tight[j];
            count += common[j] ? 1 : 0;
          }
          if (count < d - 2) continue;
          // Combinatorial pre-check: no third ray tight on the whole common set.
          bool blocked = false;
          for (std::size_t r = 0; r < rays.size() && !blocked; ++r) {
            if (r == p || r == n) continue;
            bool covers = true;
            for (std::size_t j = 0; j < nrows && covers; ++j)
              if (common[j] && !rays[r].tight[j]) covers = false;
            blocked = covers;
          }
          if (blocked) continue;
          if (rank_of_rows(a, common) != d - 2) continue;
          Vec u = rays[n].u * val[p] - rays[p].u * val[n];
          DdRay fresh{primitive(u), common};
          fresh.tight[i] = true;
          next.push_back(std::move(fresh));
        }
      }
    }
    processed[i] = true;
    rays = std::move(next);
  }
  std::vector<Vec> out;
  for (auto& r : rays) out.push_back(std::move(r.u));
  return out;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

std::vector<Vec> canonical_basis(const std::vector<Vec>& vs, Eigen::Index dim) {
  if (vs.empty()) return {};
  const Mat b = row_basis(stack_rows(vs, dim));
  std::vector<Vec> out;
  for (Eigen::Index r = 0; r < b.rows(); ++r) out.push_back(primitive(Vec(b.row(r).transpose())));
  return out;
}

}  // namespace

ConeGenerators dd_rays(Eigen::Index dim, const std::vector<Vec>& eq_rows, const std::vector<Vec>& ineq_rows) {
  std::vector<Vec> all = eq_rows;
  all.insert(all.end(), ineq_rows.begin(), ineq_rows.end());
  ConeGenerators gens;
  const Mat lin = all.empty() ? nullspace(Mat(0, dim), dim) : nullspace(stack_rows(all, dim), dim);
  for (Eigen::Index k = 0; k < lin.cols(); ++k) gens.lineality.push_back(primitive(Vec(lin.col(k))));

  // W = null(E) ∩ lin^⊥, parameterised by the columns of B.
  std::vector<Vec> w_rows = eq_rows;
  w_rows.insert(w_rows.end(), gens.lineality.begin(), gens.lineality.end());
  const Mat b = w_rows.empty() ? nullspace(Mat(0, dim), dim) : nullspace(stack_rows(w_rows, dim), dim);
  if (b.cols() == 0) return gens;

  std::vector<Vec> reduced;
  for (const auto& h : ineq_rows) {
    Vec r = b.transpose() * h;
    if (!is_zero(r)) reduced.push_back(std::move(r));
  }
  if (reduced.empty()) throw std::logic_error("dd: empty row set on a nontrivial pointed part");
  const Mat a = stack_rows(reduced, b.cols());
  for (const auto& u : pointed_rays(a)) gens.rays.push_back(primitive(Vec(b * u)));
  std::sort(gens.rays.begin(), gens.rays.end(), lex_less);
  return gens;
}

ConvexCone::ConvexCone(Eigen::Index dim) : dim_(dim) { h_ = HForm{}; }

ConvexCone ConvexCone::from_constraints(Eigen::Index dim, std::vector<Vec> eq_rows, std::vector<Vec> ineq_rows) {
  ConvexCone k;
  k.dim_ = dim;
  for (const auto& r : eq_rows)
    if (r.size() != dim) throw std::invalid_argument("cone row dimension mismatch");
  for (const auto& r : ineq_rows)
    if (r.size() != dim) throw std::invalid_argument("cone row dimension mismatch");
  k.h_ = HForm{std::move(eq_rows), std::move(ineq_rows)};
  return k;
}

ConvexCone ConvexCone::from_generators(Eigen::Index dim, std::vector<Vec> lineality, std::vector<Vec> rays) {
  ConvexCone k;
  k.dim_ = dim;
  for (const auto& r : lineality)
    if (r.size() != dim) throw std::invalid_argument("cone generator dimension mismatch");
  for (const auto& r : rays)
    if (r.size() != dim) throw std::invalid_argument("cone generator dimension mismatch");
  // Canonicalise via a round trip only when asked; store as given.
  k.v_ = ConeGenerators{std::move(lineality), std::move(rays)};
  return k;
}

ConvexCone ConvexCone::zero(Eigen::Index dim) {
  std::vector<Vec> rows;
  for (Eigen::Index i = 0; i < dim; ++i) rows.push_back(unit(dim, i));
  ConvexCone k = from_constraints(dim, rows, {});
  k.v_ = ConeGenerators{};
  return k;
}

void ConvexCone::need_v() const {
  if (v_) return;
  v_ = dd_rays(dim_, h_->eq, h_->ineq);
}

void ConvexCone::need_h() const {
  if (h_) return;
  // Constraint rows of cone(G) are the generators of its polar.
  std::vector<Vec> nonzero_rays;
  for (const auto& r : v_->rays)
    if (!pwmap::is_zero(r)) nonzero_rays.push_back(r);
  const ConeGenerators polar_gens = dd_rays(dim_, v_->lineality, nonzero_rays);
  h_ = HForm{polar_gens.lineality, polar_gens.rays};
}

const std::vector<Vec>& ConvexCone::eq_rows() const {
  need_h();
  return h_->eq;
}
const std::vector<Vec>& ConvexCone::ineq_rows() const {
  need_h();
  return h_->ineq;
}
const std::vector<Vec>& ConvexCone::lineality() const {
  need_v();
  return v_->lineality;
}
const std::vector<Vec>& ConvexCone::rays() const {
  need_v();
  return v_->rays;
}

bool ConvexCone::contains(const Vec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("cone contains: dimension mismatch");
  need_h();
  for (const auto& r : h_->eq)
    if (!dot(r, v).is_zero()) return false;
  for (const auto& r : h_->ineq)
    if (dot(r, v).sign() > 0) return false;
  return true;
}

bool ConvexCone::is_zero() const {
  if (v_) {
    if (!v_->lineality.empty()) return false;
    return std::all_of(v_->rays.begin(), v_->rays.end(), [](const Vec& r) { return pwmap::is_zero(r); });
  }
  need_v();
  return v_->lineality.empty() && v_->rays.empty();
}

int ConvexCone::dimension() const {
  need_v();
  std::vector<Vec> all = v_->lineality;
  all.insert(all.end(), v_->rays.begin(), v_->rays.end());
  if (all.empty()) return 0;
  return exact_rank(stack_rows(all, dim_));
}

bool ConvexCone::subset_of(const ConvexCone& other) const {
  need_v();
  for (const auto& l : v_->lineality)
    if (!other.contains(l) || !other.contains(Vec(-l))) return false;
  for (const auto& r : v_->rays)
    if (!other.contains(r)) return false;
  return true;
}

bool ConvexCone::same_as(const ConvexCone& other) const {
  return dim_ == other.dim_ && subset_of(other) && other.subset_of(*this);
}

ConvexCone ConvexCone::intersect(const ConvexCone& other) const {
  need_h();
  other.need_h();
  std::vector<Vec> eq = h_->eq;
  std::vector<Vec> ineq = h_->ineq;
  eq.insert(eq.end(), other.h_->eq.begin(), other.h_->eq.end());
  ineq.insert(ineq.end(), other.h_->ineq.begin(), other.h_->ineq.end());
  return from_constraints(dim_, std::move(eq), std::move(ineq));
}

ConvexCone ConvexCone::polar() const {
  ConvexCone k;
  k.dim_ = dim_;
  if (h_) k.v_ = ConeGenerators{h_->eq, h_->ineq};
  if (v_) k.h_ = HForm{v_->lineality, v_->rays};
  return k;
}

ConvexCone ConvexCone::with_equalities(const std::vector<Vec>& rows) const {
  need_h();
  std::vector<Vec> eq = h_->eq;
  eq.insert(eq.end(), rows.begin(), rows.end());
  return from_constraints(dim_, std::move(eq), h_->ineq);
}

std::string ConvexCone::describe() const {
  need_v();
  std::ostringstream os;
  auto vec = [&](const Vec& v) {
    os << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
    os << ")";
  };
  const auto lin = canonical_basis(v_->lineality, dim_);
  os << "lin[";
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (i) os << ", ";
    vec(lin[i]);
  }
  os << "] + cone[";
  for (std::size_t i = 0; i < v_->rays.size(); ++i) {
    if (i) os << ", ";
    vec(v_->rays[i]);
  }
  os << "]";
  return os.str();
}

void ConeUnion::add(const ConvexCone& k) {
  for (const auto& m : members)
    if (m.same_as(k)) return;
  members.push_back(k);
}

bool ConeUnion::contains(const Vec& v) const {
  return std::any_of(members.begin(), members.end(), [&](const ConvexCone& k) { return k.contains(v); });
}

bool ConeUnion::is_zero() const {
  return std::all_of(members.begin(), members.end(), [](const ConvexCone& k) { return k.is_zero(); });
}

ConvexCone tangent_cone_convex(const LinearCell& cell, const Vec& point) {
  std::vector<Vec> eq, ineq;
  for (const auto& c : cell.eq) eq.push_back(c.normal);
  for (const auto& c : cell.le) {
    const int s = c.value(point).sign();
    if (s > 0) throw std::domain_error("tangent_cone_convex: point outside the closed cell");
    if (s == 0) ineq.push_back(c.normal);
  }
  for (const auto& c : cell.lt) {
    const int s = c.value(point).sign();
    if (s > 0) throw std::domain_error("tangent_cone_convex: point outside the closed cell");
    if (s == 0) ineq.push_back(c.normal);
  }
  for (const auto& c : cell.eq)
    if (!c.value(point).is_zero()) throw std::domain_error("tangent_cone_convex: point outside the closed cell");
  return ConvexCone::from_constraints(cell.dim, std::move(eq), std::move(ineq));
}

ConvexCone normal_cone_convex(const LinearCell& cell, const Vec& point) {
  return tangent_cone_convex(cell, point).polar();
}

ConvexCone cone_intersect_subspace(const ConvexCone& cone, const std::vector<Vec>& basis) {
  const Eigen::Index d = cone.dim();
  Mat cols = Mat::Constant(d, static_cast<Eigen::Index>(basis.size()), Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = basis[i];
  const Mat comp = orthogonal_complement(cols, d);
  std::vector<Vec> rows;
  for (Eigen::Index k = 0; k < comp.cols(); ++k) rows.push_back(comp.col(k));
  return cone.with_equalities(rows);
}

}  // namespace pwmap
