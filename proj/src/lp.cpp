#include "pwmap/lp.hpp"

#include <stdexcept>

namespace pwmap {

namespace {

// Dense simplex tableau over GMP rationals in standard form
//   A x = b, x >= 0, b >= 0
// Column layout: [p (d) | q (d) | slack (L) | artificial (R)]; z = p - q.
class Tableau {
 public:
  Tableau(const LinearCell& cell)
      : d_(static_cast<int>(cell.dim)),
        n_eq_(static_cast<int>(cell.eq.size())),
        n_le_(static_cast<int>(cell.le.size())),
        rows_(n_eq_ + n_le_),
        cols_(2 * d_ + n_le_ + rows_),
        t_(static_cast<std::size_t>(rows_), std::vector<mpq_class>(static_cast<std::size_t>(cols_ + 1))),
        sign_(static_cast<std::size_t>(rows_), 1),
        basis_(static_cast<std::size_t>(rows_)) {
    for (int i = 0; i < rows_; ++i) {
      const Constraint& c = i < n_eq_ ? cell.eq[static_cast<std::size_t>(i)]
                                      : cell.le[static_cast<std::size_t>(i - n_eq_)];
      auto& row = t_[static_cast<std::size_t>(i)];
      const int s = c.rhs.sign() < 0 ? -1 : 1;
      sign_[static_cast<std::size_t>(i)] = s;
      for (int j = 0; j < d_; ++j) {
        mpq_class a = c.normal(j).raw();
        if (s < 0) a = -a;
        row[static_cast<std::size_t>(j)] = a;
        row[static_cast<std::size_t>(d_ + j)] = -a;
      }
      if (i >= n_eq_) row[static_cast<std::size_t>(2 * d_ + (i - n_eq_))] = s;
      row[static_cast<std::size_t>(art(i))] = 1;
      row[static_cast<std::size_t>(cols_)] = s < 0 ? mpq_class(-c.rhs.raw()) : c.rhs.raw();
      basis_[static_cast<std::size_t>(i)] = art(i);
    }
  }

  [[nodiscard]] int art(int i) const { return 2 * d_ + n_le_ + i; }
  [[nodiscard]] bool is_art(int j) const { return j >= 2 * d_ + n_le_; }

  enum class Result { optimal, unbounded };

  // Maximizes cost·x with Bland's rule; columns with allowed[j]==false never enter.
  Result maximize(const std::vector<mpq_class>& cost, const std::vector<bool>& allowed, int& unbounded_col) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < cols_ && entering < 0; ++j) {
        if (!allowed[static_cast<std::size_t>(j)] || in_basis(j)) continue;
        mpq_class r = cost[static_cast<std::size_t>(j)];
        for (int i = 0; i < rows_; ++i) {
          const auto& a = t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (sgn(a) == 0) continue;
          const auto& cb = cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
          if (sgn(cb) != 0) r -= cb * a;
        }
        if (sgn(r) > 0) entering = j;
      }
      if (entering < 0) return Result::optimal;
      int leaving = -1;
      mpq_class best;
      for (int i = 0; i < rows_; ++i) {
        const auto& a = t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
        if (sgn(a) <= 0) continue;
        mpq_class ratio = t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)] / a;
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving < 0) {
        unbounded_col = entering;
        return Result::unbounded;
      }
      pivot(leaving, entering);
    }
  }

  void pivot(int r, int c) {
    auto& prow = t_[static_cast<std::size_t>(r)];
    const mpq_class inv = 1 / prow[static_cast<std::size_t>(c)];
    for (auto& v : prow)
      if (sgn(v) != 0) v *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      auto& row = t_[static_cast<std::size_t>(i)];
      const mpq_class f = row[static_cast<std::size_t>(c)];
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        const auto& pv = prow[static_cast<std::size_t>(j)];
        if (sgn(pv) != 0) row[static_cast<std::size_t>(j)] -= f * pv;
      }
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  // Replaces artificial basics (at level zero) by structural columns where possible.
  void drive_out_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (!is_art(basis_[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; j < 2 * d_ + n_le_; ++j) {
        if (!in_basis(j) && sgn(t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  [[nodiscard]] bool in_basis(int j) const {
    for (int b : basis_)
      if (b == j) return true;
    return false;
  }

  [[nodiscard]] mpq_class objective_value(const std::vector<mpq_class>& cost) const {
    mpq_class v = 0;
    for (int i = 0; i < rows_; ++i)
      v += cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] *
           t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)];
    return v;
  }

  // y = c_B^T B^{-1}, read off the artificial columns, mapped back to the
  // original row orientation.
  [[nodiscard]] std::vector<mpq_class> duals(const std::vector<mpq_class>& cost) const {
    std::vector<mpq_class> y(static_cast<std::size_t>(rows_));
    for (int k = 0; k < rows_; ++k) {
      mpq_class s = 0;
      for (int i = 0; i < rows_; ++i) {
        const auto& cb = cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
        if (sgn(cb) != 0) s += cb * t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(art(k))];
      }
      y[static_cast<std::size_t>(k)] = sign_[static_cast<std::size_t>(k)] < 0 ? mpq_class(-s) : s;
    }
    return y;
  }

  [[nodiscard]] Vec point() const {
    std::vector<mpq_class> x(static_cast<std::size_t>(cols_));
    for (int i = 0; i < rows_; ++i)
      x[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)];
    return to_z(x);
  }

  [[nodiscard]] Vec ray(int entering) const {
    std::vector<mpq_class> x(static_cast<std::size_t>(cols_));
    x[static_cast<std::size_t>(entering)] = 1;
    for (int i = 0; i < rows_; ++i)
      x[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = -t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
    return to_z(x);
  }

  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] int dim() const { return d_; }
  [[nodiscard]] int n_eq() const { return n_eq_; }
  [[nodiscard]] int n_le() const { return n_le_; }
  [[nodiscard]] int rows() const { return rows_; }

 private:
  [[nodiscard]] Vec to_z(const std::vector<mpq_class>& x) const {
    Vec z(d_);
    for (int j = 0; j < d_; ++j)
      z(j) = Rational(mpq_class(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(d_ + j)]));
    return z;
  }

  int d_, n_eq_, n_le_, rows_, cols_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<int> sign_;
  std::vector<int> basis_;
};

void split_duals(const std::vector<mpq_class>& y, int n_eq, LpOutcome& out) {
  const int total = static_cast<int>(y.size());
  out.dual_eq = Vec(n_eq);
  out.dual_le = Vec(total - n_eq);
  for (int i = 0; i < total; ++i) {
    if (i < n_eq) out.dual_eq(i) = Rational(y[static_cast<std::size_t>(i)]);
    else out.dual_le(i - n_eq) = Rational(y[static_cast<std::size_t>(i)]);
  }
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  const LinearCell& cell = lp.cell;
  if (lp.objective.size() != cell.dim) throw std::invalid_argument("lp_solve: objective length differs from cell dimension");
  if (!cell.lt.empty()) throw std::invalid_argument("lp_solve: strict rows must be handled by find_point");
  for (const auto* list : {&cell.eq, &cell.le})
    for (const auto& c : *list)
      if (c.normal.size() != cell.dim) throw std::invalid_argument("lp_solve: row length differs from cell dimension");

  Tableau tab(cell);
  LpOutcome out;
  const int cols = tab.cols();

  // Phase 1: maximize -sum(artificials).
  std::vector<mpq_class> phase1(static_cast<std::size_t>(cols));
  for (int i = 0; i < tab.rows(); ++i) phase1[static_cast<std::size_t>(tab.art(i))] = -1;
  std::vector<bool> allowed(static_cast<std::size_t>(cols), true);
  int ucol = -1;
  tab.maximize(phase1, allowed, ucol);
  if (sgn(tab.objective_value(phase1)) < 0) {
    out.status = LpStatus::infeasible;
    // Phase-1 duals satisfy A^T u >= 0 on structural columns and b·u < 0,
    // which in the original orientation is exactly a Farkas certificate.
    split_duals(tab.duals(phase1), tab.n_eq(), out);
    return out;
  }

  tab.drive_out_artificials();
  for (int i = 0; i < tab.rows(); ++i) allowed[static_cast<std::size_t>(tab.art(i))] = false;

  const bool minimize = lp.sense == Sense::minimize;
  std::vector<mpq_class> cost(static_cast<std::size_t>(cols));
  for (int j = 0; j < tab.dim(); ++j) {
    mpq_class c = lp.objective(j).raw();
    if (minimize) c = -c;
    cost[static_cast<std::size_t>(j)] = c;
    cost[static_cast<std::size_t>(tab.dim() + j)] = -c;
  }
  if (tab.maximize(cost, allowed, ucol) == Tableau::Result::unbounded) {
    out.status = LpStatus::unbounded;
    out.ray = tab.ray(ucol);
    return out;
  }
  out.status = LpStatus::optimal;
  out.witness = tab.point();
  out.value = dot(lp.objective, out.witness);
  auto y = tab.duals(cost);
  if (minimize)
    for (auto& v : y) v = -v;
  split_duals(y, tab.n_eq(), out);
  return out;
}

std::optional<Rational> lp_max(const LinearCell& cell, const Vec& objective) {
  LpOutcome out = lp_solve({objective, cell, Sense::maximize});
  if (out.status == LpStatus::infeasible) throw std::domain_error("lp_max: empty cell");
  if (out.status == LpStatus::unbounded) return std::nullopt;
  return out.value;
}

namespace {

Vec combine(const LinearCell& cell, const Vec& y_eq, const Vec& y_le, Rational& rhs) {
  Vec g = zeros(cell.dim);
  rhs = 0;
  for (std::size_t i = 0; i < cell.eq.size(); ++i) {
    g += cell.eq[i].normal * y_eq(static_cast<Eigen::Index>(i));
    rhs += cell.eq[i].rhs * y_eq(static_cast<Eigen::Index>(i));
  }
  for (std::size_t i = 0; i < cell.le.size(); ++i) {
    g += cell.le[i].normal * y_le(static_cast<Eigen::Index>(i));
    rhs += cell.le[i].rhs * y_le(static_cast<Eigen::Index>(i));
  }
  return g;
}

}  // namespace

bool check_optimality_certificate(const LinearProgram& lp, const LpOutcome& out) {
  if (out.status != LpStatus::optimal) return false;
  if (!cell_membership(lp.cell, out.witness)) return false;
  if (dot(lp.objective, out.witness) != out.value) return false;
  for (Eigen::Index i = 0; i < out.dual_le.size(); ++i) {
    const int s = out.dual_le(i).sign();
    if (lp.sense == Sense::maximize ? s < 0 : s > 0) return false;
  }
  Rational rhs;
  const Vec g = combine(lp.cell, out.dual_eq, out.dual_le, rhs);
  return g == lp.objective && rhs == out.value;
}

bool check_farkas_certificate(const LinearCell& cell, const LpOutcome& out) {
  if (out.status != LpStatus::infeasible) return false;
  for (Eigen::Index i = 0; i < out.dual_le.size(); ++i)
    if (out.dual_le(i).sign() < 0) return false;
  Rational rhs;
  const Vec g = combine(cell, out.dual_eq, out.dual_le, rhs);
  return is_zero(g) && rhs.sign() < 0;
}

bool check_unbounded_ray(const LinearProgram& lp, const LpOutcome& out) {
  if (out.status != LpStatus::unbounded) return false;
  for (const auto& c : lp.cell.eq)
    if (!dot(c.normal, out.ray).is_zero()) return false;
  for (const auto& c : lp.cell.le)
    if (dot(c.normal, out.ray).sign() > 0) return false;
  const int s = dot(lp.objective, out.ray).sign();
  return lp.sense == Sense::maximize ? s > 0 : s < 0;
}

}  // namespace pwmap
