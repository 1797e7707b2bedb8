#include "pwmap/cell.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pwmap/lp.hpp"

namespace pwmap {

namespace {

void check_row(const LinearCell& cell, const Vec& a) {
  if (a.size() != cell.dim)
    throw std::invalid_argument("constraint row has length " + std::to_string(a.size()) +
                                ", expected " + std::to_string(cell.dim));
}

// Cell over (z, t) in R^(dim+1) used for slack maximisation.
Vec with_slack(const Vec& a, const Rational& t_coeff) {
  Vec out(a.size() + 1);
  out << a, t_coeff;
  return out;
}

std::optional<Vec> max_slack_point(const LinearCell& cell, const std::vector<Constraint>& as_eq,
                                   const std::vector<Constraint>& closed,
                                   const std::vector<Constraint>& slackened) {
  const Eigen::Index d = cell.dim;
  LinearCell aug(d + 1);
  for (const auto& c : as_eq) aug.add_eq(with_slack(c.normal, 0), c.rhs);
  for (const auto& c : closed) aug.add_le(with_slack(c.normal, 0), c.rhs);
  for (const auto& c : slackened) aug.add_le(with_slack(c.normal, 1), c.rhs);
  aug.add_le(unit(d + 1, d), 1);
  const LpOutcome out = lp_solve({unit(d + 1, d), aug, Sense::maximize});
  if (out.status != LpStatus::optimal || out.value.sign() <= 0) return std::nullopt;
  return Vec(out.witness.head(d));
}

LinearCell closed_relaxation(const LinearCell& cell) {
  LinearCell c(cell.dim);
  c.eq = cell.eq;
  c.le = cell.le;
  c.le.insert(c.le.end(), cell.lt.begin(), cell.lt.end());
  return c;
}

std::string format_row(const Vec& a) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).is_zero()) continue;
    const Rational c = a(i);
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational m = abs(c);
    if (m != Rational(1)) os << m << "*";
    os << "z" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

LinearCell& LinearCell::add_eq(Vec a, Rational b) {
  check_row(*this, a);
  eq.push_back({std::move(a), std::move(b)});
  return *this;
}

LinearCell& LinearCell::add_le(Vec a, Rational b) {
  check_row(*this, a);
  le.push_back({std::move(a), std::move(b)});
  return *this;
}

LinearCell& LinearCell::add_lt(Vec a, Rational b) {
  check_row(*this, a);
  lt.push_back({std::move(a), std::move(b)});
  return *this;
}

LinearCell LinearCell::intersect(const LinearCell& other) const {
  if (other.dim != dim) throw std::invalid_argument("intersect: dimension mismatch");
  LinearCell out = *this;
  out.eq.insert(out.eq.end(), other.eq.begin(), other.eq.end());
  out.le.insert(out.le.end(), other.le.begin(), other.le.end());
  out.lt.insert(out.lt.end(), other.lt.begin(), other.lt.end());
  return out;
}

CellComplex::CellComplex(Eigen::Index ambient_dim, std::vector<LinearCell> c)
    : dim(ambient_dim), cells(std::move(c)) {
  for (const auto& cell : cells)
    if (cell.dim != dim) throw std::invalid_argument("CellComplex: cell dimension mismatch");
}

LinearCell whole_space(Eigen::Index dim) { return LinearCell(dim); }

LinearCell box_cell(const Vec& lo, const Vec& hi) {
  LinearCell c(lo.size());
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    c.add_le(unit(lo.size(), i), hi(i));
    c.add_le(-unit(lo.size(), i), -lo(i));
  }
  return c;
}

LinearCell point_cell(const Vec& p) {
  LinearCell c(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) c.add_eq(unit(p.size(), i), p(i));
  return c;
}

bool cell_membership(const LinearCell& cell, const Vec& point) {
  if (point.size() != cell.dim) throw std::invalid_argument("cell_membership: dimension mismatch");
  for (const auto& c : cell.eq)
    if (!c.value(point).is_zero()) return false;
  for (const auto& c : cell.le)
    if (c.value(point).sign() > 0) return false;
  for (const auto& c : cell.lt)
    if (c.value(point).sign() >= 0) return false;
  return true;
}

bool complex_membership(const CellComplex& complex, const Vec& point) {
  return std::any_of(complex.cells.begin(), complex.cells.end(),
                     [&](const LinearCell& c) { return cell_membership(c, point); });
}

std::optional<Vec> find_point(const LinearCell& cell) {
  if (cell.lt.empty()) {
    const LpOutcome out = lp_solve({zeros(cell.dim), cell, Sense::maximize});
    if (out.status == LpStatus::infeasible) return std::nullopt;
    return out.witness;
  }
  return max_slack_point(cell, cell.eq, cell.le, cell.lt);
}

bool is_empty(const LinearCell& cell) { return !find_point(cell).has_value(); }

std::vector<std::size_t> implicit_equalities(const LinearCell& cell) {
  if (is_empty(cell)) throw std::domain_error("implicit_equalities: empty cell");
  const Eigen::Index d = cell.dim;
  std::vector<std::size_t> candidates(cell.le.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  while (!candidates.empty()) {
    const Eigen::Index k = static_cast<Eigen::Index>(candidates.size());
    LinearCell aug(d + k);
    auto pad = [&](const Vec& a) {
      Vec out = zeros(d + k);
      out.head(d) = a;
      return out;
    };
    for (const auto& c : cell.eq) aug.add_eq(pad(c.normal), c.rhs);
    std::vector<bool> is_candidate(cell.le.size(), false);
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      is_candidate[candidates[j]] = true;
      Vec a = pad(cell.le[candidates[j]].normal);
      a(d + static_cast<Eigen::Index>(j)) = 1;
      aug.add_le(a, cell.le[candidates[j]].rhs);
      aug.add_le(unit(d + k, d + static_cast<Eigen::Index>(j)), 1);
      aug.add_le(-unit(d + k, d + static_cast<Eigen::Index>(j)), 0);
    }
    for (std::size_t i = 0; i < cell.le.size(); ++i)
      if (!is_candidate[i]) aug.add_le(pad(cell.le[i].normal), cell.le[i].rhs);
    for (const auto& c : cell.lt) aug.add_le(pad(c.normal), c.rhs);
    Vec objective = zeros(d + k);
    objective.tail(k).setConstant(Rational(1));
    const LpOutcome out = lp_solve({objective, aug, Sense::maximize});
    if (out.status != LpStatus::optimal) throw std::logic_error("implicit_equalities: unexpected LP status");
    std::vector<std::size_t> still;
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (out.witness(d + static_cast<Eigen::Index>(j)).is_zero()) still.push_back(candidates[j]);
    if (still.size() == candidates.size()) break;
    candidates = std::move(still);
  }
  return candidates;
}

Vec relative_interior_point(const LinearCell& cell) {
  const auto implicit = implicit_equalities(cell);
  std::vector<Constraint> as_eq = cell.eq;
  std::vector<Constraint> slackened = cell.lt;
  std::vector<bool> flag(cell.le.size(), false);
  for (auto i : implicit) flag[i] = true;
  for (std::size_t i = 0; i < cell.le.size(); ++i)
    (flag[i] ? as_eq : slackened).push_back(cell.le[i]);
  if (slackened.empty()) {
    LinearCell c(cell.dim);
    c.eq = as_eq;
    const auto p = find_point(c);
    if (!p) throw std::domain_error("relative_interior_point: empty cell");
    return *p;
  }
  const auto p = max_slack_point(cell, as_eq, {}, slackened);
  if (!p) throw std::logic_error("relative_interior_point: slack LP failed on a nonempty cell");
  return *p;
}

LinearCell cell_closure(const LinearCell& cell) {
  if (is_empty(cell)) throw std::domain_error("cell_closure: empty cell");
  return closed_relaxation(cell);
}

std::vector<Constraint> affine_hull(const LinearCell& cell) {
  const auto implicit = implicit_equalities(cell);
  std::vector<Constraint> rows = cell.eq;
  for (auto i : implicit) rows.push_back(cell.le[i]);
  Mat aug(static_cast<Eigen::Index>(rows.size()), cell.dim + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    aug.row(static_cast<Eigen::Index>(i)).head(cell.dim) = rows[i].normal.transpose();
    aug(static_cast<Eigen::Index>(i), cell.dim) = rows[i].rhs;
  }
  const auto pivots = rref_in_place(aug);
  std::vector<Constraint> hull;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    hull.push_back({Vec(aug.row(row).head(cell.dim).transpose()), aug(row, cell.dim)});
  }
  return hull;
}

int cell_dimension(const LinearCell& cell) {
  if (is_empty(cell)) return -1;
  return static_cast<int>(cell.dim) - static_cast<int>(affine_hull(cell).size());
}

Mat direction_space(const LinearCell& cell) {
  const auto hull = affine_hull(cell);
  std::vector<Vec> normals;
  for (const auto& c : hull) normals.push_back(c.normal);
  return nullspace(stack_rows(normals, cell.dim), cell.dim);
}

LinearCell relative_interior_cell(const LinearCell& cell) {
  const auto implicit = implicit_equalities(cell);
  LinearCell out(cell.dim);
  out.eq = affine_hull(cell);
  std::vector<bool> flag(cell.le.size(), false);
  for (auto i : implicit) flag[i] = true;
  for (std::size_t i = 0; i < cell.le.size(); ++i)
    if (!flag[i]) out.lt.push_back(cell.le[i]);
  out.lt.insert(out.lt.end(), cell.lt.begin(), cell.lt.end());
  return remove_redundant(out);
}

LinearCell remove_redundant(const LinearCell& cell) {
  LinearCell out(cell.dim);
  // Equalities: canonical echelon basis; an inconsistent system is kept as 0 = 1.
  if (!cell.eq.empty()) {
    Mat aug(static_cast<Eigen::Index>(cell.eq.size()), cell.dim + 1);
    for (std::size_t i = 0; i < cell.eq.size(); ++i) {
      aug.row(static_cast<Eigen::Index>(i)).head(cell.dim) = cell.eq[i].normal.transpose();
      aug(static_cast<Eigen::Index>(i), cell.dim) = cell.eq[i].rhs;
    }
    const auto pivots = rref_in_place(aug);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const auto row = static_cast<Eigen::Index>(r);
      out.eq.push_back({Vec(aug.row(row).head(cell.dim).transpose()), aug(row, cell.dim)});
      if (pivots[r] == cell.dim) return out;  // 0 = 1: empty cell
    }
  }

  // Inequalities scaled so the largest |coefficient| pattern is canonical, then deduplicated.
  struct Row {
    Constraint c;
    bool strict;
  };
  std::vector<Row> rows;
  auto push = [&](const Constraint& c, bool strict) {
    if (is_zero(c.normal)) {
      const int s = c.rhs.sign();
      if (strict ? s > 0 : s >= 0) return;
      rows.push_back({c, strict});
      return;
    }
    Constraint k = c;
    Rational scale;
    for (Eigen::Index i = 0; i < k.normal.size(); ++i)
      if (!k.normal(i).is_zero()) { scale = abs(k.normal(i)); break; }
    k.normal /= scale;
    k.rhs /= scale;
    for (auto& r : rows) {
      if (r.c.normal != k.normal) continue;
      if (k.rhs < r.c.rhs || (k.rhs == r.c.rhs && strict)) r = {k, strict};
      return;
    }
    rows.push_back({k, strict});
  };
  for (const auto& c : cell.le) push(c, false);
  for (const auto& c : cell.lt) push(c, true);

  std::vector<bool> keep(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (is_zero(rows[i].c.normal)) continue;
    LinearCell rest(cell.dim);
    rest.eq = out.eq;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && keep[j]) rest.le.push_back(rows[j].c);
    const LpOutcome res = lp_solve({rows[i].c.normal, rest, Sense::maximize});
    if (res.status != LpStatus::optimal) continue;
    if (res.value < rows[i].c.rhs || (res.value == rows[i].c.rhs && !rows[i].strict)) keep[i] = false;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!keep[i]) continue;
    (rows[i].strict ? out.lt : out.le).push_back(rows[i].c);
  }
  return out;
}

LinearCell project_prefix(const LinearCell& cell, Eigen::Index keep) {
  if (keep > cell.dim || keep < 0) throw std::invalid_argument("project_prefix: bad target dimension");
  LinearCell cur = remove_redundant(cell);
  for (Eigen::Index j = cell.dim - 1; j >= keep; --j) {
    // Substitute through an equality if one involves z_j.
    auto pivot = std::find_if(cur.eq.begin(), cur.eq.end(), [&](const Constraint& c) { return !c.normal(j).is_zero(); });
    if (pivot != cur.eq.end()) {
      const Constraint p = *pivot;
      cur.eq.erase(pivot);
      auto eliminate = [&](Constraint& c) {
        if (c.normal(j).is_zero()) return;
        const Rational f = c.normal(j) / p.normal(j);
        c.normal -= p.normal * f;
        c.rhs -= p.rhs * f;
        c.normal(j) = 0;
      };
      for (auto& c : cur.eq) eliminate(c);
      for (auto& c : cur.le) eliminate(c);
      for (auto& c : cur.lt) eliminate(c);
      cur = remove_redundant(cur);
      continue;
    }
    struct Row {
      Constraint c;
      bool strict;
    };
    std::vector<Row> pos, neg;
    LinearCell next(cur.dim);
    next.eq = cur.eq;
    auto sort_row = [&](const Constraint& c, bool strict) {
      const int s = c.normal(j).sign();
      if (s > 0) pos.push_back({c, strict});
      else if (s < 0) neg.push_back({c, strict});
      else (strict ? next.lt : next.le).push_back(c);
    };
    for (const auto& c : cur.le) sort_row(c, false);
    for (const auto& c : cur.lt) sort_row(c, true);
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Rational fp = Rational(1) / p.c.normal(j);
        const Rational fn = Rational(-1) / n.c.normal(j);
        Constraint c{p.c.normal * fp + n.c.normal * fn, p.c.rhs * fp + n.c.rhs * fn};
        c.normal(j) = 0;
        ((p.strict || n.strict) ? next.lt : next.le).push_back(c);
      }
    }
    cur = remove_redundant(next);
  }
  LinearCell out(keep);
  auto shrink = [&](const std::vector<Constraint>& src, std::vector<Constraint>& dst) {
    for (const auto& c : src) dst.push_back({Vec(c.normal.head(keep)), c.rhs});
  };
  shrink(cur.eq, out.eq);
  shrink(cur.le, out.le);
  shrink(cur.lt, out.lt);
  return out;
}

LinearCell slice_at(const LinearCell& cell, const Vec& x) {
  const Eigen::Index n = x.size();
  const Eigen::Index m = cell.dim - n;
  if (m < 0) throw std::invalid_argument("slice_at: point longer than cell dimension");
  LinearCell out(m);
  bool infeasible = false;
  auto sub = [&](const std::vector<Constraint>& src, std::vector<Constraint>& dst, int kind) {
    for (const auto& c : src) {
      Constraint s{Vec(c.normal.tail(m)), c.rhs - dot(Vec(c.normal.head(n)), x)};
      if (is_zero(s.normal)) {
        const int sg = s.rhs.sign();
        if ((kind == 0 && sg != 0) || (kind == 1 && sg < 0) || (kind == 2 && sg <= 0)) infeasible = true;
        continue;
      }
      dst.push_back(std::move(s));
    }
  };
  sub(cell.eq, out.eq, 0);
  sub(cell.le, out.le, 1);
  sub(cell.lt, out.lt, 2);
  if (infeasible) out.le.push_back({zeros(m), Rational(-1)});
  return out;
}

LinearCell lift_cell(const LinearCell& cell, Eigen::Index extra) {
  LinearCell out(cell.dim + extra);
  auto pad = [&](const std::vector<Constraint>& src, std::vector<Constraint>& dst) {
    for (const auto& c : src) {
      Vec a = zeros(cell.dim + extra);
      a.head(cell.dim) = c.normal;
      dst.push_back({a, c.rhs});
    }
  };
  pad(cell.eq, out.eq);
  pad(cell.le, out.le);
  pad(cell.lt, out.lt);
  return out;
}

std::string describe(const LinearCell& cell) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  auto emit = [&](const std::vector<Constraint>& rows, const char* op) {
    for (const auto& c : rows) {
      if (!first) os << ", ";
      os << format_row(c.normal) << " " << op << " " << c.rhs;
      first = false;
    }
  };
  emit(cell.eq, "=");
  emit(cell.le, "<=");
  emit(cell.lt, "<");
  if (first) os << "R^" << cell.dim;
  os << "}";
  return os.str();
}

}  // namespace pwmap
