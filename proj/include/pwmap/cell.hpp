#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwmap/linalg.hpp"

namespace pwmap {

/// One affine constraint `normal · z (op) rhs`; the relation is implied by
/// which list of a LinearCell holds it.
struct Constraint {
  Vec normal;
  Rational rhs;

  [[nodiscard]] Rational value(const Vec& z) const { return dot(normal, z) - rhs; }
  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.rhs == b.rhs && a.normal == b.normal;
  }
};

/// Convex polyhedral piece {z : Az = b, Cz <= d, Ez < f} of R^dim.
struct LinearCell {
  Eigen::Index dim = 0;
  std::vector<Constraint> eq;
  std::vector<Constraint> le;
  std::vector<Constraint> lt;

  LinearCell() = default;
  explicit LinearCell(Eigen::Index ambient_dim) : dim(ambient_dim) {}

  LinearCell& add_eq(Vec a, Rational b);
  LinearCell& add_le(Vec a, Rational b);
  LinearCell& add_lt(Vec a, Rational b);
  /// a·z >= b, stored as -a·z <= -b.
  LinearCell& add_ge(const Vec& a, const Rational& b) { return add_le(-a, -b); }
  LinearCell& add_gt(const Vec& a, const Rational& b) { return add_lt(-a, -b); }

  [[nodiscard]] bool is_closed() const { return lt.empty(); }
  [[nodiscard]] std::size_t row_count() const { return eq.size() + le.size() + lt.size(); }

  /// Intersection with another cell of the same dimension.
  [[nodiscard]] LinearCell intersect(const LinearCell& other) const;

  friend bool operator==(const LinearCell&, const LinearCell&) = default;
};

/// A finite union of cells of one ambient dimension (cells may overlap).
struct CellComplex {
  Eigen::Index dim = 0;
  std::vector<LinearCell> cells;

  CellComplex() = default;
  explicit CellComplex(Eigen::Index ambient_dim) : dim(ambient_dim) {}
  CellComplex(Eigen::Index ambient_dim, std::vector<LinearCell> c);
};

/// Whole space R^dim as a cell.
LinearCell whole_space(Eigen::Index dim);
/// Axis box prod [lo_i, hi_i].
LinearCell box_cell(const Vec& lo, const Vec& hi);
/// The single point {p}.
LinearCell point_cell(const Vec& p);

bool cell_membership(const LinearCell& cell, const Vec& point);
bool complex_membership(const CellComplex& complex, const Vec& point);

/// Some point of the cell, honouring strict rows; nullopt when empty.
std::optional<Vec> find_point(const LinearCell& cell);
bool is_empty(const LinearCell& cell);

/// Indices into cell.le of rows tight on the whole (nonempty) cell.
/// Throws std::domain_error for an empty cell.
std::vector<std::size_t> implicit_equalities(const LinearCell& cell);

/// A point satisfying every non-implicit inequality strictly.
/// Throws std::domain_error for an empty cell.
Vec relative_interior_point(const LinearCell& cell);

/// Strict rows relaxed; throws std::domain_error for an empty cell.
LinearCell cell_closure(const LinearCell& cell);

/// Dimension of the affine hull; -1 for the empty cell.
int cell_dimension(const LinearCell& cell);

/// Affine hull as equality rows in reduced echelon form (canonical).
/// Throws for an empty cell.
std::vector<Constraint> affine_hull(const LinearCell& cell);

/// Direction space of the affine hull, basis vectors as columns.
Mat direction_space(const LinearCell& cell);

/// Relatively open version: implicit rows become equalities and all other
/// inequalities become strict. Equals the relative interior of the cell.
LinearCell relative_interior_cell(const LinearCell& cell);

/// Drops rows implied by the others (checked by LP) and duplicates. The set is unchanged.
LinearCell remove_redundant(const LinearCell& cell);

/// Projection onto the first `keep` coordinates by Fourier-Motzkin
/// elimination; strictness of rows is preserved.
LinearCell project_prefix(const LinearCell& cell, Eigen::Index keep);

/// The slice {y : (x, y) in cell} for a fixed leading block x.
LinearCell slice_at(const LinearCell& cell, const Vec& x);

/// Embeds a cell of R^k into R^(k+extra) (extra trailing free coordinates).
LinearCell lift_cell(const LinearCell& cell, Eigen::Index extra);

std::string describe(const LinearCell& cell);

}  // namespace pwmap
