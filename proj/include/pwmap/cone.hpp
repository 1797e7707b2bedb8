#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwmap/cell.hpp"

namespace pwmap {

/// Generators of a polyhedral cone: lin(lineality) + cone(rays).
/// Rays are primitive integer vectors and are extreme modulo the lineality space.
struct ConeGenerators {
  std::vector<Vec> lineality;
  std::vector<Vec> rays;
};

/// Double description of {v : E v = 0, H v <= 0}.
ConeGenerators dd_rays(Eigen::Index dim, const std::vector<Vec>& eq_rows, const std::vector<Vec>& ineq_rows);

/// Closed polyhedral cone kept in whichever form it was built from; the other
/// form is computed on demand and cached.
class ConvexCone {
 public:
  ConvexCone() = default;
  /// The whole space R^dim.
  explicit ConvexCone(Eigen::Index dim);

  static ConvexCone from_constraints(Eigen::Index dim, std::vector<Vec> eq_rows, std::vector<Vec> ineq_rows);
  static ConvexCone from_generators(Eigen::Index dim, std::vector<Vec> lineality, std::vector<Vec> rays);
  static ConvexCone zero(Eigen::Index dim);

  [[nodiscard]] Eigen::Index dim() const { return dim_; }

  [[nodiscard]] const std::vector<Vec>& eq_rows() const;
  [[nodiscard]] const std::vector<Vec>& ineq_rows() const;
  [[nodiscard]] const std::vector<Vec>& lineality() const;
  [[nodiscard]] const std::vector<Vec>& rays() const;

  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] int dimension() const;
  [[nodiscard]] bool subset_of(const ConvexCone& other) const;
  [[nodiscard]] bool same_as(const ConvexCone& other) const;

  [[nodiscard]] ConvexCone intersect(const ConvexCone& other) const;
  /// Polar {w : w·v <= 0 for all v in the cone}.
  [[nodiscard]] ConvexCone polar() const;
  /// Intersection with {v : rows·v = 0}.
  [[nodiscard]] ConvexCone with_equalities(const std::vector<Vec>& rows) const;

  [[nodiscard]] std::string describe() const;

 private:
  struct HForm {
    std::vector<Vec> eq;
    std::vector<Vec> ineq;
  };
  Eigen::Index dim_ = 0;
  mutable std::optional<HForm> h_;
  mutable std::optional<ConeGenerators> v_;
  void need_h() const;
  void need_v() const;
};

/// Finite union of closed convex cones with duplicates removed.
struct ConeUnion {
  Eigen::Index dim = 0;
  std::vector<ConvexCone> members;

  ConeUnion() = default;
  explicit ConeUnion(Eigen::Index d) : dim(d) {}

  /// Adds the cone unless an equal member is already present.
  void add(const ConvexCone& k);
  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool is_zero() const;
};

/// Tangent cone of cl(cell) at a point of cl(cell), in constraint form.
ConvexCone tangent_cone_convex(const LinearCell& cell, const Vec& point);

/// Normal cone of the convex set cl(cell) at a point of it, in generator form
/// (span of equality normals plus the active inequality normals).
ConvexCone normal_cone_convex(const LinearCell& cell, const Vec& point);

/// cone ∩ span(basis), basis vectors given in ambient coordinates.
ConvexCone cone_intersect_subspace(const ConvexCone& cone, const std::vector<Vec>& basis);

}  // namespace pwmap
