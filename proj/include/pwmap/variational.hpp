#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwmap/cone.hpp"
#include "pwmap/map.hpp"

namespace pwmap {

enum class NormKind { sup, sum };

/// Primal norms on the domain and range. Coderivative quantities are measured
/// in the dual norms, so moduli are Lipschitz constants for these primal norms.
struct NormSpec {
  NormKind domain = NormKind::sup;
  NormKind range = NormKind::sup;
};

std::string to_string(NormKind k);
std::string to_string(const NormSpec& s);

/// Value in [0, +inf]; nullopt encodes +inf.
using Extended = std::optional<Rational>;
std::string format_extended(const Extended& v);

struct Interval {
  Rational lo;
  Rational hi;
};

struct OuterNorm {
  Extended value;
  std::optional<Interval> euclidean;  // present iff value is finite
};

/// Hadamard cone of the union of closed cells at a point of the union:
/// the intersection of the convex normal cones of the cells containing it.
ConvexCone hadamard_normal_cone(const CellComplex& closed_cells, const Vec& point);

/// Limiting normal cone, as the union of the Hadamard cones over all faces of
/// the local conical model at the point.
ConeUnion limiting_normal_cone(const CellComplex& closed_cells, const Vec& point);

struct NormalConeResult {
  ConvexCone hadamard;
  ConeUnion limiting;
  Vec base_point;
};
NormalConeResult normal_cones(const CellComplex& closed_cells, const Vec& point);

/// Closed graph cells (strict rows relaxed, empty cells dropped).
CellComplex closed_graph(const SetValuedMap& map);

/// {x* : (x*, -y*) ∈ N_Graph(x̄, ȳ)} as one polyhedron per member cone.
std::vector<LinearCell> coderivative(const SetValuedMap& map, const Vec& x, const Vec& y, const Vec& y_star);

/// sup{ |a|_* / |b|_* : (a, -b) ∈ K } over a cone union in R^n × R^m.
OuterNorm outer_norm(const ConeUnion& cones, Eigen::Index n, const NormSpec& norms);

struct AubinVerdict {
  bool applicable = true;  // graph locally closed at the point
  bool holds = false;
  OuterNorm modulus;
  NormSpec norms;
};

AubinVerdict aubin_check(const SetValuedMap& map, const Vec& x, const Vec& y, const NormSpec& norms = {});

/// Aubin property relative to the domain stratum `stratum` (a relatively open cell in R^n).
AubinVerdict aubin_check_relative(const SetValuedMap& map, const LinearCell& stratum, const Vec& x, const Vec& y,
                                  const NormSpec& norms = {});

/// Uniform bound on graphical moduli over relative interiors of the graph pieces.
OuterNorm uniform_kappa(const SetValuedMap& map, const NormSpec& norms = {});

/// Euclidean interval containing a modulus computed under `norms`.
Interval euclidean_bounds(const Rational& value, Eigen::Index n, Eigen::Index m, const NormSpec& norms);

}  // namespace pwmap
