#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwmap/map.hpp"
#include "pwmap/stratification.hpp"
#include "pwmap/variational.hpp"

namespace pwmap {

/// S(x) as the nonempty slices of the graph cells.
std::vector<LinearCell> evaluate(const SetValuedMap& map, const Vec& x);

/// Projections of the nonempty graph cells to R^n.
CellComplex domain(const SetValuedMap& map);

/// The map whose graph is the closure of the graph.
SetValuedMap closure_map(const SetValuedMap& map);

/// Stratified view of a map: graph strata of the closed graph, and domain strata
/// fine enough that every graph stratum lies entirely over or away from each of them.
struct MapStructure {
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  Stratification graph;                    // strata of cl(Graph S)
  std::vector<bool> in_graph;              // stratum ⊆ Graph S
  std::vector<LinearCell> graph_proj;      // projection of each graph stratum
  Stratification dom;                      // strata of dom S̄ = cl(dom S)
  std::vector<bool> in_dom;                // stratum ⊆ dom S
  std::vector<std::vector<std::size_t>> over;  // graph strata F with dom stratum ⊆ proj F
  int dom_dim = -1;                        // dimension of dom S
};

struct StructureOptions {
  std::size_t max_hyperplanes = 40;
};

MapStructure map_structure(const SetValuedMap& map, const StructureOptions& options = {});

struct ContinuityReport {
  Vec point;
  bool in_domain = false;
  bool isolated = false;  // the domain stratum of the point is an isolated point of dom S
  bool osc = false;
  bool isc = false;
  bool continuous = false;
  bool strictly_continuous = false;
  std::optional<Vec> osc_witness;        // y ∈ S̄(x̄) \ S(x̄)
  std::optional<Vec> isc_witness;        // y ∈ S(x̄) missed along isc_direction
  std::optional<Vec> isc_direction;
  std::optional<Vec> lip_witness;        // y where the Aubin property fails
};

ContinuityReport classify_point(const SetValuedMap& map, const Vec& x, const NormSpec& norms = {});
ContinuityReport classify_stratum(const SetValuedMap& map, const MapStructure& s, std::size_t dom_stratum,
                                  const Vec& x, const NormSpec& norms = {});

/// Modulus of strict continuity at x relative to its domain stratum: the largest
/// relative graphical modulus over the values ȳ ∈ S(x); nullopt when infinite.
Extended lipschitz_modulus(const SetValuedMap& map, const MapStructure& s, std::size_t dom_stratum, const Vec& x,
                           const NormSpec& norms = {});
Extended lipschitz_modulus(const SetValuedMap& map, const Vec& x, const NormSpec& norms = {});

struct FailureSet {
  std::vector<LinearCell> strata;
  std::vector<int> dims;
  int dim = -1;
  int reference_dim = -1;
  bool verdict = true;  // dim < reference_dim, or the set is empty
};

FailureSet make_failure_set(std::vector<LinearCell> strata, std::vector<int> dims, int reference_dim);

/// Domain strata where S(x) != S̄(x).
FailureSet closedness_defect(const SetValuedMap& map);
FailureSet closedness_defect(const SetValuedMap& map, const MapStructure& s);

enum class ContinuityProperty { continuity, strict_continuity };

FailureSet discontinuity_set(const SetValuedMap& map, ContinuityProperty property, const NormSpec& norms = {});
FailureSet discontinuity_set(const SetValuedMap& map, const MapStructure& s, ContinuityProperty property,
                             const NormSpec& norms = {});

/// Whether every value S(x) is closed.
bool is_closed_valued(const SetValuedMap& map);
bool is_closed_valued(const SetValuedMap& map, const MapStructure& s);

/// Exact Hausdorff distance between two nonempty bounded cells (closures are used).
Rational hausdorff_distance(const LinearCell& a, const LinearCell& b, NormKind norm = NormKind::sup);

/// Vertices of a nonempty bounded cell's closure; throws if unbounded.
std::vector<Vec> polytope_vertices(const LinearCell& cell);

/// Strata of the union of closed cells where the Hadamard and limiting normal cones differ;
/// the reference dimension is that of the boundary of the union.
FailureSet generic_regularity_check(const CellComplex& closed_cells);

}  // namespace pwmap
