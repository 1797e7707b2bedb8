#pragma once

#include <vector>

#include "pwmap/cone.hpp"
#include "pwmap/map.hpp"

namespace pwmap {

struct ParetoReport {
  std::vector<LinearCell> values;  // strata of R^m made of local Pareto minimum values
  std::vector<int> dims;
  int dim = -1;
  bool meager = true;  // dim < m
};

/// Whether K ∩ -K = {0}.
bool is_pointed(const ConvexCone& k);

/// Graph + ({0} × K) ⊆ Graph, tested exactly along the rays of K from every stratum sample.
bool is_k_invariant(const SetValuedMap& map, const ConvexCone& k);

/// Local Pareto minimum values of S with respect to the ordering cone K.
/// Throws std::invalid_argument if K is not pointed or S != S + K.
ParetoReport pareto_min_values(const SetValuedMap& map, const ConvexCone& k);

/// The map with graph Graph + ({0} × K), for maps that are not K-invariant.
SetValuedMap epigraphical_map(const SetValuedMap& map, const ConvexCone& k);

}  // namespace pwmap
