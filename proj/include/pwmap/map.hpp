#pragma once

#include <string>

#include "pwmap/cell.hpp"

namespace pwmap {

/// S : R^n ⇉ R^m given by its graph, a union of cells in R^(n+m)
/// with the x-coordinates first.
struct SetValuedMap {
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  CellComplex graph;
  std::string name;

  SetValuedMap() = default;
  SetValuedMap(Eigen::Index n_, Eigen::Index m_, std::vector<LinearCell> cells, std::string name_ = {})
      : n(n_), m(m_), graph(n_ + m_, std::move(cells)), name(std::move(name_)) {}
};

}  // namespace pwmap
