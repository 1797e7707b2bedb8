#pragma once

#include <vector>

#include "pwmap/stratification.hpp"

namespace pwmap {

/// Conical model of a union of cells near a point z̄: near z̄ the union equals
/// z̄ + ∪ cones, where each cone keeps only the rows active at z̄ (with their strictness).
struct Germ {
  Vec base;
  Eigen::Index dim = 0;
  std::vector<LinearCell> cones;
  std::vector<std::size_t> source;  // index of the originating cell
};

/// Uses the cells whose closure contains the point; empty cells are ignored.
Germ make_germ(const CellComplex& complex, const Vec& point);

/// Faces of the central arrangement of the cone rows (plus extra normals) lying in
/// ∪ cl(cones), or covering all of R^dim when whole_space is set.
Stratification germ_faces(const Germ& germ, bool whole_space = false, const std::vector<Vec>& extra_normals = {});

/// ∪ cones is closed, i.e. the union is locally closed at the base point.
bool germ_locally_closed(const Germ& germ);

/// ∪ cones is all of R^dim, i.e. the base point is interior to the union.
bool germ_covers_space(const Germ& germ);

/// Whether a direction lies in some cone of the germ.
bool germ_contains(const Germ& germ, const Vec& direction);

}  // namespace pwmap
