#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pwmap/cell.hpp"

namespace pwmap {

/// Affine hyperplane {z : normal·z = rhs}, scaled so its first nonzero entry is 1.
struct Hyperplane {
  Vec normal;
  Rational rhs;

  [[nodiscard]] Rational value(const Vec& z) const { return dot(normal, z) - rhs; }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// A relatively open face of the arrangement lying inside the union.
struct Stratum {
  LinearCell cell;                  // eq and strict rows of the hyperplanes cutting it out
  int dim = -1;
  std::vector<signed char> signs;   // one of -1, 0, +1 per hyperplane
  std::vector<std::size_t> origin;  // indices of input cells containing the stratum
  Vec sample;                       // a point of the stratum
};

struct Stratification {
  Eigen::Index dim = 0;
  std::vector<Hyperplane> hyperplanes;
  std::vector<Stratum> strata;
  /// Pairs (F, G) with G ⊂ cl(F), G != F (indices into strata).
  std::vector<std::pair<std::size_t, std::size_t>> frontier;
};

struct RefineOptions {
  std::size_t max_hyperplanes = 25;
  /// Hyperplanes inserted in addition to those of the cells.
  std::vector<Hyperplane> extra;
};

/// Normalised, deduplicated hyperplanes of all rows of all cells.
std::vector<Hyperplane> collect_hyperplanes(const CellComplex& complex);
void add_hyperplane(std::vector<Hyperplane>& list, Vec normal, Rational rhs);

/// Faces of the arrangement of all constraint hyperplanes that lie in the union.
/// Throws std::length_error above options.max_hyperplanes.
Stratification refine(const CellComplex& complex, const RefineOptions& options = {});

std::vector<signed char> sign_vector(const Stratification& strat, const Vec& point);

/// Index of the stratum containing the point, if any.
std::optional<std::size_t> locate(const Stratification& strat, const Vec& point);

/// Strata F != s with s ⊂ cl(F).
std::vector<std::size_t> incident_strata(const Stratification& strat, std::size_t s);

/// Whether strata with these sign vectors satisfy G ⊂ cl(F).
bool in_closure_of(const std::vector<signed char>& g, const std::vector<signed char>& f);

/// Closed cell cl(stratum).
LinearCell stratum_closure(const Stratum& s);

}  // namespace pwmap
