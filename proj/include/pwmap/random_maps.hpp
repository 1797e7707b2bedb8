#pragma once

#include <cstdint>
#include <random>

#include "pwmap/cone.hpp"
#include "pwmap/lp.hpp"
#include "pwmap/map.hpp"

// Seeded generators of small random instances for property suites and batch runs.
namespace pwmap {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool bernoulli(double p);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct RandomMapOptions {
  Eigen::Index n = 1;
  Eigen::Index m = 1;
  std::size_t max_cells = 12;
  long coef = 4;
  double strict_prob = 0.25;
  double eq_prob = 0.15;
  /// Size of the per-map pool the cell rows are drawn from; half of it ignores y.
  std::size_t pool = 5;
  std::size_t max_rows = 3;
  bool closed_valued = false;
};

/// Random map with nonempty domain (and closed values when requested).
SetValuedMap random_map(Rng& rng, const RandomMapOptions& options);

/// Random union of closed cells in R^dim with nonempty union.
CellComplex random_closed_complex(Rng& rng, Eigen::Index dim, std::size_t max_cells = 6, std::size_t pool = 4,
                                  long coef = 4);

/// Random union of cells (strict rows allowed) in R^dim with nonempty union.
CellComplex random_complex(Rng& rng, Eigen::Index dim, std::size_t max_cells = 4, std::size_t pool = 4, long coef = 4);

/// Random polyhedral cone given by up to max_rows integer rows.
ConvexCone random_cone(Rng& rng, Eigen::Index dim, std::size_t max_rows = 6, long coef = 4);

/// Random LP with up to max_rows rows (no strict rows).
LinearProgram random_lp(Rng& rng, Eigen::Index dim, std::size_t max_rows = 6, long coef = 4);

/// Random nonempty polytope inside [-box, box]^dim.
LinearCell random_polytope(Rng& rng, Eigen::Index dim, long box = 4, std::size_t max_rows = 4, long coef = 4);

}  // namespace pwmap
