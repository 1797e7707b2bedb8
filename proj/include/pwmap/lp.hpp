#pragma once

#include "pwmap/cell.hpp"

namespace pwmap {

enum class Sense { maximize, minimize };
enum class LpStatus { optimal, unbounded, infeasible };

/// Optimize objective·z over a closed cell (strict rows are rejected; see
/// find_point for strict feasibility).
struct LinearProgram {
  Vec objective;
  LinearCell cell;
  Sense sense = Sense::maximize;
};

/// Result of lp_solve together with exact certificates.
///
/// optimal:    witness attains value; duals satisfy
///             A^T dual_eq + C^T dual_le = objective, value = b·dual_eq + d·dual_le,
///             dual_le >= 0 (maximize) or dual_le <= 0 (minimize).
/// unbounded:  ray is a recession direction with objective·ray improving.
/// infeasible: Farkas multipliers with dual_le >= 0,
///             A^T dual_eq + C^T dual_le = 0 and b·dual_eq + d·dual_le < 0.
struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  Vec witness;
  Vec ray;
  Vec dual_eq;
  Vec dual_le;
};

LpOutcome lp_solve(const LinearProgram& lp);

/// Convenience: sup of objective over a closed cell (nullopt if unbounded,
/// throws std::domain_error if infeasible).
std::optional<Rational> lp_max(const LinearCell& cell, const Vec& objective);

/// Exact certificate checks, independent of the solver's internals.
bool check_optimality_certificate(const LinearProgram& lp, const LpOutcome& out);
bool check_farkas_certificate(const LinearCell& cell, const LpOutcome& out);
bool check_unbounded_ray(const LinearProgram& lp, const LpOutcome& out);

}  // namespace pwmap
