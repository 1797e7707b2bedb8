#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "pwmap/map.hpp"
#include "pwmap/variational.hpp"

// Floating-point estimators used to cross-check the exact engine. Membership
// decisions are made exactly at rational sample points; everything else is double.
namespace pwmap::oracle {

using Point = std::vector<double>;

struct SampledSet {
  int dim = 0;
  std::vector<Point> points;
  /// For dim == 1: the sampled set as closed intervals, when known.
  std::vector<std::pair<double, double>> intervals;
  double resolution = 0;

  [[nodiscard]] bool empty() const { return points.empty() && intervals.empty(); }
};

/// Symmetrised Hausdorff distance; brute force on points, exact on interval lists.
double sample_hausdorff(const SampledSet& a, const SampledSet& b, NormKind norm = NormKind::sup);

/// Grid points (step h) of a bounded cell, plus its vertices.
SampledSet sample_cell(const LinearCell& cell, double h);

/// x ↦ sampled S(x) ∩ [-r, r]^m.
using ValueSampler = std::function<SampledSet(const Point& x)>;

ValueSampler polyhedral_sampler(const SetValuedMap& map, double h, double truncation);

struct Monomial {
  Rational coeff;
  std::vector<int> exponents;
};
using Polynomial = std::vector<Monomial>;

/// {z : p(z) = 0 for p in zero, q(z) > 0 for q in pos}.
struct PolynomialCell {
  Eigen::Index dim = 0;
  std::vector<Polynomial> zero;
  std::vector<Polynomial> pos;
};

Rational evaluate_polynomial(const Polynomial& p, const Vec& z);
bool polynomial_membership(const PolynomialCell& cell, const Vec& z);

/// Grid sampler for a semialgebraic graph given as a union of polynomial cells in R^(n+m). Cells
/// with one equation also contribute roots bracketed by exact sign changes along the last
/// coordinate and refined by bisection.
ValueSampler polynomial_sampler(const std::vector<PolynomialCell>& graph, Eigen::Index n, Eigen::Index m, double h,
                                double truncation);

struct LimitEstimate {
  SampledSet outer;
  SampledSet inner;
  bool value_empty = false;  // S(x̄) = ∅
};

LimitEstimate estimate_limits(const ValueSampler& s, const Point& x, Eigen::Index m, double h, double radius,
                              std::uint64_t seed = 1);

struct LipEstimate {
  double estimate = 0;                // quotient at the finest scale
  std::vector<double> per_scale;      // scales h, h/2, h/4
  double growth_exponent = 0;         // log2 growth of the quotient per halving
  bool diverging = false;
  int pairs_used = 0;
  int pairs_skipped = 0;
};

struct LipOptions {
  double h = 1e-3;
  int pairs = 64;
  std::uint64_t seed = 1;
  NormKind norm = NormKind::sup;
  /// When nonempty, x is sampled in x̄ + span(directions).
  std::vector<Point> directions;
};

LipEstimate estimate_lip(const ValueSampler& s, const Point& x, const LipOptions& options = {});

/// min over λ of Sur(λ)/λ, where Sur(λ) is the largest sampled radius r with B(ȳ, r)
/// covered by the images of sampled x ∈ B(x̄, λ), less the covering tolerance.
double estimate_surjection_rate(const ValueSampler& s, const Point& x, const Point& y, const std::vector<double>& lambdas,
                                double h);

}  // namespace pwmap::oracle
