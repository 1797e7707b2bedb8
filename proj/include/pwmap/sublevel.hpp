#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwmap/map.hpp"
#include "pwmap/svmap.hpp"

namespace pwmap {

/// f(x) = coeffs·x + offset on `cell`.
struct AffinePiece {
  LinearCell cell;
  Vec coeffs;
  Rational offset;

  [[nodiscard]] Rational value(const Vec& x) const { return dot(coeffs, x) + offset; }
};

/// Piecewise-linear function on the union of its pieces.
struct PLFunction {
  Eigen::Index n = 0;
  std::vector<AffinePiece> pieces;
  std::string name;
};

/// f(x), or nullopt outside every piece.
std::optional<Rational> evaluate(const PLFunction& f, const Vec& x);

/// The closed cells of cl(∪ pieces), used as D when none is given.
CellComplex function_domain(const PLFunction& f);

/// Throws std::invalid_argument when two pieces disagree on their overlap, when D is not
/// covered by the pieces, or when f is not lower semicontinuous on D.
void validate_function(const PLFunction& f, const CellComplex& d);

/// L_f(r) = [f <= r] ∪ ∂D as a map R ⇉ R^n (graph coordinates (r, x)).
SetValuedMap sublevel_map(const PLFunction& f, const CellComplex& d);

struct LocalMinReport {
  std::vector<Rational> values;               // f-values of local minimizers in int(D)
  std::vector<LinearCell> minimizer_strata;
  std::vector<Rational> sublevel_jumps;       // r ∈ f(D) where L_f is discontinuous
  bool consistent = false;                    // values == sublevel_jumps
};

LocalMinReport local_min_values(const PLFunction& f, const CellComplex& d);

}  // namespace pwmap
