#include "pwmap/random_maps.hpp"

#include "pwmap/svmap.hpp"

namespace pwmap {

namespace {

Vec random_vec(Rng& rng, Eigen::Index dim, long coef) {
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Rational(rng.uniform(-coef, coef));
  return v;
}

Vec random_nonzero(Rng& rng, Eigen::Index dim, long coef) {
  while (true) {
    Vec v = random_vec(rng, dim, coef);
    if (!is_zero(v)) return v;
  }
}

struct PoolRow {
  Vec normal;
  Rational rhs;
};

std::vector<PoolRow> make_pool(Rng& rng, Eigen::Index dim, Eigen::Index free_dim, std::size_t size, long coef) {
  std::vector<PoolRow> pool;
  for (std::size_t i = 0; i < size; ++i) {
    Vec a = zeros(dim);
    const Eigen::Index span = i % 2 == 0 ? free_dim : dim;
    a.head(span) = random_nonzero(rng, span, coef);
    pool.push_back({a, Rational(rng.uniform(-coef, coef))});
  }
  return pool;
}

LinearCell random_cell(Rng& rng, const std::vector<PoolRow>& pool, Eigen::Index dim, std::size_t max_rows,
                       double eq_prob, double strict_prob) {
  LinearCell c(dim);
  const long rows = rng.uniform(1, static_cast<long>(max_rows));
  for (long r = 0; r < rows; ++r) {
    const PoolRow& p = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
    if (rng.bernoulli(eq_prob)) {
      c.add_eq(p.normal, p.rhs);
      continue;
    }
    const bool flip = rng.bernoulli(0.5);
    const Vec a = flip ? Vec(-p.normal) : p.normal;
    const Rational b = flip ? -p.rhs : p.rhs;
    if (rng.bernoulli(strict_prob)) c.add_lt(a, b);
    else c.add_le(a, b);
  }
  return c;
}

bool any_nonempty(const std::vector<LinearCell>& cells) {
  for (const auto& c : cells)
    if (!is_empty(c)) return true;
  return false;
}

}  // namespace

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

bool Rng::bernoulli(double p) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

SetValuedMap random_map(Rng& rng, const RandomMapOptions& o) {
  const Eigen::Index d = o.n + o.m;
  while (true) {
    const auto pool = make_pool(rng, d, o.n, o.pool, o.coef);
    const long count = rng.uniform(1, static_cast<long>(o.max_cells));
    std::vector<LinearCell> cells;
    for (long i = 0; i < count; ++i) cells.push_back(random_cell(rng, pool, d, o.max_rows, o.eq_prob, o.strict_prob));
    if (!any_nonempty(cells)) continue;
    SetValuedMap map(o.n, o.m, std::move(cells), "random");
    if (o.closed_valued && !is_closed_valued(map)) continue;
    return map;
  }
}

CellComplex random_closed_complex(Rng& rng, Eigen::Index dim, std::size_t max_cells, std::size_t pool_size, long coef) {
  while (true) {
    const auto pool = make_pool(rng, dim, dim, pool_size, coef);
    const long count = rng.uniform(1, static_cast<long>(max_cells));
    std::vector<LinearCell> cells;
    for (long i = 0; i < count; ++i) cells.push_back(random_cell(rng, pool, dim, 3, 0.1, 0.0));
    if (any_nonempty(cells)) return CellComplex(dim, std::move(cells));
  }
}

CellComplex random_complex(Rng& rng, Eigen::Index dim, std::size_t max_cells, std::size_t pool_size, long coef) {
  while (true) {
    const auto pool = make_pool(rng, dim, dim, pool_size, coef);
    const long count = rng.uniform(1, static_cast<long>(max_cells));
    std::vector<LinearCell> cells;
    for (long i = 0; i < count; ++i) cells.push_back(random_cell(rng, pool, dim, 3, 0.15, 0.25));
    if (any_nonempty(cells)) return CellComplex(dim, std::move(cells));
  }
}

ConvexCone random_cone(Rng& rng, Eigen::Index dim, std::size_t max_rows, long coef) {
  std::vector<Vec> eq, ineq;
  const long rows = rng.uniform(0, static_cast<long>(max_rows));
  for (long r = 0; r < rows; ++r) {
    Vec a = random_vec(rng, dim, coef);
    if (rng.bernoulli(0.1)) eq.push_back(std::move(a));
    else ineq.push_back(std::move(a));
  }
  return ConvexCone::from_constraints(dim, std::move(eq), std::move(ineq));
}

LinearProgram random_lp(Rng& rng, Eigen::Index dim, std::size_t max_rows, long coef) {
  LinearProgram lp;
  lp.objective = random_vec(rng, dim, coef);
  lp.sense = rng.bernoulli(0.5) ? Sense::maximize : Sense::minimize;
  lp.cell = LinearCell(dim);
  const long rows = rng.uniform(0, static_cast<long>(max_rows));
  for (long r = 0; r < rows; ++r) {
    const Vec a = random_vec(rng, dim, coef);
    const Rational b(rng.uniform(-coef, coef));
    if (rng.bernoulli(0.15)) lp.cell.add_eq(a, b);
    else lp.cell.add_le(a, b);
  }
  return lp;
}

LinearCell random_polytope(Rng& rng, Eigen::Index dim, long box, std::size_t max_rows, long coef) {
  while (true) {
    LinearCell c = box_cell(Vec::Constant(dim, Rational(-box)), Vec::Constant(dim, Rational(box)));
    const long rows = rng.uniform(0, static_cast<long>(max_rows));
    for (long r = 0; r < rows; ++r) c.add_le(random_nonzero(rng, dim, coef), Rational(rng.uniform(-coef, coef)));
    if (!is_empty(c)) return c;
  }
}

}  // namespace pwmap
