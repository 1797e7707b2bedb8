#include "pwmap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <random>
#include <stdexcept>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "pwmap/svmap.hpp"

namespace pwmap::oracle {

namespace {

using Intervals = std::vector<std::pair<double, double>>;

double norm_of(const Point& a, const Point& b, NormKind norm) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    s = norm == NormKind::sup ? std::max(s, d) : s + d;
  }
  return s;
}

Intervals as_intervals(const SampledSet& s) {
  Intervals iv = s.intervals;
  for (const auto& p : s.points) iv.emplace_back(p[0], p[0]);
  std::sort(iv.begin(), iv.end());
  Intervals merged;
  for (const auto& [l, u] : iv) {
    if (!merged.empty() && l <= merged.back().second) merged.back().second = std::max(merged.back().second, u);
    else merged.emplace_back(l, u);
  }
  return merged;
}

double dist_to_intervals(double t, const Intervals& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [l, u] : b) {
    if (t >= l && t <= u) return 0;
    best = std::min(best, t < l ? l - t : t - u);
  }
  return best;
}

double directed_intervals(const Intervals& a, const Intervals& b) {
  double worst = 0;
  for (const auto& [l, u] : a) {
    std::vector<double> cand{l, u};
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
      const double mid = (b[k].second + b[k + 1].first) / 2;
      if (mid > l && mid < u) cand.push_back(mid);
    }
    for (double t : cand) worst = std::max(worst, dist_to_intervals(t, b));
  }
  return worst;
}

double dist_to_points(const Point& p, const std::vector<Point>& b, NormKind norm) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& q : b) best = std::min(best, norm_of(p, q, norm));
  return best;
}

// sup over a of dist(a, b) with an R-tree: the Euclidean nearest neighbour bounds the sup and
// sum distances from above, and a box query of that radius then finds the exact minimum.
template <std::size_t D>
double directed_indexed(const std::vector<Point>& a, const std::vector<Point>& b, NormKind norm) {
  namespace bg = boost::geometry;
  namespace bgi = boost::geometry::index;
  using P = bg::model::point<double, D, bg::cs::cartesian>;
  using Box = bg::model::box<P>;
  auto make = [](const Point& p) {
    P q;
    bg::set<0>(q, p[0]);
    bg::set<1>(q, p[1]);
    if constexpr (D == 3) bg::set<2>(q, p[2]);
    return q;
  };
  std::vector<std::pair<P, std::size_t>> entries;
  entries.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) entries.emplace_back(make(b[i]), i);
  const bgi::rtree<std::pair<P, std::size_t>, bgi::quadratic<16>> tree(entries.begin(), entries.end());
  double worst = 0;
  std::vector<std::pair<P, std::size_t>> hits;
  for (const auto& p : a) {
    hits.clear();
    tree.query(bgi::nearest(make(p), 1), std::back_inserter(hits));
    double best = norm_of(p, b[hits.front().second], norm);
    if (best <= worst) continue;
    Point lo = p, hi = p;
    for (auto& v : lo) v -= best;
    for (auto& v : hi) v += best;
    hits.clear();
    tree.query(bgi::intersects(Box(make(lo), make(hi))), std::back_inserter(hits));
    for (const auto& h : hits) best = std::min(best, norm_of(p, b[h.second], norm));
    worst = std::max(worst, best);
  }
  return worst;
}

double dist_to_set(const Point& p, const SampledSet& s, NormKind norm) {
  if (s.dim == 1) return dist_to_intervals(p[0], as_intervals(s));
  return dist_to_points(p, s.points, norm);
}

Vec to_rational(const Point& p) { return from_double(p); }

Point to_point(const Vec& v) { return to_double(v); }

// Grid points of the box [lo, hi] with step h (inclusive of both ends).
template <class F>
void for_grid(const Point& lo, const Point& hi, double h, F&& visit) {
  const std::size_t d = lo.size();
  std::vector<long> steps(d), idx(d, 0);
  for (std::size_t i = 0; i < d; ++i) steps[i] = std::max(0L, static_cast<long>(std::floor((hi[i] - lo[i]) / h + 1e-9)));
  Point p(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) p[i] = std::min(hi[i], lo[i] + static_cast<double>(idx[i]) * h);
    visit(p);
    std::size_t i = 0;
    while (i < d && idx[i] == steps[i]) idx[i++] = 0;
    if (i == d) break;
    ++idx[i];
  }
}

LinearCell closed_of(const LinearCell& c) {
  LinearCell out(c.dim);
  out.eq = c.eq;
  out.le = c.le;
  out.le.insert(out.le.end(), c.lt.begin(), c.lt.end());
  return out;
}

std::vector<Point> unit_box_samples(std::size_t k, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> out;
  for (int i = 0; i < count; ++i) {
    Point p(k);
    for (auto& c : p) c = u(rng);
    out.push_back(p);
  }
  return out;
}

}  // namespace

double sample_hausdorff(const SampledSet& a, const SampledSet& b, NormKind norm) {
  if (a.empty() || b.empty()) throw std::invalid_argument("sample_hausdorff: empty input");
  if (a.dim != b.dim) throw std::invalid_argument("sample_hausdorff: dimension mismatch");
  if (a.dim == 1) {
    const Intervals ia = as_intervals(a), ib = as_intervals(b);
    return std::max(directed_intervals(ia, ib), directed_intervals(ib, ia));
  }
  if (a.dim == 2) return std::max(directed_indexed<2>(a.points, b.points, norm), directed_indexed<2>(b.points, a.points, norm));
  if (a.dim == 3) return std::max(directed_indexed<3>(a.points, b.points, norm), directed_indexed<3>(b.points, a.points, norm));
  double worst = 0;
  for (const auto& p : a.points) worst = std::max(worst, dist_to_points(p, b.points, norm));
  for (const auto& p : b.points) worst = std::max(worst, dist_to_points(p, a.points, norm));
  return worst;
}

SampledSet sample_cell(const LinearCell& cell, double h) {
  SampledSet s;
  s.dim = static_cast<int>(cell.dim);
  s.resolution = h;
  const auto verts = polytope_vertices(cell);
  const LinearCell closed = closed_of(cell);
  Point lo(cell.dim, std::numeric_limits<double>::infinity()), hi(cell.dim, -std::numeric_limits<double>::infinity());
  for (const auto& v : verts) {
    const Point p = to_point(v);
    s.points.push_back(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  for_grid(lo, hi, h, [&](const Point& p) {
    if (cell_membership(closed, to_rational(p))) s.points.push_back(p);
  });
  return s;
}

ValueSampler polyhedral_sampler(const SetValuedMap& map, double h, double truncation) {
  const Eigen::Index m = map.m;
  const Vec lo_box = Vec::Constant(m, -Rational::from_double(truncation));
  const Vec hi_box = Vec::Constant(m, Rational::from_double(truncation));
  const LinearCell box = box_cell(lo_box, hi_box);
  std::vector<LinearCell> cells;
  for (const auto& c : map.graph.cells) cells.push_back(c);
  return [cells, box, m, h](const Point& x) {
    SampledSet out;
    out.dim = static_cast<int>(m);
    out.resolution = h;
    const Vec xr = to_rational(x);
    for (const auto& c : cells) {
      LinearCell slice = slice_at(c, xr).intersect(box);
      if (is_empty(slice)) continue;
      const LinearCell closed = closed_of(slice);
      if (m == 1) {
        Rational lo = box.le[1].rhs * -1, hi = box.le[0].rhs;
        for (const auto& r : closed.eq)
          if (!r.normal(0).is_zero()) lo = hi = r.rhs / r.normal(0);
        for (const auto& r : closed.le) {
          if (r.normal(0).sign() > 0) hi = min(hi, r.rhs / r.normal(0));
          else if (r.normal(0).sign() < 0) lo = max(lo, r.rhs / r.normal(0));
        }
        out.intervals.emplace_back(lo.to_double(), hi.to_double());
        continue;
      }
      const auto verts = polytope_vertices(closed);
      Point blo(static_cast<std::size_t>(m), std::numeric_limits<double>::infinity());
      Point bhi(static_cast<std::size_t>(m), -std::numeric_limits<double>::infinity());
      for (const auto& v : verts) {
        const Point p = to_point(v);
        out.points.push_back(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
          blo[i] = std::min(blo[i], p[i]);
          bhi[i] = std::max(bhi[i], p[i]);
        }
      }
      for (auto& v : blo) v = std::floor(v / h) * h;
      for_grid(blo, bhi, h, [&](const Point& p) {
        if (cell_membership(closed, to_rational(p))) out.points.push_back(p);
      });
    }
    return out;
  };
}

Rational evaluate_polynomial(const Polynomial& p, const Vec& z) {
  Rational s = 0;
  for (const auto& mono : p) {
    if (static_cast<Eigen::Index>(mono.exponents.size()) != z.size())
      throw std::invalid_argument("monomial exponent count does not match the dimension");
    Rational t = mono.coeff;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i)
      for (int e = 0; e < mono.exponents[i]; ++e) t *= z(static_cast<Eigen::Index>(i));
    s += t;
  }
  return s;
}

bool polynomial_membership(const PolynomialCell& cell, const Vec& z) {
  if (z.size() != cell.dim) throw std::invalid_argument("polynomial_membership: dimension mismatch");
  for (const auto& p : cell.zero)
    if (!evaluate_polynomial(p, z).is_zero()) return false;
  for (const auto& q : cell.pos)
    if (evaluate_polynomial(q, z).sign() <= 0) return false;
  return true;
}

ValueSampler polynomial_sampler(const std::vector<PolynomialCell>& graph, Eigen::Index n, Eigen::Index m, double h,
                                double truncation) {
  for (const auto& c : graph)
    if (c.dim != n + m) throw std::invalid_argument("polynomial cell has wrong dimension");
  return [graph, m, h, truncation](const Point& x) {
    SampledSet out;
    out.dim = static_cast<int>(m);
    out.resolution = h;
    const Point lo(static_cast<std::size_t>(m), -truncation), hi(static_cast<std::size_t>(m), truncation);
    auto lift = [&](const Point& y) {
      Point z = x;
      z.insert(z.end(), y.begin(), y.end());
      return to_rational(z);
    };
    for_grid(lo, hi, h, [&](const Point& y) {
      const Vec zr = lift(y);
      bool hit = false;
      for (const auto& c : graph) {
        if (polynomial_membership(c, zr)) {
          hit = true;
          break;
        }
        // A single equation rarely vanishes on the grid; an exact sign change on the
        // segment to the next grid point in the last coordinate brackets a root.
        if (c.zero.size() != 1 || y.back() + h > truncation) continue;
        Point up = y;
        up.back() += h;
        const Vec ur = lift(up);
        if (evaluate_polynomial(c.zero[0], zr).sign() * evaluate_polynomial(c.zero[0], ur).sign() >= 0) continue;
        bool pos = true;
        for (const auto& p : c.pos) pos = pos && evaluate_polynomial(p, zr).sign() > 0 && evaluate_polynomial(p, ur).sign() > 0;
        if (!pos) continue;
        // Bisection with exact signs shrinks the bracket far below the grid step.
        Point a = y, b = up;
        const int sa = evaluate_polynomial(c.zero[0], zr).sign();
        for (int it = 0; it < 48 && b.back() - a.back() > 1e-13; ++it) {
          Point mid = a;
          mid.back() = (a.back() + b.back()) / 2;
          const int sm = evaluate_polynomial(c.zero[0], lift(mid)).sign();
          if (sm == 0) {
            a = b = mid;
            break;
          }
          (sm == sa ? a : b) = mid;
        }
        a.back() = (a.back() + b.back()) / 2;
        out.points.push_back(a);
      }
      if (hit) out.points.push_back(y);
    });
    return out;
  };
}

LimitEstimate estimate_limits(const ValueSampler& s, const Point& x, Eigen::Index m, double h, double radius,
                              std::uint64_t seed) {
  LimitEstimate est;
  est.outer.dim = est.inner.dim = static_cast<int>(m);
  const SampledSet base = s(x);
  est.value_empty = base.empty();
  const std::size_t n = x.size();

  std::vector<Point> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0.0);
    e[i] = 1;
    dirs.push_back(e);
    e[i] = -1;
    dirs.push_back(e);
  }
  for (const auto& u : unit_box_samples(n, 8, seed)) dirs.push_back(u);

  const std::vector<double> scales{h, h / 2, h / 4};
  std::vector<std::vector<SampledSet>> values(scales.size());
  std::vector<Point> candidates;
  double res = base.resolution;
  auto add_candidates = [&](const SampledSet& v) {
    for (const auto& p : v.points) candidates.push_back(p);
    for (const auto& [l, u] : v.intervals) {
      const double step = v.resolution > 0 ? v.resolution : std::max(u - l, 1e-12);
      for (double t = l; t < u; t += step) candidates.push_back({t});
      candidates.push_back({u});
    }
  };
  for (std::size_t k = 0; k < scales.size(); ++k) {
    for (const auto& d : dirs) {
      Point xs(n);
      for (std::size_t i = 0; i < n; ++i) xs[i] = x[i] + scales[k] * d[i];
      SampledSet v = s(xs);
      if (v.empty()) continue;
      res = std::max(res, v.resolution);
      add_candidates(v);
      values[k].push_back(std::move(v));
    }
  }
  add_candidates(base);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const Point& a, const Point& b) { return norm_of(a, b, NormKind::sup) < 1e-12; }),
                   candidates.end());
  est.outer.resolution = est.inner.resolution = res;
  for (const auto& y : candidates) {
    if (norm_of(y, Point(y.size(), 0.0), NormKind::sup) > radius) continue;
    bool outer = true, inner = true;
    for (std::size_t k = 0; k < scales.size(); ++k) {
      if (values[k].empty()) {
        outer = inner = false;
        break;
      }
      const double tol = 2 * res + 4 * scales[k];
      double nearest = std::numeric_limits<double>::infinity(), farthest = 0;
      for (const auto& v : values[k]) {
        const double d = dist_to_set(y, v, NormKind::sup);
        nearest = std::min(nearest, d);
        farthest = std::max(farthest, d);
      }
      outer = outer && nearest <= tol;
      inner = inner && farthest <= tol;
    }
    if (outer) est.outer.points.push_back(y);
    if (inner) est.inner.points.push_back(y);
  }
  return est;
}

LipEstimate estimate_lip(const ValueSampler& s, const Point& x, const LipOptions& options) {
  LipEstimate est;
  const std::size_t n = x.size();
  const std::size_t k = options.directions.empty() ? n : options.directions.size();
  auto embed = [&](const Point& u, double scale) {
    Point out = x;
    for (std::size_t j = 0; j < k; ++j) {
      if (options.directions.empty()) out[j] += scale * u[j];
      else
        for (std::size_t i = 0; i < n; ++i) out[i] += scale * u[j] * options.directions[j][i];
    }
    return out;
  };
  const std::vector<double> scales{options.h, options.h / 2, options.h / 4};
  for (double scale : scales) {
    // Same offsets at every scale, so that conical behaviour gives scale-free quotients.
    const auto first = unit_box_samples(k, options.pairs, options.seed);
    const auto second = unit_box_samples(k, options.pairs, options.seed + 7919);
    double q = 0;
    for (int i = 0; i < options.pairs; ++i) {
      const Point a = embed(i % 4 == 0 ? Point(k, 0.0) : first[static_cast<std::size_t>(i)], scale);
      const Point b = embed(second[static_cast<std::size_t>(i)], scale);
      const double dx = norm_of(a, b, options.norm);
      if (dx < 1e-15) continue;
      const SampledSet sa = s(a), sb = s(b);
      if (sa.empty() || sb.empty()) {
        ++est.pairs_skipped;
        continue;
      }
      ++est.pairs_used;
      q = std::max(q, sample_hausdorff(sa, sb, options.norm) / dx);
    }
    est.per_scale.push_back(q);
  }
  est.estimate = est.per_scale.front();
  if (est.per_scale.front() > 0 && est.per_scale.back() > 0)
    est.growth_exponent = std::log2(est.per_scale.back() / est.per_scale.front()) / 2;
  // Conical behaviour gives exponent 0, a square-root cusp 1/2 and a jump 1.
  est.diverging = est.growth_exponent > 0.25;
  return est;
}

double estimate_surjection_rate(const ValueSampler& s, const Point& x, const Point& y, const std::vector<double>& lambdas,
                                double h) {
  if (lambdas.empty()) throw std::invalid_argument("estimate_surjection_rate: empty lambda grid");
  const std::size_t n = x.size(), m = y.size();
  double rate = std::numeric_limits<double>::infinity();
  for (double lambda : lambdas) {
    SampledSet image;
    image.dim = static_cast<int>(m);
    Point lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = x[i] - lambda;
      hi[i] = x[i] + lambda;
    }
    for_grid(lo, hi, lambda / 20, [&](const Point& xs) {
      const SampledSet v = s(xs);
      image.resolution = std::max(image.resolution, v.resolution);
      image.points.insert(image.points.end(), v.points.begin(), v.points.end());
      image.intervals.insert(image.intervals.end(), v.intervals.begin(), v.intervals.end());
    });
    double covered = 0;
    double tol = 0;
    if (!image.empty()) {
      tol = lambda / 40 + h + (image.points.empty() ? 0 : image.resolution);
      for (int k = 1; k <= 40; ++k) {
        const double r = k * lambda / 20;
        Point blo(m), bhi(m);
        for (std::size_t j = 0; j < m; ++j) {
          blo[j] = y[j] - r;
          bhi[j] = y[j] + r;
        }
        bool all = true;
        for_grid(blo, bhi, r / 5, [&](const Point& p) {
          if (all && dist_to_set(p, image, NormKind::sup) > tol) all = false;
        });
        if (!all) break;
        covered = r;
      }
    }
    // Balls within the tolerance are covered trivially; only the radius beyond it counts.
    rate = std::min(rate, std::max(0.0, covered - tol) / lambda);
  }
  return rate;
}

}  // namespace pwmap::oracle
