#include "doctest.h"
#include "pwmap/linalg.hpp"
#include "pwmap/random_maps.hpp"
#include "support.hpp"

using namespace pwmap;
using pwmap::testing::v;

namespace {

Mat random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-3, 3));
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(exact_rank(stack_rows({v({1, 2}), v({2, 4})}, 2)) == 1);
  CHECK(exact_rank(stack_rows({v({1, 0}), v({0, 1})}, 2)) == 2);
  CHECK(exact_rank(Mat::Zero(2, 3).eval()) == 0);
}

TEST_CASE("hyperplane normalisation makes the first nonzero entry 1") {
  Vec a = v({0, -2, 4});
  Rational b(6);
  normalize_hyperplane(a, b);
  CHECK(a == v({0, 1, -2}));
  CHECK(b == Rational(-3));
  CHECK(primitive(v({Rational(1, 2), Rational(-3, 4)})) == v({2, -3}));
}

TEST_CASE("nullspace and rank satisfy rank-nullity on random matrices") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index rows = rng.uniform(1, 4), cols = rng.uniform(1, 5);
    const Mat m = random_matrix(rng, rows, cols);
    const Mat ns = nullspace(m, cols);
    CHECK(exact_rank(m) + ns.cols() == cols);
    for (Eigen::Index j = 0; j < ns.cols(); ++j) CHECK(is_zero(m * ns.col(j)));
    if (ns.cols() > 0) CHECK(exact_rank(ns) == ns.cols());
    const Mat basis = row_basis(m);
    CHECK(basis.rows() == exact_rank(m));
    Mat both(m.rows() + basis.rows(), cols);
    both << m, basis;
    CHECK(exact_rank(both) == exact_rank(m));
  }
}

TEST_CASE("orthogonal complement is orthogonal and completes the dimension") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index dim = rng.uniform(1, 4);
    const Mat b = random_matrix(rng, dim, rng.uniform(1, 3));
    const Mat c = orthogonal_complement(b, dim);
    CHECK(exact_rank(b) + c.cols() == dim);
    CHECK(is_zero(Vec((b.transpose() * c).reshaped())));
  }
}
