#include "pwmap/linalg.hpp"

#include <stdexcept>

namespace pwmap {

Vec zeros(Eigen::Index n) { return Vec::Constant(n, Rational(0)); }

Vec unit(Eigen::Index n, Eigen::Index i) {
  Vec v = zeros(n);
  v(i) = 1;
  return v;
}

Vec make_vec(std::initializer_list<Rational> values) {
  Vec v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec v(a.size() + b.size());
  v << a, b;
  return v;
}

Mat stack_rows(const std::vector<Vec>& rows, Eigen::Index cols) {
  Mat m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("stack_rows: row length mismatch");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

bool is_zero(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero() && !b(i).is_zero()) s += a(i) * b(i);
  return s;
}

Mat nullspace(const Mat& m, Eigen::Index cols) {
  if (m.rows() == 0) {
    Mat id = Mat::Constant(cols, cols, Rational(0));
    for (Eigen::Index i = 0; i < cols; ++i) id(i, i) = 1;
    return id;
  }
  Mat work = m;
  const auto pivots = rref_in_place(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Eigen::Index free_count = cols - static_cast<Eigen::Index>(pivots.size());
  Mat basis = Mat::Constant(cols, free_count, Rational(0));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -work(static_cast<Eigen::Index>(r), f);
    ++k;
  }
  return basis;
}

Mat row_basis(const Mat& m) {
  Mat work = m;
  const auto pivots = rref_in_place(work);
  return work.topRows(static_cast<Eigen::Index>(pivots.size()));
}

Mat orthogonal_complement(const Mat& basis_columns, Eigen::Index dim) {
  if (basis_columns.cols() == 0) return nullspace(Mat(0, dim), dim);
  return nullspace(basis_columns.transpose(), dim);
}

Vec primitive(const Vec& v) {
  if (is_zero(v)) return v;
  mpz_class l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_class d = v(i).den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> ints(static_cast<std::size_t>(v.size()));
  mpz_class g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpq_class scaled = v(i).raw() * mpq_class(l);
    ints[static_cast<std::size_t>(i)] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out(i) = Rational(mpz_class(ints[static_cast<std::size_t>(i)] / g));
  return out;
}

void normalize_hyperplane(Vec& a, Rational& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).is_zero()) continue;
    const Rational s = Rational(1) / a(i);
    a *= s;
    b *= s;
    return;
  }
}

std::vector<double> to_double(const Vec& v) {
  std::vector<double> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i).to_double();
  return out;
}

Vec from_double(const std::vector<double>& v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = Rational::from_double(v[i]);
  return out;
}

}  // namespace pwmap
