#pragma once

#include <vector>

#include <Eigen/Core>

#include "pwmap/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<pwmap::Rational> : GenericNumTraits<pwmap::Rational> {
  using Real = pwmap::Rational;
  using NonInteger = pwmap::Rational;
  using Nested = pwmap::Rational;
  using Literal = pwmap::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace pwmap {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VectorX<Rational>;
using Mat = MatrixX<Rational>;

Vec zeros(Eigen::Index n);
Vec unit(Eigen::Index n, Eigen::Index i);
Vec make_vec(std::initializer_list<Rational> values);
Vec concat(const Vec& a, const Vec& b);
Mat stack_rows(const std::vector<Vec>& rows, Eigen::Index cols);

bool is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);

/// Reduced row echelon form computed in place; returns pivot columns.
template <typename Derived>
std::vector<Eigen::Index> rref_in_place(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(rref_in_place(work).size());
}

/// Basis of {v : m v = 0}, one basis vector per column of the result.
Mat nullspace(const Mat& m, Eigen::Index cols);
/// Rows forming a basis of the row space of m (RREF rows, canonical).
Mat row_basis(const Mat& m);
/// Basis (as columns) of the orthogonal complement of span(columns of basis) in R^dim.
Mat orthogonal_complement(const Mat& basis_columns, Eigen::Index dim);

/// Scales v to a primitive integer vector (positive multiple). Zero stays zero.
Vec primitive(const Vec& v);
/// Scales (a, b) jointly so that a's first nonzero entry is 1.
void normalize_hyperplane(Vec& a, Rational& b);

std::vector<double> to_double(const Vec& v);
Vec from_double(const std::vector<double>& v);

}  // namespace pwmap
