#pragma once

#include <utility>
#include <vector>

#include "posetsys/errors.hpp"
#include "posetsys/rational.hpp"

// Exact elimination over a field. Scalar must have exact arithmetic
// (Rational); nothing here pivots on magnitude.
namespace posetsys {

template <typename Scalar>
struct Echelon {
  Mat<Scalar> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e{m, {}};
  Mat<Scalar>& r = e.reduced;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index pivot = row;
    while (pivot < r.rows() && r(pivot, col) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) r.row(pivot).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const Scalar f = r(i, col);
      for (Index j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

// Columns form a basis of ker m, one column per free variable.
template <typename Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Echelon<Scalar> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : e.pivots) is_pivot[c] = true;
  Mat<Scalar> basis =
      Mat<Scalar>::Zero(m.cols(), m.cols() - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], k) = -e.reduced(static_cast<Index>(r), free);
    }
    ++k;
  }
  return basis;
}

template <typename Derived>
Mat<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
  const Index n = m.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug << m, Mat<Scalar>::Identity(n, n);
  const Echelon<Scalar> e = rref(aug);
  if (static_cast<Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw SingularMatrix("matrix is singular");
  }
  return e.reduced.rightCols(n);
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  Mat<Scalar> r = m;
  Scalar det = 1;
  const Index n = r.rows();
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && r(pivot, col) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      r.row(pivot).swap(r.row(col));
      det = -det;
    }
    det *= r(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (r(i, col) == 0) continue;
      const Scalar f = r(i, col) / r(col, col);
      for (Index j = col; j < n; ++j) r(i, j) -= f * r(col, j);
    }
  }
  return det;
}

// Solves m x = b; throws SingularMatrix if m is singular.
template <typename DerivedA, typename DerivedB>
Mat<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& m,
                                     const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Index n = m.rows();
  if (m.cols() != n || b.rows() != n) throw ShapeMismatch("solve: shape mismatch");
  Mat<Scalar> aug(n, n + b.cols());
  aug << m, b;
  const Echelon<Scalar> e = rref(aug);
  if (static_cast<Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw SingularMatrix("matrix is singular");
  }
  return e.reduced.topRightCorner(n, b.cols());
}

}  // namespace posetsys
