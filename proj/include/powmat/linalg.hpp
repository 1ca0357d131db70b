#pragma once

#include <optional>
#include <utility>

#include "powmat/exact.hpp"

namespace powmat {

/// Exact determinant by fraction-free (Bareiss) elimination. Pivoting is
/// deterministic: in each column the first nonzero entry scanning rows
/// top-down. Accepts any dense expression; a zero determinant is a normal
/// return value, never an error.
template <typename Derived>
typename Derived::Scalar bareiss_det(const Eigen::MatrixBase<Derived>& expr) {
  using Scalar = typename Derived::Scalar;
  typename Derived::PlainObject work = expr;
  const Index n = work.rows();
  if (work.cols() != n) throw DimensionMismatchError("determinant requires a square matrix");
  if (n == 0) return Scalar(1);

  Scalar prev(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    Index pivot = -1;
    for (Index r = k; r < n; ++r) {
      if (work(r, k) != Scalar(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Scalar(0);
    if (pivot != k) {
      work.row(pivot).swap(work.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        work(i, j) = (work(i, j) * work(k, k) - work(i, k) * work(k, j)) / prev;
      }
      work(i, k) = Scalar(0);
    }
    prev = work(k, k);
  }
  Scalar det = work(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

/// Exact inverse by Gauss-Jordan elimination with the same pivot rule as
/// bareiss_det. Throws SingularMatrixError when the determinant is zero.
ExactMatrix exact_inverse(const ExactMatrix& m);

struct IntegralityResult {
  bool ok{true};
  Index row{-1};
  Index col{-1};
  Rational value{};
};

/// OK when every entry has denominator 1; otherwise identifies the first
/// non-integral entry in row-major order, already in lowest terms.
IntegralityResult integrality_check(const ExactMatrix& m);

bool is_identity(const ExactMatrix& m);
bool is_symmetric(const ExactMatrix& m);
bool matrices_equal(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace powmat
