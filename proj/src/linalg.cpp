#include "powmat/linalg.hpp"

namespace powmat {

ExactMatrix exact_inverse(const ExactMatrix& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw DimensionMismatchError("inverse requires a square matrix");

  ExactMatrix work = m;
  ExactMatrix inv = ExactMatrix::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index r = k; r < n; ++r) {
      if (work(r, k) != Rational(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrixError("exact_inverse");
    if (pivot != k) {
      work.row(pivot).swap(work.row(k));
      inv.row(pivot).swap(inv.row(k));
    }
    const Rational scale = Rational(1) / work(k, k);
    work.row(k) *= scale;
    inv.row(k) *= scale;
    for (Index i = 0; i < n; ++i) {
      if (i == k || work(i, k) == Rational(0)) continue;
      const Rational factor = work(i, k);
      work.row(i) -= factor * work.row(k);
      inv.row(i) -= factor * inv.row(k);
    }
  }
  return inv;
}

IntegralityResult integrality_check(const ExactMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) return {false, i, j, m(i, j)};
    }
  }
  return {};
}

bool is_identity(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool is_symmetric(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

bool matrices_equal(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

}  // namespace powmat
