#pragma once

#include "fewnomial/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace fewnomial {

/// U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_n),
/// d_i >= 0 and d_1 | d_2 | ... | d_n.
template <typename Scalar>
struct SnfDecomposition {
  Matrix<Scalar> U, D, V;
  /// log(2n + max |entry|) of A, U and V.
  double h_A = 0, h_U = 0, h_V = 0;
  /// n^3 (h_A + log n)^2, reported next to the measured h_U, h_V.
  double h_reference = 0;

  Vector<Scalar> diagonal() const { return D.diagonal(); }
};

namespace lattice_detail {

inline double log_abs(const BigInt& x) {
  if (x == 0) return -HUGE_VAL;
  long e = 0;
  const double m = mpz_get_d_2exp(&e, x.backend().data());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

template <typename Scalar>
double log_abs(const Scalar& x) {
  return x == 0 ? -HUGE_VAL : std::log(std::fabs(static_cast<double>(x)));
}

inline BigInt abs_value(const BigInt& x) { return mp::abs(x); }
template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& A) {
  if (A.rows() != A.cols())
    throw Error(ErrorCode::NotSquare, "matrix is " + std::to_string(A.rows()) + "x" +
                                          std::to_string(A.cols()) + ", expected square");
}

}  // namespace lattice_detail

/// log(2n + max |a_ij|) with n the larger dimension.
template <typename Derived>
double entry_size(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  Scalar m = 0;
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j) m = std::max(m, lattice_detail::abs_value(Scalar(A(i, j))));
  const Scalar n2 = Scalar(2 * std::max(A.rows(), A.cols()));
  return lattice_detail::log_abs(Scalar(m + n2));
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  lattice_detail::require_square(A);
  const Index n = A.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> M = A;
  Scalar prev = 1;
  int sgn = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Index p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      M.row(k).swap(M.row(p));
      sgn = -sgn;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) M(i, j) = Scalar((M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev);
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  return sgn < 0 ? Scalar(-M(n - 1, n - 1)) : Scalar(M(n - 1, n - 1));
}

/// Classical elimination Smith form. The pivot is the smallest nonzero
/// |entry| of the active block, ties broken by (row, column) order, so the
/// output depends only on the input.
template <typename Derived>
SnfDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  using lattice_detail::abs_value;
  lattice_detail::require_square(A);
  const Index n = A.rows();

  SnfDecomposition<Scalar> out;
  Matrix<Scalar> M = A;
  Matrix<Scalar> U = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar> V = Matrix<Scalar>::Identity(n, n);

  for (Index t = 0; t < n; ++t) {
    for (;;) {
      Index pi = -1, pj = -1;
      for (Index i = t; i < n; ++i)
        for (Index j = t; j < n; ++j)
          if (M(i, j) != 0 && (pi < 0 || abs_value(Scalar(M(i, j))) < abs_value(Scalar(M(pi, pj))))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // the rest of the block is zero
      if (pi != t) {
        M.row(t).swap(M.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        M.col(t).swap(M.col(pj));
        V.col(t).swap(V.col(pj));
      }

      bool clean = true;
      for (Index i = t + 1; i < n; ++i) {
        if (M(i, t) == 0) continue;
        const Scalar q = M(i, t) / M(t, t);
        M.row(i) -= q * M.row(t);
        U.row(i) -= q * U.row(t);
        if (M(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (M(t, j) == 0) continue;
        const Scalar q = M(t, j) / M(t, t);
        M.col(j) -= q * M.col(t);
        V.col(j) -= q * V.col(t);
        if (M(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise pull the
      // offending row in and reduce again.
      Index bad = -1;
      for (Index i = t + 1; i < n && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (M(i, j) % M(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      M.row(t) += M.row(bad);
      U.row(t) += U.row(bad);
    }
    if (M(t, t) < 0) {
      M.row(t) = -M.row(t);
      U.row(t) = -U.row(t);
    }
  }

  out.h_A = entry_size(A);
  out.h_U = entry_size(U);
  out.h_V = entry_size(V);
  const double nd = static_cast<double>(std::max<Index>(n, 1));
  out.h_reference = nd * nd * nd * std::pow(out.h_A + std::log(nd), 2);
  out.U = std::move(U);
  out.D = std::move(M);
  out.V = std::move(V);
  return out;
}

}  // namespace fewnomial
