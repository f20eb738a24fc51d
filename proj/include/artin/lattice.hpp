#pragma once

// Exact integer linear algebra on small dense matrices: column echelon form
// with unimodular transform, lattice kernels and integer solves.

#include "artin/core.hpp"

#include <concepts>
#include <optional>
#include <utility>

namespace artin::lattice {

namespace detail {

template <std::integral Scalar>
Scalar add(Scalar a, Scalar b) {
  Scalar out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("lattice: integer overflow");
  return out;
}

template <std::integral Scalar>
Scalar mul(Scalar a, Scalar b) {
  Scalar out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("lattice: integer overflow");
  return out;
}

// a*x + b*y = g >= 0
template <std::integral Scalar>
Scalar extended_gcd(Scalar a, Scalar b, Scalar& x, Scalar& y) {
  Scalar x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Scalar t = a / b;
    Scalar tmp = a - t * b;
    a = b;
    b = tmp;
    tmp = x0 - t * x1;
    x0 = x1;
    x1 = tmp;
    tmp = y0 - t * y1;
    y0 = y1;
    y1 = tmp;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// cols (c, k) <- (x*c + y*k, u*c + v*k)
template <typename Derived, std::integral Scalar>
void combine_columns(Eigen::MatrixBase<Derived>& M, Index c, Index k, Scalar x,
                     Scalar y, Scalar u, Scalar v) {
  for (Index i = 0; i < M.rows(); ++i) {
    const Scalar a = M(i, c), b = M(i, k);
    M(i, c) = add(mul(x, a), mul(y, b));
    M(i, k) = add(mul(u, a), mul(v, b));
  }
}

}  // namespace detail

/// Column echelon form: A * transform = echelon, transform unimodular.
/// Column k < rank has its first nonzero entry at pivot_rows[k]; pivot rows
/// strictly increase and columns >= rank are zero.
template <std::integral Scalar>
struct ColumnEchelon {
  Matrix<Scalar> echelon;
  Matrix<Scalar> transform;
  std::vector<Index> pivot_rows;

  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};

template <std::integral Scalar>
ColumnEchelon<Scalar> column_echelon(const Matrix<Scalar>& A) {
  ColumnEchelon<Scalar> out{A, Matrix<Scalar>::Identity(A.cols(), A.cols()), {}};
  auto& H = out.echelon;
  auto& U = out.transform;
  Index col = 0;
  for (Index i = 0; i < H.rows() && col < H.cols(); ++i) {
    for (Index k = col + 1; k < H.cols(); ++k) {
      const Scalar b = H(i, k);
      if (b == 0) continue;
      const Scalar a = H(i, col);
      Scalar x, y;
      const Scalar g = detail::extended_gcd(a, b, x, y);
      const Scalar u = -b / g, v = a / g;
      detail::combine_columns(H, col, k, x, y, u, v);
      detail::combine_columns(U, col, k, x, y, u, v);
    }
    if (H(i, col) != 0) {
      if (H(i, col) < 0) {
        H.col(col) = -H.col(col);
        U.col(col) = -U.col(col);
      }
      out.pivot_rows.push_back(i);
      ++col;
    }
  }
  return out;
}

template <std::integral Scalar>
Index rank(const Matrix<Scalar>& A) {
  return column_echelon(A).rank();
}

/// Hermite normal form of the row lattice: pivots positive, entries above a
/// pivot reduced into [0, pivot). Zero rows are dropped. Canonical for the
/// lattice spanned by the rows.
template <std::integral Scalar>
Matrix<Scalar> row_hermite(const Matrix<Scalar>& M) {
  // Row HNF of M is the transpose of the column echelon form of M^T, with the
  // off-pivot entries reduced afterwards.
  const Matrix<Scalar> Mt = M.transpose();
  auto ce = column_echelon(Mt);
  Matrix<Scalar> H = ce.echelon.leftCols(ce.rank()).transpose();
  for (Index k = 0; k < H.rows(); ++k) {
    const Index pc = ce.pivot_rows[static_cast<std::size_t>(k)];
    const Scalar piv = H(k, pc);
    for (Index i = 0; i < k; ++i) {
      Scalar qt = H(i, pc) / piv;
      if (H(i, pc) - qt * piv < 0) --qt;
      if (qt == 0) continue;
      for (Index c = 0; c < H.cols(); ++c)
        H(i, c) = detail::add(H(i, c), detail::mul(-qt, H(k, c)));
    }
  }
  return H;
}

/// Basis of {z : A z = 0} as the rows of the returned matrix, in row Hermite
/// normal form.
template <std::integral Scalar>
Matrix<Scalar> kernel(const Matrix<Scalar>& A) {
  auto ce = column_echelon(A);
  const Index k = A.cols() - ce.rank();
  if (k == 0) return Matrix<Scalar>(0, A.cols());
  Matrix<Scalar> basis = ce.transform.rightCols(k).transpose();
  return row_hermite(basis);
}

/// Some integer z with A z = b, or nothing if b is outside the column lattice.
template <std::integral Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& A,
                                    const Vector<Scalar>& b) {
  if (b.size() != A.rows())
    throw std::invalid_argument("lattice::solve: dimension mismatch");
  auto ce = column_echelon(A);
  Vector<Scalar> residual = b;
  Vector<Scalar> y = Vector<Scalar>::Zero(A.cols());
  for (Index c = 0; c < ce.rank(); ++c) {
    const Index row = ce.pivot_rows[static_cast<std::size_t>(c)];
    const Scalar piv = ce.echelon(row, c);
    if (residual(row) % piv != 0) return std::nullopt;
    y(c) = residual(row) / piv;
    for (Index i = 0; i < residual.size(); ++i)
      residual(i) = detail::add(residual(i), detail::mul(-y(c), ce.echelon(i, c)));
  }
  if (!residual.isZero()) return std::nullopt;
  Vector<Scalar> z = Vector<Scalar>::Zero(A.cols());
  for (Index c = 0; c < ce.rank(); ++c)
    for (Index i = 0; i < z.size(); ++i)
      z(i) = detail::add(z(i), detail::mul(y(c), ce.transform(i, c)));
  return z;
}

}  // namespace artin::lattice
