#ifndef FRACPOW_SPARSE_HPP
#define FRACPOW_SPARSE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "fracpow/grid.hpp"

namespace fracpow {

/// Symmetric sparse matrix in CSR format, immutable after assembly.
struct SparseSymMatrix {
  std::int64_t n = 0;
  std::vector<std::int64_t> row_ptr;
  std::vector<std::int64_t> col_idx;
  std::vector<double> values;

  std::int64_t rows() const { return n; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(values.size()); }

  void multiply(const double* x, double* y) const {
    for (std::int64_t i = 0; i < n; ++i) {
      double acc = 0;
      for (std::int64_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
        acc += values[k] * x[col_idx[k]];
      y[i] = acc;
    }
  }

  GridFunction multiply(const GridFunction& x) const {
    GridFunction y(x.size());
    multiply(x.data(), y.data());
    return y;
  }

  double diagonal(std::int64_t i) const {
    for (std::int64_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
      if (col_idx[k] == i) return values[k];
    return 0.0;
  }
};

/// Finite-difference Laplacian: (n+1)^2 tridiag(-1,2,-1) in 1-D; in 2-D the
/// five-point block matrix with diagonal blocks tridiag(-1,4,-1) and
/// off-diagonal blocks -I, all scaled by (n+1)^2.
inline SparseSymMatrix assemble_laplacian(const GridSpec& grid) {
  if (grid.n < 1) throw std::invalid_argument("assemble_laplacian: n must be >= 1");
  const std::int64_t n = grid.n;
  const std::int64_t N = grid.size();
  const double scale = static_cast<double>((n + 1)) * static_cast<double>(n + 1);

  SparseSymMatrix A;
  A.n = N;
  A.row_ptr.reserve(N + 1);
  A.row_ptr.push_back(0);
  if (grid.dimension == 1) {
    A.col_idx.reserve(3 * N);
    A.values.reserve(3 * N);
    for (std::int64_t i = 0; i < N; ++i) {
      if (i > 0) { A.col_idx.push_back(i - 1); A.values.push_back(-scale); }
      A.col_idx.push_back(i); A.values.push_back(2 * scale);
      if (i < N - 1) { A.col_idx.push_back(i + 1); A.values.push_back(-scale); }
      A.row_ptr.push_back(static_cast<std::int64_t>(A.col_idx.size()));
    }
  } else {
    A.col_idx.reserve(5 * N);
    A.values.reserve(5 * N);
    for (std::int64_t j = 0; j < n; ++j)
      for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t row = j * n + i;
        if (j > 0) { A.col_idx.push_back(row - n); A.values.push_back(-scale); }
        if (i > 0) { A.col_idx.push_back(row - 1); A.values.push_back(-scale); }
        A.col_idx.push_back(row); A.values.push_back(4 * scale);
        if (i < n - 1) { A.col_idx.push_back(row + 1); A.values.push_back(-scale); }
        if (j < n - 1) { A.col_idx.push_back(row + n); A.values.push_back(-scale); }
        A.row_ptr.push_back(static_cast<std::int64_t>(A.col_idx.size()));
      }
  }
  return A;
}

/// Infinity norm: max over rows of the absolute row sum.
inline double matrix_inf_norm(const SparseSymMatrix& A) {
  double best = 0;
  for (std::int64_t i = 0; i < A.n; ++i) {
    double s = 0;
    for (std::int64_t k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k)
      s += std::abs(A.values[k]);
    best = std::max(best, s);
  }
  return best;
}

/// A + diag(q) with q >= 0 entrywise.
inline SparseSymMatrix add_diagonal_reaction(const SparseSymMatrix& A,
                                             const GridFunction& q) {
  if (static_cast<std::int64_t>(q.size()) != A.n)
    throw std::invalid_argument("add_diagonal_reaction: size mismatch");
  for (double v : q)
    if (v < 0) throw std::invalid_argument("add_diagonal_reaction: negative reaction entry");
  SparseSymMatrix B = A;
  for (std::int64_t i = 0; i < B.n; ++i)
    for (std::int64_t k = B.row_ptr[i]; k < B.row_ptr[i + 1]; ++k)
      if (B.col_idx[k] == i) B.values[k] += q[static_cast<std::size_t>(i)];
  return B;
}

/// Matrix Market coordinate export (real general, all stored entries).
inline void write_matrix_market(std::ostream& os, const SparseSymMatrix& A) {
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << A.n << " " << A.n << " " << A.nnz() << "\n";
  char buf[64];
  for (std::int64_t i = 0; i < A.n; ++i)
    for (std::int64_t k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) {
      std::snprintf(buf, sizeof(buf), "%lld %lld %.17g\n",
                    static_cast<long long>(i + 1),
                    static_cast<long long>(A.col_idx[k] + 1), A.values[k]);
      os << buf;
    }
}

}  // namespace fracpow

#endif  // FRACPOW_SPARSE_HPP
