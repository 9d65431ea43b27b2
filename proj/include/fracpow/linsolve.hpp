#ifndef FRACPOW_LINSOLVE_HPP
#define FRACPOW_LINSOLVE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fracpow/bigreal.hpp"

namespace fracpow {

/// Solve the dense n x n system M x = b by Gaussian elimination with
/// partial pivoting. M is row-major and consumed. Sizes here are tiny
/// (Remez alternation systems), so no blocking is attempted.
inline std::vector<BigReal> dense_solve(std::vector<BigReal> M,
                                        std::vector<BigReal> b) {
  const std::size_t n = b.size();
  if (M.size() != n * n) throw std::invalid_argument("dense_solve: shape mismatch");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    BigReal best = abs(M[perm[col] * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      BigReal v = abs(M[perm[r] * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) throw std::runtime_error("dense_solve: singular matrix");
    std::swap(perm[col], perm[piv]);
    const std::size_t pr = perm[col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::size_t rr = perm[r];
      BigReal factor = M[rr * n + col] / M[pr * n + col];
      if (factor == 0) continue;
      M[rr * n + col] = 0;
      for (std::size_t c = col + 1; c < n; ++c) M[rr * n + c] -= factor * M[pr * n + c];
      b[rr] -= factor * b[pr];
    }
  }

  std::vector<BigReal> x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigReal acc = b[perm[i]];
    for (std::size_t c = i + 1; c < n; ++c) acc -= M[perm[i] * n + c] * x[c];
    x[i] = acc / M[perm[i] * n + i];
  }
  return x;
}

}  // namespace fracpow

#endif  // FRACPOW_LINSOLVE_HPP
