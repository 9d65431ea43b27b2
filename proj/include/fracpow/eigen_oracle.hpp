#ifndef FRACPOW_EIGEN_ORACLE_HPP
#define FRACPOW_EIGEN_ORACLE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "fracpow/grid.hpp"

namespace fracpow {

struct EigenIndex {
  std::int64_t i = 1;
  std::int64_t j = 1;  // ignored in 1-D
};

struct EigenPair {
  EigenIndex index;
  double lambda = 0;
  GridFunction psi;
};

/// Closed-form eigenvalue of the FD Laplacian.
/// 1-D: (4/h^2) sin^2(i pi h / 2); 2-D: sum over both directions.
inline double oracle_eigenvalue(const GridSpec& grid, EigenIndex idx) {
  const double h = grid.h();
  const double s = 4.0 / (h * h);
  auto si = [&](std::int64_t i) {
    const double v = std::sin(i * M_PI * h / 2);
    return v * v;
  };
  if (grid.dimension == 1) return s * si(idx.i);
  return s * (si(idx.i) + si(idx.j));
}

/// Closed-form normalized eigenvector: kappa sin(i pi x), kappa = sqrt(2h)
/// in 1-D and 2h for the tensor product in 2-D.
inline EigenPair eigen_oracle(const GridSpec& grid, EigenIndex idx) {
  if (idx.i < 1 || idx.i > grid.n || (grid.dimension == 2 && (idx.j < 1 || idx.j > grid.n)))
    throw std::out_of_range("eigen_oracle: index out of range");
  const double h = grid.h();
  EigenPair ep;
  ep.index = idx;
  ep.lambda = oracle_eigenvalue(grid, idx);
  ep.psi.resize(static_cast<std::size_t>(grid.size()));
  if (grid.dimension == 1) {
    const double kappa = std::sqrt(2 * h);
    for (std::int64_t p = 1; p <= grid.n; ++p)
      ep.psi[static_cast<std::size_t>(p - 1)] = kappa * std::sin(idx.i * M_PI * p * h);
  } else {
    const double kappa = 2 * h;
    std::size_t at = 0;
    for (std::int64_t q = 1; q <= grid.n; ++q) {
      const double sy = std::sin(idx.j * M_PI * q * h);
      for (std::int64_t p = 1; p <= grid.n; ++p, ++at)
        ep.psi[at] = kappa * std::sin(idx.i * M_PI * p * h) * sy;
    }
  }
  return ep;
}

}  // namespace fracpow

#endif  // FRACPOW_EIGEN_ORACLE_HPP
