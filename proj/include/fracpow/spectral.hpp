#ifndef FRACPOW_SPECTRAL_HPP
#define FRACPOW_SPECTRAL_HPP

#include <cmath>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

#include "fracpow/eigen_oracle.hpp"
#include "fracpow/grid.hpp"

namespace fracpow {

namespace spectral_detail {

inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

/// In-place DST-I (RODFT00) along every dimension: computes 2·S·x per
/// direction, where S_{kj} = sin(pi j k h) and S·S = ((n+1)/2)·I.
inline void dst_all(const GridSpec& grid, std::vector<double>& data) {
  const int n = static_cast<int>(grid.n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (grid.dimension == 1)
      plan = fftw_plan_r2r_1d(n, data.data(), data.data(), FFTW_RODFT00, FFTW_ESTIMATE);
    else
      plan = fftw_plan_r2r_2d(n, n, data.data(), data.data(), FFTW_RODFT00, FFTW_RODFT00,
                              FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("spectral: FFTW plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace spectral_detail

inline constexpr std::int64_t kDefaultSpectralCap = 1LL << 25;

/// Sine-basis coefficients f_hat with f = sum f_hat_i psi_i over the
/// normalized eigenvectors: f_hat = kappa * S f (kappa = sqrt(2h) or 2h).
inline GridFunction sine_coefficients(const GridSpec& grid, const GridFunction& f) {
  std::vector<double> data = f;
  spectral_detail::dst_all(grid, data);
  const double h = grid.h();
  const double kappa = grid.dimension == 1 ? std::sqrt(2 * h) : 2 * h;
  const double scale = kappa / (grid.dimension == 1 ? 2.0 : 4.0);
  for (double& v : data) v *= scale;
  return data;
}

/// Apply g(A) exactly via the sine-basis diagonalization:
///   u = kappa^2 S g(D) S f  (per direction one DST-I each way).
/// g is evaluated at the closed-form eigenvalues.
template <typename Symbol>
GridFunction apply_spectral(const GridSpec& grid, const GridFunction& f, Symbol&& g,
                            std::int64_t size_cap = kDefaultSpectralCap) {
  if (grid.size() > size_cap)
    throw std::invalid_argument("apply_spectral: grid exceeds the configured size cap");
  if (static_cast<std::int64_t>(f.size()) != grid.size())
    throw std::invalid_argument("apply_spectral: data size mismatch");
  const double h = grid.h();
  std::vector<double> data = f;
  spectral_detail::dst_all(grid, data);
  if (grid.dimension == 1) {
    for (std::int64_t i = 1; i <= grid.n; ++i)
      data[static_cast<std::size_t>(i - 1)] *= g(oracle_eigenvalue(grid, {i, 1}));
  } else {
    std::size_t at = 0;
    const double s = 4.0 / (h * h);
    std::vector<double> sin2(static_cast<std::size_t>(grid.n) + 1);
    for (std::int64_t i = 1; i <= grid.n; ++i) {
      const double v = std::sin(i * M_PI * h / 2);
      sin2[static_cast<std::size_t>(i)] = v * v;
    }
    for (std::int64_t j = 1; j <= grid.n; ++j)
      for (std::int64_t i = 1; i <= grid.n; ++i, ++at)
        data[at] *= g(s * (sin2[static_cast<std::size_t>(i)] +
                           sin2[static_cast<std::size_t>(j)]));
  }
  spectral_detail::dst_all(grid, data);
  // kappa^2 / (2 per DST per direction): h/2 in 1-D, h^2/4 in 2-D
  const double scale = grid.dimension == 1 ? h / 2 : h * h / 4;
  for (double& v : data) v *= scale;
  return data;
}

/// Exact discrete solution of A^alpha u = f on the structured grid.
inline GridFunction solve_spectral(const GridSpec& grid, const GridFunction& f, double alpha,
                                   std::int64_t size_cap = kDefaultSpectralCap) {
  return apply_spectral(grid, f, [alpha](double lambda) { return std::pow(lambda, -alpha); },
                        size_cap);
}

/// Restrict a function on a fine nested grid to a coarse one by node
/// injection. Requires (n_fine + 1) divisible by (n_coarse + 1), which holds
/// for the h = 2^-L mesh family; coarse nodes are a subset of fine nodes.
inline GridFunction restrict_nested(const GridSpec& fine, const GridFunction& uf,
                                    const GridSpec& coarse) {
  if (fine.dimension != coarse.dimension)
    throw std::invalid_argument("restrict_nested: dimension mismatch");
  const std::int64_t stride = (fine.n + 1) / (coarse.n + 1);
  if (stride * (coarse.n + 1) != fine.n + 1)
    throw std::invalid_argument("restrict_nested: grids are not nested");
  GridFunction uc(static_cast<std::size_t>(coarse.size()));
  if (fine.dimension == 1) {
    for (std::int64_t i = 1; i <= coarse.n; ++i)
      uc[static_cast<std::size_t>(i - 1)] = uf[static_cast<std::size_t>(i * stride - 1)];
  } else {
    std::size_t at = 0;
    for (std::int64_t j = 1; j <= coarse.n; ++j)
      for (std::int64_t i = 1; i <= coarse.n; ++i, ++at)
        uc[at] = uf[static_cast<std::size_t>((j * stride - 1) * fine.n + (i * stride - 1))];
  }
  return uc;
}

}  // namespace fracpow

#endif  // FRACPOW_SPECTRAL_HPP
