#ifndef FRACPOW_CG_HPP
#define FRACPOW_CG_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracpow/grid.hpp"
#include "fracpow/sparse.hpp"

namespace fracpow {

enum class Preconditioner { none, jacobi };

struct ShiftedSolveConfig {
  double tolerance = 1e-12;           // relative residual target
  std::int64_t max_iterations = 0;    // 0 -> 10 * sqrt(N)
  Preconditioner preconditioner = Preconditioner::jacobi;

  void validate() const {
    if (!(tolerance > 0) || tolerance > 1e-2)
      throw std::invalid_argument("ShiftedSolveConfig: tolerance must be in (0, 1e-2]");
  }
};

struct ShiftedSolveStats {
  std::int64_t iterations = 0;
  double relative_residual = 0;
  bool converged = true;
};

struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
  double achieved_residual = 0;
};

/// Preconditioned conjugate gradient for (A + cI)x = f with c >= 0.
/// Deterministic: fixed iteration order, no reductions reordered.
inline GridFunction shifted_solve(const SparseSymMatrix& A, double c,
                                  const GridFunction& f, const ShiftedSolveConfig& cfg,
                                  ShiftedSolveStats* stats = nullptr) {
  cfg.validate();
  if (c < 0) throw std::invalid_argument("shifted_solve: shift must be >= 0");
  const std::int64_t N = A.n;
  if (static_cast<std::int64_t>(f.size()) != N)
    throw std::invalid_argument("shifted_solve: rhs size mismatch");
  const std::int64_t maxit =
      cfg.max_iterations > 0
          ? cfg.max_iterations
          : static_cast<std::int64_t>(10 * std::sqrt(static_cast<double>(N))) + 10;

  GridFunction inv_diag;
  if (cfg.preconditioner == Preconditioner::jacobi) {
    inv_diag.resize(static_cast<std::size_t>(N));
    for (std::int64_t i = 0; i < N; ++i) inv_diag[i] = 1.0 / (A.diagonal(i) + c);
  }

  GridFunction x(static_cast<std::size_t>(N), 0.0);
  GridFunction r = f;  // r = f - (A+cI)*0
  GridFunction z(static_cast<std::size_t>(N));
  GridFunction p(static_cast<std::size_t>(N));
  GridFunction Ap(static_cast<std::size_t>(N));

  auto dot = [N](const GridFunction& a, const GridFunction& b) {
    double s = 0;
    for (std::int64_t i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
  };

  const double fnorm = norm2(f);
  if (fnorm == 0) {
    if (stats) *stats = {0, 0.0, true};
    return x;
  }
  const double target = cfg.tolerance * fnorm;

  auto apply_precond = [&](const GridFunction& in, GridFunction& out) {
    if (inv_diag.empty())
      out = in;
    else
      for (std::int64_t i = 0; i < N; ++i) out[i] = inv_diag[i] * in[i];
  };

  apply_precond(r, z);
  p = z;
  double rz = dot(r, z);
  double rnorm = fnorm;
  std::int64_t it = 0;
  for (; it < maxit && rnorm > target; ++it) {
    A.multiply(p.data(), Ap.data());
    for (std::int64_t i = 0; i < N; ++i) Ap[i] += c * p[i];
    const double pAp = dot(p, Ap);
    const double alpha = rz / pAp;
    for (std::int64_t i = 0; i < N; ++i) x[i] += alpha * p[i];
    for (std::int64_t i = 0; i < N; ++i) r[i] -= alpha * Ap[i];
    rnorm = norm2(r);
    if (rnorm <= target) { ++it; break; }
    apply_precond(r, z);
    const double rz_next = dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::int64_t i = 0; i < N; ++i) p[i] = z[i] + beta * p[i];
  }

  const bool ok = rnorm <= target;
  if (stats) *stats = {it, rnorm / fnorm, ok};
  if (!ok && !stats) {
    SolverFailure err("shifted_solve: CG did not converge in " + std::to_string(maxit) +
                      " iterations; achieved relative residual " +
                      std::to_string(rnorm / fnorm));
    err.achieved_residual = rnorm / fnorm;
    throw err;
  }
  return x;
}

}  // namespace fracpow

#endif  // FRACPOW_CG_HPP
