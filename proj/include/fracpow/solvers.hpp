#ifndef FRACPOW_SOLVERS_HPP
#define FRACPOW_SOLVERS_HPP

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fracpow/cg.hpp"
#include "fracpow/grid.hpp"
#include "fracpow/partial_fraction.hpp"
#include "fracpow/quadrature.hpp"
#include "fracpow/remez.hpp"
#include "fracpow/sparse.hpp"

namespace fracpow {

struct SolveResult {
  GridFunction solution;
  long systems_solved = 0;
  std::vector<std::int64_t> iterations;  // per shift, ascending-shift order
  double seconds = 0;
};

namespace solver_detail {

struct ShiftedTask {
  double shift = 0;   // c in (A + cI)x = f
  double weight = 0;  // multiplier applied to the solution
};

/// Solve all shifted systems on `workers` threads, then accumulate the
/// weighted sum in fixed task order. Bit-identical for any worker count.
inline SolveResult run_tasks(const SparseSymMatrix& A, const GridFunction& f,
                             const std::vector<ShiftedTask>& tasks,
                             const ShiftedSolveConfig& cfg, int workers) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t T = tasks.size();
  std::vector<GridFunction> partial(T);
  std::vector<ShiftedSolveStats> stats(T);
  std::vector<std::string> failures(T);

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < T; i = next.fetch_add(1)) {
      try {
        partial[i] = shifted_solve(A, tasks[i].shift, f, cfg, &stats[i]);
        if (!stats[i].converged)
          failures[i] = "shift index " + std::to_string(i) + " (c=" +
                        std::to_string(tasks[i].shift) + "): CG stalled at residual " +
                        std::to_string(stats[i].relative_residual);
      } catch (const std::exception& e) {
        failures[i] = "shift index " + std::to_string(i) + ": " + e.what();
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (const auto& msg : failures)
    if (!msg.empty()) throw SolverFailure("shifted system failed: " + msg);

  SolveResult result;
  result.solution.assign(f.size(), 0.0);
  for (std::size_t i = 0; i < T; ++i) {
    const double w = tasks[i].weight;
    for (std::size_t p = 0; p < f.size(); ++p) result.solution[p] += w * partial[i][p];
    result.iterations.push_back(stats[i].iterations);
  }
  result.systems_solved = static_cast<long>(T);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace solver_detail

/// BURA solve of A^alpha u = f with r approximating t^(1-alpha) on [0,1]:
///   u = C^(1-alpha) * sum_j c_j (A - C d_j I)^{-1} f,   C = |A|_inf.
/// Poles d_j <= 0, so every shift -C d_j is >= 0.
inline SolveResult solve_bura(const SparseSymMatrix& A, const GridFunction& f, double alpha,
                              const RationalMinimax& r, const ShiftedSolveConfig& cfg,
                              int workers = 1) {
  if (std::abs(r.beta - (1 - alpha)) > 1e-12)
    throw std::invalid_argument("solve_bura: approximant exponent must be 1-alpha");
  const double C = matrix_inf_norm(A);
  const PoleResidueForm pf = bura_partial_fractions(r);
  std::vector<solver_detail::ShiftedTask> tasks;
  const double outer = std::pow(C, 1 - alpha);
  for (std::size_t j = 0; j < pf.poles.size(); ++j)
    tasks.push_back({-C * pf.poles[j].convert_to<double>(),
                     outer * pf.coefficients[j].convert_to<double>()});
  return solver_detail::run_tasks(A, f, tasks, cfg, workers);
}

/// R-BURA solve with r approximating t^alpha on [0,1]:
///   u = C^(-alpha) [ b0 f + sum_j e_j C (A - C z_j I)^{-1} f ],
/// where z_j are the numerator roots of r and b0 is present iff deg num = deg den.
inline SolveResult solve_rbura(const SparseSymMatrix& A, const GridFunction& f, double alpha,
                               const RationalMinimax& r, const ShiftedSolveConfig& cfg,
                               int workers = 1) {
  if (std::abs(r.beta - alpha) > 1e-12)
    throw std::invalid_argument("solve_rbura: approximant exponent must be alpha");
  const double C = matrix_inf_norm(A);
  const PoleResidueForm pf = reciprocal_partial_fractions(r);
  const double outer = std::pow(C, -alpha);
  std::vector<solver_detail::ShiftedTask> tasks;
  for (std::size_t j = 0; j < pf.poles.size(); ++j)
    tasks.push_back({-C * pf.poles[j].convert_to<double>(),
                     outer * C * pf.coefficients[j].convert_to<double>()});
  SolveResult result = solver_detail::run_tasks(A, f, tasks, cfg, workers);
  if (pf.has_constant) {
    const double b0 = outer * pf.constant.convert_to<double>();
    for (std::size_t p = 0; p < f.size(); ++p) result.solution[p] += b0 * f[p];
  }
  return result;
}

/// Sinc-quadrature solve: u = sum_l w_l (A + s_l I)^{-1} f over the scheme.
inline SolveResult solve_quadrature(const SparseSymMatrix& A, const GridFunction& f,
                                    const QuadratureScheme& scheme,
                                    const ShiftedSolveConfig& cfg, int workers = 1) {
  std::vector<solver_detail::ShiftedTask> tasks;
  for (std::size_t j = 0; j < scheme.shifts.size(); ++j)
    tasks.push_back({scheme.shifts[j], scheme.weights[j]});
  return solver_detail::run_tasks(A, f, tasks, cfg, workers);
}

/// Scalar symbols of the three methods: the value s(lambda) such that the
/// method maps an eigenvector with eigenvalue lambda to s(lambda) times it.
/// Evaluated in extended precision, returned as double.
inline double bura_symbol(double alpha, const RationalMinimax& r, double C, double lambda) {
  PrecisionGuard guard(r.precision_bits);
  const BigReal mu = BigReal(lambda) / BigReal(C);
  const BigReal val = pow(BigReal(C), BigReal(-alpha)) * rational_eval_big(r, mu) / mu;
  return val.convert_to<double>();
}

inline double rbura_symbol(double alpha, const RationalMinimax& r, double C, double lambda) {
  PrecisionGuard guard(r.precision_bits);
  const BigReal mu = BigReal(lambda) / BigReal(C);
  const BigReal val = pow(BigReal(C), BigReal(-alpha)) / rational_eval_big(r, mu);
  return val.convert_to<double>();
}

inline double quadrature_symbol(const QuadratureScheme& scheme, double lambda) {
  return scheme.eval(lambda);
}

}  // namespace fracpow

#endif  // FRACPOW_SOLVERS_HPP
