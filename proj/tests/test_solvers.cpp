#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fracpow/harness.hpp"

using namespace fracpow;

namespace {

GridFunction random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  GridFunction v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST(Solvers, SystemCountsMatchAnalysis) {
  GridSpec grid(2, 15);
  SparseSymMatrix A = assemble_laplacian(grid);
  GridFunction f = random_vector(static_cast<std::size_t>(grid.size()), 1);
  const double alpha = 0.5;
  // (k,k)-BURA: k+1 systems; (k+1,k+1)-R-BURA: k+1 systems; k-Q: per scheme
  SolveResult b = solve_bura(A, f, alpha, get_bura(1 - alpha, 5, 5), {});
  EXPECT_EQ(b.systems_solved, 6);
  EXPECT_EQ(b.iterations.size(), 6u);
  SolveResult r = solve_rbura(A, f, alpha, get_bura(alpha, 5, 5), {});
  EXPECT_EQ(r.systems_solved, 5);
  SolveResult q = solve_quadrature(A, f, build_quadrature_from_k(alpha, 7), {});
  EXPECT_EQ(q.systems_solved, 9);
  EXPECT_EQ(analytic_system_count({Method::bura, 5, 5}, alpha), 6);
  EXPECT_EQ(analytic_system_count({Method::rbura, 5, 5}, alpha), 5);
  EXPECT_EQ(analytic_system_count({Method::quad, 7, 0}, alpha), 9);
}

TEST(Solvers, RejectsMismatchedExponent) {
  GridSpec grid(1, 15);
  SparseSymMatrix A = assemble_laplacian(grid);
  GridFunction f(15, 1.0);
  EXPECT_THROW(solve_bura(A, f, 0.25, get_bura(0.5, 5, 5), {}), std::invalid_argument);
  EXPECT_THROW(solve_rbura(A, f, 0.25, get_bura(0.5, 5, 5), {}), std::invalid_argument);
}

TEST(Solvers, EigenvectorErrorMatchesSymbol) {
  // for f = Psi_i the measured error must equal the analytic per-mode value
  const double alpha = 0.5;
  GridSpec grid(1, 255);
  SparseSymMatrix A = assemble_laplacian(grid);
  const double C = matrix_inf_norm(A);
  for (std::int64_t i : {1LL, 17LL, 255LL}) {
    EigenPair ep = eigen_oracle(grid, {i, 1});
    const double exact = std::pow(ep.lambda, -alpha);

    SolveResult b = solve_bura(A, ep.psi, alpha, get_bura(1 - alpha, 5, 5), {});
    const double sb = bura_symbol(alpha, get_bura(1 - alpha, 5, 5), C, ep.lambda);
    double eb = 0;
    for (std::size_t p = 0; p < ep.psi.size(); ++p)
      eb += std::pow(b.solution[p] - exact * ep.psi[p], 2);
    EXPECT_NEAR(std::sqrt(eb), std::abs(sb - exact), 1e-11);

    SolveResult r = solve_rbura(A, ep.psi, alpha, get_bura(alpha, 5, 5), {});
    const double sr = rbura_symbol(alpha, get_bura(alpha, 5, 5), C, ep.lambda);
    double er = 0;
    for (std::size_t p = 0; p < ep.psi.size(); ++p)
      er += std::pow(r.solution[p] - exact * ep.psi[p], 2);
    EXPECT_NEAR(std::sqrt(er), std::abs(sr - exact), 1e-11);

    QuadratureScheme scheme = build_quadrature_from_k(alpha, 9);
    SolveResult q = solve_quadrature(A, ep.psi, scheme, {});
    const double sq = quadrature_symbol(scheme, ep.lambda);
    double eq = 0;
    for (std::size_t p = 0; p < ep.psi.size(); ++p)
      eq += std::pow(q.solution[p] - exact * ep.psi[p], 2);
    EXPECT_NEAR(std::sqrt(eq), std::abs(sq - exact), 1e-11);
  }
}

TEST(Solvers, DeterministicAcrossWorkerCounts) {
  GridSpec grid(2, 31);
  SparseSymMatrix A = assemble_laplacian(grid);
  GridFunction f = random_vector(static_cast<std::size_t>(grid.size()), 23);
  const double alpha = 0.25;
  SolveResult w1 = solve_bura(A, f, alpha, get_bura(1 - alpha, 5, 5), {}, 1);
  SolveResult w3 = solve_bura(A, f, alpha, get_bura(1 - alpha, 5, 5), {}, 3);
  ASSERT_EQ(w1.solution.size(), w3.solution.size());
  for (std::size_t p = 0; p < w1.solution.size(); ++p)
    EXPECT_EQ(w1.solution[p], w3.solution[p]);  // bit-identical
  EXPECT_EQ(w1.iterations, w3.iterations);
}

TEST(Solvers, MethodsAgreeWithSpectralOracle) {
  // moderate-degree approximants must land near the exact fractional solve
  GridSpec grid(2, 31);
  SparseSymMatrix A = assemble_laplacian(grid);
  GridFunction f = random_vector(static_cast<std::size_t>(grid.size()), 29);
  const double fn = norm2(f);
  for (double alpha : {0.25, 0.5, 0.75}) {
    GridFunction exact = solve_spectral(grid, f, alpha);
    SolveResult q = solve_quadrature(A, f, build_quadrature_from_kprime(alpha, 1.0 / 3.0), {});
    double err = 0;
    for (std::size_t p = 0; p < f.size(); ++p) err += std::pow(q.solution[p] - exact[p], 2);
    // k' = 1/3 guarantees ~1e-7 relative accuracy
    EXPECT_LT(std::sqrt(err) / fn, 5e-7) << "alpha=" << alpha;
  }
}

TEST(Solvers, PropagatesCgFailure) {
  GridSpec grid(2, 31);
  SparseSymMatrix A = assemble_laplacian(grid);
  GridFunction f = random_vector(static_cast<std::size_t>(grid.size()), 31);
  ShiftedSolveConfig cfg;
  cfg.max_iterations = 1;
  EXPECT_THROW(solve_bura(A, f, 0.5, get_bura(0.5, 5, 5), cfg), SolverFailure);
}
