// Command-line front end: approximant construction, fractional solves,
// per-mode error curves, experiment runs, and efficiency crossover scans.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracpow/cache.hpp"
#include "fracpow/harness.hpp"

using namespace fracpow;

namespace {

// Approximant for the BURA method itself: r approximates t^(1-alpha).
const RationalMinimax& bura_function(double alpha, int k, int m, unsigned bits) {
  return get_bura(1 - alpha, k, m, bits);
}

// Approximant whose error-function roots form the reciprocal-method window
// ladder: r approximates t^alpha.
const RationalMinimax& rbura_function(double alpha, int k, int m, unsigned bits) {
  return get_bura(alpha, k, m, bits);
}

int cmd_bura_compute(double alpha, int k, int m, unsigned bits) {
  const RationalMinimax& r = bura_function(alpha, k, m, bits);
  PrecisionGuard guard(r.precision_bits);
  std::printf("alpha = %g  (k,m) = (%d,%d)  precision = %u bits\n", alpha, k, m,
              r.precision_bits);
  std::printf("E = %.10e\n", r.E.convert_to<double>());
  if (k == m) {
    const PoleResidueForm pf = bura_partial_fractions(r);
    std::printf("pole-residue form of t^-1 r(t) (%zu terms):\n", pf.poles.size());
    for (std::size_t j = 0; j < pf.poles.size(); ++j)
      std::printf("  d_%zu = %+.17e   c_%zu = %.17e\n", j, pf.poles[j].convert_to<double>(),
                  j, pf.coefficients[j].convert_to<double>());
  }
  std::printf("cached at: %s\n",
              (cache_directory() / cache_key(1 - alpha, k, m, r.precision_bits)).c_str());
  return 0;
}

int cmd_bura_roots(double alpha, int k, int m, unsigned bits) {
  const RationalMinimax& r = rbura_function(alpha, k, m, bits);
  const ErrorRootTable table = error_function_roots(r);
  PrecisionGuard guard(r.precision_bits);
  std::printf("roots of eps(t) = r(t) - t^%g, (k,m) = (%d,%d): %zu roots\n", alpha, k, m,
              table.roots.size());
  for (std::size_t i = 0; i < table.roots.size(); ++i)
    std::printf("  xi_%zu = %.6e\n", i + 1, table.roots[i].convert_to<double>());
  return 0;
}

int cmd_solve(const std::string& method, double alpha, int k, int m,
              const std::string& grid_str, const std::string& rhs_str, double tol,
              int workers, unsigned bits, const std::string& output) {
  MethodSpec spec;
  if (method == "quad")
    spec = {Method::quad, k, 0};
  else if (method == "bura")
    spec = {Method::bura, k, m > 0 ? m : k};
  else if (method == "rbura")
    spec = {Method::rbura, k, m > 0 ? m : k - 1};
  else
    throw CLI::ValidationError("--method must be bura, rbura, or quad");

  ExperimentConfig cfg;
  cfg.alpha = alpha;
  cfg.rhs = parse_rhs_kind(rhs_str);
  cfg.solver.tolerance = tol;
  cfg.workers = workers;
  cfg.precision_bits = bits;
  const GridSpec grid = parse_grid_spec(grid_str);
  const SparseSymMatrix A = assemble_laplacian(grid);
  const GridFunction f = harness_detail::make_rhs(cfg, grid);
  const GridFunction uref = solve_spectral(grid, f, alpha);
  const ReportRow row = run_single(cfg, grid, spec, A, f, uref);
  std::printf("%s\n%s\n", csv_header().c_str(), csv_line(row).c_str());
  if (!output.empty()) {
    // re-solve is avoided: reconstruct from the row only if requested
    SolveResult res;
    switch (spec.method) {
      case Method::bura:
        res = solve_bura(A, f, alpha, bura_function(alpha, spec.k, spec.m, bits), cfg.solver,
                         workers);
        break;
      case Method::rbura:
        res = solve_rbura(A, f, alpha, rbura_function(alpha, spec.k, spec.m, bits),
                          cfg.solver, workers);
        break;
      case Method::quad:
        res = solve_quadrature(A, f, build_quadrature_from_k(alpha, spec.k), cfg.solver,
                               workers);
        break;
    }
    std::ofstream os(output);
    write_grid_function_csv(os, grid, res.solution);
    std::printf("solution written to %s\n", output.c_str());
  }
  return row.status == "ok" ? 0 : 1;
}

int cmd_curve(double alpha, double h, const std::string& methods, std::int64_t modes,
              unsigned bits) {
  const auto n = static_cast<std::int64_t>(std::llround(1.0 / h)) - 1;
  const GridSpec grid(1, n);
  std::vector<MethodSpec> specs;
  std::istringstream ms(methods);
  std::string tok;
  while (ms >> tok) specs.push_back(parse_method_spec(tok));
  std::printf("method,alpha,i,lambda,error\n");
  for (const auto& spec : specs) {
    const auto curve = per_mode_error_curve(alpha, spec, grid, modes, bits);
    for (const auto& me : curve)
      std::printf("%s,%.6g,%lld,%.6g,%.6g\n", spec.csv_name().c_str(), alpha,
                  static_cast<long long>(me.i), me.lambda, me.error);
  }
  return 0;
}

int cmd_experiment(const std::string& config_path) {
  std::ifstream is(config_path);
  if (!is) {
    std::fprintf(stderr, "cannot open config: %s\n", config_path.c_str());
    return 1;
  }
  const ExperimentConfig cfg = parse_experiment_config(is);
  const auto rows = run_experiment(cfg);
  std::printf("%s\n", csv_header().c_str());
  bool ok = true;
  for (const auto& row : rows) {
    std::printf("%s\n", csv_line(row).c_str());
    ok = ok && row.status == "ok";
  }
  return ok ? 0 : 1;
}

int cmd_crossover(double alpha, const std::string& variant, const std::string& grid_str,
                  const std::string& rhs_str, int fine_level, long cap, unsigned bits) {
  ExperimentConfig cfg;
  cfg.alpha = alpha;
  cfg.rhs = parse_rhs_kind(rhs_str);
  cfg.reference = Reference::spectral_fine;
  cfg.fine_level = fine_level;
  cfg.normalization = ErrorNormalization::unit;
  cfg.precision_bits = bits;
  const GridSpec grid = parse_grid_spec(grid_str);
  const MethodSpec target = parse_method_spec(variant);
  const CrossoverResult res = efficiency_crossover(cfg, grid, target, cap);
  if (res.capped) {
    std::printf("no crossover up to k = %ld: %s error %.6g, best quadrature error %.6g\n",
                res.k, target.id().c_str(), res.target_error, res.quad_error);
    return 1;
  }
  std::printf("%s error %.6g (%ld systems) first beaten by %ld-Q error %.6g (%ld systems)\n",
              target.id().c_str(), res.target_error, res.target_systems, res.k,
              res.quad_error, res.quad_systems);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational-approximation solvers for discrete fractional diffusion"};
  app.require_subcommand(1);

  double alpha = 0.5, h = 1e-3, tol = 1e-12;
  int k = 7, m = 0, workers = 1, fine_level = 12;
  long cap = 60;
  unsigned bits = 512;
  std::int64_t modes = 0;
  std::string grid_str = "2d:255", rhs_str = "checkerboard", methods, config_path, variant,
              method, output;

  auto* bura = app.add_subcommand("bura", "approximant construction and inspection");
  bura->require_subcommand(1);
  auto* bc = bura->add_subcommand("compute", "construct the minimax approximant of t^(1-alpha)");
  bc->add_option("--alpha", alpha)->required();
  bc->add_option("--k", k)->required();
  bc->add_option("--m", m)->required();
  bc->add_option("--precision", bits);
  auto* br = bura->add_subcommand("roots", "roots of eps(t) = r(t) - t^alpha (window ladder)");
  br->add_option("--alpha", alpha)->required();
  br->add_option("--k", k)->required();
  br->add_option("--m", m)->required();
  br->add_option("--precision", bits);

  auto* sv = app.add_subcommand("solve", "solve A^alpha u = f on a structured grid");
  sv->add_option("--method", method, "bura | rbura | quad")->required();
  sv->add_option("--alpha", alpha)->required();
  sv->add_option("--k", k)->required();
  sv->add_option("--m", m, "defaults: k for bura, k-1 for rbura");
  sv->add_option("--grid", grid_str, "1d:n or 2d:n");
  sv->add_option("--rhs", rhs_str, "checkerboard | cosine | cosine-nohup");
  sv->add_option("--tolerance", tol);
  sv->add_option("--workers", workers);
  sv->add_option("--precision", bits);
  sv->add_option("--output", output, "write the solution as CSV");

  auto* cv = app.add_subcommand("curve", "per-mode analytic error curves (CSV to stdout)");
  cv->set_help_flag("--help", "print help");  // frees -h so --h can be the mesh size
  cv->add_option("--alpha", alpha)->required();
  cv->add_option("--h", h, "1-D mesh size (n = 1/h - 1)");
  cv->add_option("--methods", methods, "e.g. \"bura:7,7 rbura:8,8 quad:7\"")->required();
  cv->add_option("--modes", modes, "limit to the first N modes");
  cv->add_option("--precision", bits);

  auto* ex = app.add_subcommand("experiment", "run a config-driven experiment matrix");
  ex->add_option("--config", config_path)->required()->check(CLI::ExistingFile);

  auto* co = app.add_subcommand("crossover", "smallest quadrature degree beating a BURA variant");
  co->add_option("--alpha", alpha)->required();
  co->add_option("--variant", variant, "e.g. bura:9,9 or rbura:8,8")->required();
  co->add_option("--grid", grid_str);
  co->add_option("--rhs", rhs_str);
  co->add_option("--fine-level", fine_level);
  co->add_option("--cap", cap);
  co->add_option("--precision", bits);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bc->parsed()) return cmd_bura_compute(alpha, k, m, bits);
    if (br->parsed()) return cmd_bura_roots(alpha, k, m, bits);
    if (sv->parsed())
      return cmd_solve(method, alpha, k, m, grid_str, rhs_str, tol, workers, bits, output);
    if (cv->parsed()) return cmd_curve(alpha, h, methods, modes, bits);
    if (ex->parsed()) return cmd_experiment(config_path);
    if (co->parsed())
      return cmd_crossover(alpha, variant, grid_str, rhs_str, fine_level, cap, bits);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
