#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fracpow/harness.hpp"

using namespace fracpow;

TEST(Harness, ParseMethodSpec) {
  MethodSpec b = parse_method_spec("bura:9,9");
  EXPECT_EQ(b.method, Method::bura);
  EXPECT_EQ(b.k, 9);
  EXPECT_EQ(b.m, 9);
  EXPECT_EQ(b.id(), "(9,9)-BURA");
  MethodSpec r = parse_method_spec("rbura:8,7");
  EXPECT_EQ(r.method, Method::rbura);
  EXPECT_EQ(r.id(), "(8,7)-R-BURA");
  MethodSpec q = parse_method_spec("quad:9");
  EXPECT_EQ(q.method, Method::quad);
  EXPECT_EQ(q.id(), "9-Q");
  EXPECT_THROW(parse_method_spec("bura:9"), std::invalid_argument);
  EXPECT_THROW(parse_method_spec("quad:9,9"), std::invalid_argument);
  EXPECT_THROW(parse_method_spec("pade:3,3"), std::invalid_argument);
  EXPECT_THROW(parse_method_spec("bura"), std::invalid_argument);
}

TEST(Harness, ParseGridSpec) {
  GridSpec g = parse_grid_spec("2d:255");
  EXPECT_EQ(g.dimension, 2);
  EXPECT_EQ(g.n, 255);
  EXPECT_EQ(parse_grid_spec("1d:999").dimension, 1);
  EXPECT_THROW(parse_grid_spec("3d:10"), std::invalid_argument);
  EXPECT_THROW(parse_grid_spec("255"), std::invalid_argument);
}

TEST(Harness, ParseConfig) {
  std::istringstream is(
      "# comment line\n"
      "alpha = 0.75\n"
      "methods = bura:7,7 rbura:8,8 quad:7\n"
      "grids = 2d:63 2d:127\n"
      "rhs = cosine-nohup\n"
      "reference = spectral-fine\n"
      "normalization = unit\n"
      "fine_level = 10\n"
      "tolerance = 1e-10\n"
      "workers = 2\n");
  ExperimentConfig cfg = parse_experiment_config(is);
  EXPECT_DOUBLE_EQ(cfg.alpha, 0.75);
  ASSERT_EQ(cfg.methods.size(), 3u);
  EXPECT_EQ(cfg.methods[1].method, Method::rbura);
  ASSERT_EQ(cfg.grids.size(), 2u);
  EXPECT_EQ(cfg.grids[1].n, 127);
  EXPECT_EQ(cfg.rhs, RhsKind::cosine_nohup);
  EXPECT_EQ(cfg.reference, Reference::spectral_fine);
  EXPECT_EQ(cfg.normalization, ErrorNormalization::unit);
  EXPECT_EQ(cfg.fine_level, 10);
  EXPECT_DOUBLE_EQ(cfg.solver.tolerance, 1e-10);
  EXPECT_EQ(cfg.workers, 2);

  std::istringstream bad1("alpha = 0.5\nfoo = bar\n");
  EXPECT_THROW(parse_experiment_config(bad1), std::invalid_argument);
  std::istringstream bad2("alpha = 1.5\n");
  EXPECT_THROW(parse_experiment_config(bad2), std::invalid_argument);
  std::istringstream bad3("alpha\n");
  EXPECT_THROW(parse_experiment_config(bad3), std::invalid_argument);
}

TEST(Harness, CsvFormat) {
  EXPECT_EQ(csv_header(), "method,alpha,k,m,h,rhs,l2_rel,linf_rel,systems,seconds,status");
  ReportRow row;
  row.method = "bura";
  row.alpha = 0.25;
  row.k = 9;
  row.m = 9;
  row.h = 1.0 / 256;
  row.rhs = "checkerboard";
  row.l2_rel = 1.23456789e-3;
  row.linf_rel = 4.2e-2;
  row.systems = 10;
  row.seconds = 0.5;
  EXPECT_EQ(csv_line(row),
            "bura,0.25,9,9,0.00390625,checkerboard,0.00123457,0.042,10,0.5,ok");
}

TEST(Harness, GridMatrixNormClosedForm) {
  EXPECT_DOUBLE_EQ(grid_matrix_norm(GridSpec(1, 255)), 4.0 * 256 * 256);
  EXPECT_DOUBLE_EQ(grid_matrix_norm(GridSpec(2, 255)), 8.0 * 256 * 256);
}

TEST(Harness, BoundSummaryValues) {
  GridSpec grid(2, 63);
  BoundSummary b = bound_summary(0.5, 5, grid);
  EXPECT_DOUBLE_EQ(b.C, 8.0 * 64 * 64);
  EXPECT_NEAR(b.lambda1, oracle_eigenvalue(grid, {1, 1}), 1e-12);
  EXPECT_NEAR(b.mu1, b.lambda1 / b.C, 1e-18);
  EXPECT_NEAR(b.E_bura, 2.6896e-4, 1e-7);  // minimax error of t^0.5, degree (5,5)
  EXPECT_NEAR(b.bura_bound, std::pow(b.C, 0.5) * b.E_bura / b.lambda1, 1e-15);
  EXPECT_GT(b.rbura_degenerate_bound, 0.0);
}

TEST(Harness, WindowClassification) {
  // alpha = 0.5, k = 5 on a 2-D n=63 grid: mu1 ~ 6e-4 sits in the second
  // nonnegativity window [xi_4, xi_5] of eps = r - t^0.5
  GridSpec grid(2, 63);
  WindowClassification w = validate_mu1_window(0.5, get_bura(0.5, 5, 5), grid);
  EXPECT_EQ(w.kind, WindowClassification::Kind::valid_window);
  EXPECT_EQ(w.index, 2);
  EXPECT_FALSE(std::isnan(w.applicable_bound));

  // alpha = 0.75, same grid: mu1 falls in the gap (xi_3, xi_4)
  WindowClassification g = validate_mu1_window(0.75, get_bura(0.75, 5, 5), grid);
  EXPECT_EQ(g.kind, WindowClassification::Kind::invalid_gap);
  EXPECT_TRUE(std::isnan(g.applicable_bound));

  // very fine mesh: mu1 = sin^2(pi h/2) drops below xi_1 ~ 1.03e-7,
  // the degenerate regime with bound lambda1^-alpha
  GridSpec fine(2, 8191);
  WindowClassification d = validate_mu1_window(0.5, get_bura(0.5, 5, 5), fine);
  EXPECT_EQ(d.kind, WindowClassification::Kind::degenerate);
  const double lambda1 = oracle_eigenvalue(fine, {1, 1});
  EXPECT_NEAR(d.applicable_bound, std::pow(lambda1, -0.5), 1e-12);

  EXPECT_THROW(validate_mu1_window(0.25, get_bura(0.5, 5, 5), grid), std::invalid_argument);
}

TEST(Harness, PerModeCurveMatchesExperiment) {
  // an eigen rhs experiment row must reproduce the analytic per-mode error
  ExperimentConfig cfg;
  cfg.alpha = 0.5;
  cfg.rhs = RhsKind::eigen;
  cfg.rhs_eigen_index = {4, 1};
  GridSpec grid(1, 127);
  SparseSymMatrix A = assemble_laplacian(grid);
  GridFunction f = harness_detail::make_rhs(cfg, grid);
  GridFunction uref = solve_spectral(grid, f, cfg.alpha);
  MethodSpec spec = parse_method_spec("bura:5,5");
  ReportRow row = run_single(cfg, grid, spec, A, f, uref);
  ASSERT_EQ(row.status, "ok");
  auto curve = per_mode_error_curve(cfg.alpha, spec, grid, 4);
  ASSERT_EQ(curve.size(), 4u);
  EXPECT_NEAR(row.l2_rel, curve[3].error, 1e-11);
}

TEST(Harness, RunExperimentEmitsCsv) {
  const auto dir = std::filesystem::temp_directory_path() / "fracpow-exp-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ExperimentConfig cfg;
  cfg.alpha = 0.5;
  cfg.methods = {parse_method_spec("quad:5"), parse_method_spec("bura:5,5")};
  cfg.grids = {GridSpec(2, 15), GridSpec(2, 31)};
  cfg.rhs = RhsKind::checkerboard;
  cfg.output_dir = dir.string();
  auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].method, "quad");   // config order preserved
  EXPECT_EQ(rows[1].method, "bura");
  EXPECT_DOUBLE_EQ(rows[2].h, 1.0 / 32);
  for (const auto& row : rows) EXPECT_EQ(row.status, "ok");
  int csvs = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ifstream is(e.path());
    std::string header;
    std::getline(is, header);
    EXPECT_EQ(header, csv_header());
    ++csvs;
  }
  EXPECT_EQ(csvs, 2);
  std::filesystem::remove_all(dir);
}

TEST(Harness, FailedRowReportsStatus) {
  ExperimentConfig cfg;
  cfg.alpha = 0.5;
  cfg.solver.max_iterations = 1;
  GridSpec grid(2, 31);
  SparseSymMatrix A = assemble_laplacian(grid);
  GridFunction f = rhs_generate(grid, RhsKind::checkerboard);
  GridFunction uref = solve_spectral(grid, f, cfg.alpha);
  ReportRow row = run_single(cfg, grid, parse_method_spec("bura:5,5"), A, f, uref);
  EXPECT_NE(row.status, "ok");
  EXPECT_TRUE(std::isnan(row.l2_rel));
}

TEST(Harness, CrossoverOnSmallGrid) {
  // sanity only: the scan terminates and quadrature eventually wins
  ExperimentConfig cfg;
  cfg.alpha = 0.5;
  cfg.rhs = RhsKind::checkerboard;
  GridSpec grid(2, 63);
  CrossoverResult res = efficiency_crossover(cfg, grid, parse_method_spec("bura:5,5"), 40);
  EXPECT_FALSE(res.capped);
  EXPECT_GT(res.k, 0);
  EXPECT_LT(res.quad_error, res.target_error);
  EXPECT_EQ(res.target_systems, 6);
  EXPECT_THROW(efficiency_crossover(cfg, grid, parse_method_spec("quad:5"), 40),
               std::invalid_argument);
}
