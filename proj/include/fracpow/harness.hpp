#ifndef FRACPOW_HARNESS_HPP
#define FRACPOW_HARNESS_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracpow/cache.hpp"
#include "fracpow/cg.hpp"
#include "fracpow/eigen_oracle.hpp"
#include "fracpow/error_roots.hpp"
#include "fracpow/grid.hpp"
#include "fracpow/quadrature.hpp"
#include "fracpow/remez.hpp"
#include "fracpow/solvers.hpp"
#include "fracpow/sparse.hpp"
#include "fracpow/spectral.hpp"

namespace fracpow {

enum class Method { bura, rbura, quad };

struct MethodSpec {
  Method method = Method::bura;
  int k = 0;
  int m = 0;  // unused for quad

  std::string id() const {
    char buf[48];
    switch (method) {
      case Method::bura: std::snprintf(buf, sizeof(buf), "(%d,%d)-BURA", k, m); break;
      case Method::rbura: std::snprintf(buf, sizeof(buf), "(%d,%d)-R-BURA", k, m); break;
      case Method::quad: std::snprintf(buf, sizeof(buf), "%d-Q", k); break;
    }
    return buf;
  }

  std::string csv_name() const {
    switch (method) {
      case Method::bura: return "bura";
      case Method::rbura: return "rbura";
      default: return "quad";
    }
  }
};

/// Parse "bura:9,9", "rbura:8,7", or "quad:9".
inline MethodSpec parse_method_spec(const std::string& s) {
  MethodSpec spec;
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("method spec needs the form name:k[,m]: " + s);
  const std::string name = s.substr(0, colon);
  const std::string args = s.substr(colon + 1);
  if (name == "bura") spec.method = Method::bura;
  else if (name == "rbura") spec.method = Method::rbura;
  else if (name == "quad") spec.method = Method::quad;
  else throw std::invalid_argument("unknown method: " + name);
  const auto comma = args.find(',');
  spec.k = std::stoi(args.substr(0, comma));
  if (spec.method == Method::quad) {
    if (comma != std::string::npos)
      throw std::invalid_argument("quad takes a single degree: " + s);
  } else {
    if (comma == std::string::npos)
      throw std::invalid_argument(name + " needs k,m: " + s);
    spec.m = std::stoi(args.substr(comma + 1));
  }
  if (spec.k < 1 || (spec.method != Method::quad && spec.m < 1))
    throw std::invalid_argument("method degrees must be positive: " + s);
  return spec;
}

enum class Reference { spectral_oracle, quadrature_same, spectral_fine };
// rhs: divide by ||f||; reference: divide by ||u_ref||; unit: divide by
// ||1|| = sqrt(N) in l2 and by 1 in max norm (the amplitude of both built-in
// right-hand sides).
enum class ErrorNormalization { rhs, reference, unit };

struct ExperimentConfig {
  double alpha = 0.5;
  std::vector<MethodSpec> methods;
  std::vector<GridSpec> grids;
  RhsKind rhs = RhsKind::checkerboard;
  EigenIndex rhs_eigen_index{1, 1};  // when rhs == eigen
  ShiftedSolveConfig solver;
  int workers = 1;
  Reference reference = Reference::spectral_oracle;
  int fine_level = 12;  // reference mesh h = 2^-fine_level for spectral_fine
  ErrorNormalization normalization = ErrorNormalization::rhs;
  std::string output_dir;
  unsigned precision_bits = 512;
};

struct ReportRow {
  std::string method;
  double alpha = 0;
  int k = 0;
  int m = 0;
  double h = 0;
  std::string rhs;
  double l2_rel = 0;
  double linf_rel = 0;
  long systems = 0;
  double seconds = 0;
  std::string status = "ok";
};

inline std::string rhs_name(RhsKind kind) {
  switch (kind) {
    case RhsKind::checkerboard: return "checkerboard";
    case RhsKind::cosine: return "cosine";
    case RhsKind::cosine_nohup: return "cosine-nohup";
    case RhsKind::eigen: return "eigen";
    default: return "custom";
  }
}

// ---------------------------------------------------------------------------
// Approximant selection and double-precision method symbols
// ---------------------------------------------------------------------------

/// Closed-form |A|_inf of the assembled Laplacian: 4/h^2 in 1-D, 8/h^2 in 2-D.
inline double grid_matrix_norm(const GridSpec& grid) {
  const double h = grid.h();
  return grid.dimension == 1 ? 4.0 / (h * h) : 8.0 / (h * h);
}

/// The approximant a method spec needs: t^(1-alpha) for BURA, t^alpha for
/// R-BURA.
inline const RationalMinimax& approximant_for(const MethodSpec& spec, double alpha,
                                              unsigned bits = 512) {
  const double beta = spec.method == Method::bura ? 1 - alpha : alpha;
  return get_bura(beta, spec.k, spec.m, bits);
}

/// Double-precision spectral symbol of a method as the discrete solver
/// realizes it: the pole-residue sum with coefficients rounded to double,
/// i.e. exactly the map an eigenvector undergoes (up to CG tolerance).
inline std::function<double(double)> method_symbol(const MethodSpec& spec, double alpha,
                                                   double C, unsigned bits = 512) {
  if (spec.method == Method::quad) {
    QuadratureScheme scheme = build_quadrature_from_k(alpha, spec.k);
    return [scheme](double lambda) { return scheme.eval(lambda); };
  }
  const RationalMinimax& r = approximant_for(spec, alpha, bits);
  struct Term { double pole, weight; };
  std::vector<Term> terms;
  double constant = 0;
  if (spec.method == Method::bura) {
    const PoleResidueForm pf = bura_partial_fractions(r);
    const double outer = std::pow(C, 1 - alpha);
    for (std::size_t j = 0; j < pf.poles.size(); ++j)
      terms.push_back({C * pf.poles[j].convert_to<double>(),
                       outer * pf.coefficients[j].convert_to<double>()});
  } else {
    const PoleResidueForm pf = reciprocal_partial_fractions(r);
    const double outer = std::pow(C, -alpha);
    if (pf.has_constant) constant = outer * pf.constant.convert_to<double>();
    for (std::size_t j = 0; j < pf.poles.size(); ++j)
      terms.push_back({C * pf.poles[j].convert_to<double>(),
                       outer * C * pf.coefficients[j].convert_to<double>()});
  }
  return [terms, constant](double lambda) {
    double acc = constant;
    for (const auto& t : terms) acc += t.weight / (lambda - t.pole);
    return acc;
  };
}

inline long analytic_system_count(const MethodSpec& spec, double alpha) {
  if (spec.method == Method::quad)
    return build_quadrature_from_k(alpha, spec.k).system_count();
  // BURA solves one system per denominator root plus the zero pole; the
  // reciprocal variant solves one per numerator root.
  return spec.method == Method::bura ? spec.m + 1 : spec.k;
}

// ---------------------------------------------------------------------------
// Per-mode error curves (extended-precision analytic formulas)
// ---------------------------------------------------------------------------

struct ModeError {
  std::int64_t i = 0;
  std::int64_t j = 1;
  double lambda = 0;
  double error = 0;  // |u_method - u| / |f| for f = Psi_{ij}
};

/// Analytic per-mode errors, evaluated in extended precision:
///   BURA:    C^-a |mu^-1 r(mu) - mu^-a|
///   R-BURA:  C^-a |r(mu) - mu^a| / (mu^a r(mu))
///   Q:       |Q_a(lambda) - lambda^-a|
inline std::vector<ModeError> per_mode_error_curve(double alpha, const MethodSpec& spec,
                                                   const GridSpec& grid,
                                                   std::int64_t max_modes = 0,
                                                   unsigned bits = 512) {
  const double C = grid_matrix_norm(grid);
  const std::int64_t count = max_modes > 0 ? std::min<std::int64_t>(max_modes, grid.n) : grid.n;

  std::optional<QuadratureScheme> scheme;
  const RationalMinimax* r = nullptr;
  if (spec.method == Method::quad)
    scheme = build_quadrature_from_k(alpha, spec.k);
  else
    r = &approximant_for(spec, alpha, bits);

  PrecisionGuard guard(r ? r->precision_bits : 256);
  const BigReal a(alpha);
  const BigReal Cb(C);
  std::vector<ModeError> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 1; i <= count; ++i) {
    ModeError me;
    me.i = i;
    me.lambda = oracle_eigenvalue(grid, {i, 1});
    const BigReal lambda(me.lambda);
    BigReal err;
    if (spec.method == Method::quad) {
      BigReal q(0);
      for (std::size_t t = 0; t < scheme->shifts.size(); ++t)
        q += BigReal(scheme->weights[t]) / (lambda + BigReal(scheme->shifts[t]));
      err = abs(q - pow(lambda, -a));
    } else {
      const BigReal mu = lambda / Cb;
      const BigReal rv = rational_eval_big(*r, mu);
      if (spec.method == Method::bura)
        err = pow(Cb, -a) * abs(rv / mu - pow(mu, -a));
      else
        err = pow(Cb, -a) * abs(rv - pow(mu, a)) / (pow(mu, a) * rv);
    }
    me.error = err.convert_to<double>();
    out.push_back(me);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theoretical bounds and the mu_1 window ladder
// ---------------------------------------------------------------------------

struct BoundSummary {
  double C = 0;
  double lambda1 = 0;
  double mu1 = 0;
  double E_bura = 0;          // minimax error of t^(1-alpha), degree (k,k)
  double E_rbura = 0;         // minimax error of t^alpha, degree (k,k)
  double bura_bound = 0;      // C^(1-alpha) E_bura / lambda1
  double rbura_window_bound = 0;    // C^alpha E_rbura / lambda1^(2 alpha)
  double rbura_degenerate_bound = 0;  // lambda1^(-alpha)
  double bura_asymptotic = 0;   // 4^(2-alpha) sin(pi alpha) C^(1-alpha)/lambda1 e^(-2 pi sqrt((1-a)k))
  double quad_asymptotic = 0;   // (2 sin(pi alpha)/pi) (1/alpha + 1/((1-alpha) lambda1)) e^(-pi^2/(2k'))
};

inline BoundSummary bound_summary(double alpha, int k, const GridSpec& grid,
                                  unsigned bits = 512) {
  BoundSummary b;
  b.C = grid_matrix_norm(grid);
  b.lambda1 = oracle_eigenvalue(grid, {1, 1});
  b.mu1 = b.lambda1 / b.C;
  b.E_bura = get_bura(1 - alpha, k, k, bits).E.convert_to<double>();
  b.E_rbura = get_bura(alpha, k, k, bits).E.convert_to<double>();
  b.bura_bound = std::pow(b.C, 1 - alpha) * b.E_bura / b.lambda1;
  b.rbura_window_bound = std::pow(b.C, alpha) * b.E_rbura / std::pow(b.lambda1, 2 * alpha);
  b.rbura_degenerate_bound = std::pow(b.lambda1, -alpha);
  b.bura_asymptotic = std::pow(4.0, 2 - alpha) * std::sin(M_PI * alpha) *
                      std::pow(b.C, 1 - alpha) / b.lambda1 *
                      std::exp(-2 * M_PI * std::sqrt((1 - alpha) * k));
  const double kprime = M_PI / (2 * std::sqrt(alpha * (1 - alpha) * k));
  b.quad_asymptotic = (2 * std::sin(M_PI * alpha) / M_PI) *
                      (1 / alpha + 1 / ((1 - alpha) * b.lambda1)) *
                      std::exp(-M_PI * M_PI / (2 * kprime));
  return b;
}

struct WindowClassification {
  enum class Kind { degenerate, valid_window, invalid_gap };
  Kind kind = Kind::degenerate;
  int index = 0;          // which window/gap (1-based); 0 for degenerate
  bool near_boundary = false;  // mu1 within 1% of a ladder root
  double mu1 = 0;
  double applicable_bound = 0;  // NaN in an invalid gap
};

/// Locate mu_1 = lambda_1 / C against the sign ladder of eps = r - t^beta
/// for an approximant of t^alpha. eps >= 0 exactly on [0, xi_1] and on
/// [xi_2i, xi_2i+1]; those are the regimes where the reciprocal-method error
/// bound applies.
inline WindowClassification validate_mu1_window(double alpha, const RationalMinimax& r,
                                                const GridSpec& grid) {
  if (std::abs(r.beta - alpha) > 1e-12)
    throw std::invalid_argument("validate_mu1_window: approximant exponent must be alpha");
  const ErrorRootTable roots = error_function_roots(r);
  const double C = grid_matrix_norm(grid);
  const double lambda1 = oracle_eigenvalue(grid, {1, 1});

  WindowClassification w;
  w.mu1 = lambda1 / C;
  std::size_t below = 0;
  {
    PrecisionGuard guard(r.precision_bits);
    const BigReal mu1(w.mu1);
    for (const auto& xi : roots.roots) {
      if (xi < mu1) ++below;
      if (abs(xi - mu1) <= BigReal(0.01) * xi) w.near_boundary = true;
    }
  }
  if (below == 0) {
    w.kind = WindowClassification::Kind::degenerate;
    w.index = 0;
    w.applicable_bound = std::pow(lambda1, -alpha);
  } else if (below % 2 == 0) {
    // past an even number of sign changes: eps >= 0 again
    w.kind = WindowClassification::Kind::valid_window;
    w.index = static_cast<int>(below / 2);
    const double E = r.E.convert_to<double>();
    w.applicable_bound = std::pow(C, alpha) * E / std::pow(lambda1, 2 * alpha);
  } else {
    w.kind = WindowClassification::Kind::invalid_gap;
    w.index = static_cast<int>((below + 1) / 2);
    w.applicable_bound = std::nan("");
  }
  return w;
}

// ---------------------------------------------------------------------------
// Experiment runner
// ---------------------------------------------------------------------------

namespace harness_detail {

inline GridFunction make_rhs(const ExperimentConfig& cfg, const GridSpec& grid) {
  if (cfg.rhs == RhsKind::eigen) return eigen_oracle(grid, cfg.rhs_eigen_index).psi;
  return rhs_generate(grid, cfg.rhs);
}

/// Reference solution on `grid` for the configured convention.
inline GridFunction reference_solution(const ExperimentConfig& cfg, const GridSpec& grid,
                                       const GridFunction& f) {
  switch (cfg.reference) {
    case Reference::spectral_oracle:
      return solve_spectral(grid, f, cfg.alpha);
    case Reference::quadrature_same: {
      const SparseSymMatrix A = assemble_laplacian(grid);
      const QuadratureScheme scheme = build_quadrature_from_kprime(cfg.alpha, 1.0 / 3.0);
      return solve_quadrature(A, f, scheme, cfg.solver, cfg.workers).solution;
    }
    case Reference::spectral_fine: {
      const std::int64_t nf = (1LL << cfg.fine_level) - 1;
      if ((nf + 1) % (grid.n + 1) != 0)
        throw std::invalid_argument("spectral_fine reference requires nested grids");
      const GridSpec fine(grid.dimension, nf);
      const GridFunction ff = cfg.rhs == RhsKind::eigen
                                  ? eigen_oracle(fine, cfg.rhs_eigen_index).psi
                                  : rhs_generate(fine, cfg.rhs);
      GridFunction uf = solve_spectral(fine, ff, cfg.alpha);
      return restrict_nested(fine, uf, grid);
    }
  }
  throw std::logic_error("unreachable");
}

inline double fmt_norm(const ExperimentConfig& cfg, const GridFunction& f,
                       const GridFunction& uref, bool inf_norm) {
  if (cfg.normalization == ErrorNormalization::unit)
    return inf_norm ? 1.0 : std::sqrt(static_cast<double>(f.size()));
  const GridFunction& base = cfg.normalization == ErrorNormalization::rhs ? f : uref;
  return inf_norm ? norm_inf(base) : norm2(base);
}

}  // namespace harness_detail

inline ReportRow run_single(const ExperimentConfig& cfg, const GridSpec& grid,
                            const MethodSpec& spec, const SparseSymMatrix& A,
                            const GridFunction& f, const GridFunction& uref) {
  ReportRow row;
  row.method = spec.csv_name();
  row.alpha = cfg.alpha;
  row.k = spec.k;
  row.m = spec.method == Method::quad ? 0 : spec.m;
  row.h = grid.h();
  row.rhs = rhs_name(cfg.rhs);
  try {
    SolveResult res;
    switch (spec.method) {
      case Method::bura:
        res = solve_bura(A, f, cfg.alpha, approximant_for(spec, cfg.alpha, cfg.precision_bits),
                         cfg.solver, cfg.workers);
        break;
      case Method::rbura:
        res = solve_rbura(A, f, cfg.alpha, approximant_for(spec, cfg.alpha, cfg.precision_bits),
                          cfg.solver, cfg.workers);
        break;
      case Method::quad:
        res = solve_quadrature(A, f, build_quadrature_from_k(cfg.alpha, spec.k), cfg.solver,
                               cfg.workers);
        break;
    }
    GridFunction diff(f.size());
    for (std::size_t p = 0; p < f.size(); ++p) diff[p] = res.solution[p] - uref[p];
    row.l2_rel = norm2(diff) / harness_detail::fmt_norm(cfg, f, uref, false);
    row.linf_rel = norm_inf(diff) / harness_detail::fmt_norm(cfg, f, uref, true);
    row.systems = res.systems_solved;
    row.seconds = res.seconds;
  } catch (const std::exception& e) {
    row.status = e.what();
    row.l2_rel = row.linf_rel = std::nan("");
  }
  return row;
}

inline std::string csv_header() {
  return "method,alpha,k,m,h,rhs,l2_rel,linf_rel,systems,seconds,status";
}

inline std::string csv_line(const ReportRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%.6g,%d,%d,%.6g,%s,%.6g,%.6g,%ld,%.6g,%s",
                row.method.c_str(), row.alpha, row.k, row.m, row.h, row.rhs.c_str(),
                row.l2_rel, row.linf_rel, row.systems, row.seconds, row.status.c_str());
  return buf;
}

/// Run the full (grid x method) matrix; optionally emit one CSV per grid
/// into cfg.output_dir. Row order is deterministic: grids in config order,
/// methods in config order.
inline std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg) {
  std::vector<ReportRow> rows;
  for (const auto& grid : cfg.grids) {
    const SparseSymMatrix A = assemble_laplacian(grid);
    const GridFunction f = harness_detail::make_rhs(cfg, grid);
    const GridFunction uref = harness_detail::reference_solution(cfg, grid, f);
    std::vector<ReportRow> grid_rows;
    for (const auto& spec : cfg.methods)
      grid_rows.push_back(run_single(cfg, grid, spec, A, f, uref));
    if (!cfg.output_dir.empty()) {
      char name[64];
      std::snprintf(name, sizeof(name), "experiment_a%.4g_%dd_n%lld.csv", cfg.alpha,
                    grid.dimension, static_cast<long long>(grid.n));
      std::ofstream os(cfg.output_dir + "/" + name);
      os << csv_header() << "\n";
      for (const auto& row : grid_rows) os << csv_line(row) << "\n";
    }
    for (auto& row : grid_rows) rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Efficiency crossover (spectral-symbol fast path)
// ---------------------------------------------------------------------------

struct CrossoverResult {
  long k = 0;  // smallest quadrature degree beating the target method
  double target_error = 0;
  double quad_error = 0;  // at the crossover k
  long target_systems = 0;
  long quad_systems = 0;
  bool capped = false;  // scan cap reached without crossover
};

namespace harness_detail {

/// l2 error of a diagonal (symbol) method against a reference grid function,
/// via Parseval in the sine basis: the method maps mode i to symbol(lambda_i)
/// times it, so the error is computable without any linear solves.
inline double symbol_error(const GridSpec& grid, const std::vector<double>& fhat,
                           const std::vector<double>& uref_hat,
                           const std::function<double(double)>& symbol, double norm) {
  double acc = 0;
  if (grid.dimension == 1) {
    for (std::int64_t i = 1; i <= grid.n; ++i) {
      const double d = symbol(oracle_eigenvalue(grid, {i, 1})) * fhat[i - 1] - uref_hat[i - 1];
      acc += d * d;
    }
  } else {
    const double h = grid.h();
    const double s = 4.0 / (h * h);
    std::vector<double> sin2(static_cast<std::size_t>(grid.n) + 1);
    for (std::int64_t i = 1; i <= grid.n; ++i) {
      const double v = std::sin(i * M_PI * h / 2);
      sin2[static_cast<std::size_t>(i)] = v * v;
    }
    std::size_t at = 0;
    for (std::int64_t j = 1; j <= grid.n; ++j)
      for (std::int64_t i = 1; i <= grid.n; ++i, ++at) {
        const double lam = s * (sin2[static_cast<std::size_t>(i)] +
                                sin2[static_cast<std::size_t>(j)]);
        const double d = symbol(lam) * fhat[at] - uref_hat[at];
        acc += d * d;
      }
  }
  return std::sqrt(acc) / norm;
}

}  // namespace harness_detail

/// Smallest quadrature degree whose l2 error beats the given BURA-variant's,
/// both measured against the configured reference. Uses the sine-basis
/// symbol path, so no linear systems are solved during the scan.
inline CrossoverResult efficiency_crossover(const ExperimentConfig& cfg, const GridSpec& grid,
                                            const MethodSpec& target, long scan_cap = 60) {
  if (target.method == Method::quad)
    throw std::invalid_argument("efficiency_crossover: target must be a BURA variant");
  const GridFunction f = harness_detail::make_rhs(cfg, grid);
  const GridFunction uref = harness_detail::reference_solution(cfg, grid, f);
  const std::vector<double> fhat = sine_coefficients(grid, f);
  const std::vector<double> uref_hat = sine_coefficients(grid, uref);
  const double norm = harness_detail::fmt_norm(cfg, f, uref, false);
  const double C = grid_matrix_norm(grid);

  CrossoverResult out;
  out.target_error = harness_detail::symbol_error(
      grid, fhat, uref_hat, method_symbol(target, cfg.alpha, C, cfg.precision_bits), norm);
  out.target_systems = analytic_system_count(target, cfg.alpha);
  for (long k = 1; k <= scan_cap; ++k) {
    const MethodSpec q{Method::quad, static_cast<int>(k), 0};
    const double err = harness_detail::symbol_error(
        grid, fhat, uref_hat, method_symbol(q, cfg.alpha, C), norm);
    if (err < out.target_error) {
      out.k = k;
      out.quad_error = err;
      out.quad_systems = analytic_system_count(q, cfg.alpha);
      return out;
    }
    out.quad_error = err;
  }
  out.k = scan_cap;
  out.quad_systems = analytic_system_count({Method::quad, static_cast<int>(scan_cap), 0},
                                           cfg.alpha);
  out.capped = true;
  return out;
}

// ---------------------------------------------------------------------------
// Flat key-value config files
// ---------------------------------------------------------------------------

/// Parse "1d:999" or "2d:255" into a GridSpec.
inline GridSpec parse_grid_spec(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos || (s.substr(0, colon) != "1d" && s.substr(0, colon) != "2d"))
    throw std::invalid_argument("grid spec needs the form 1d:n or 2d:n: " + s);
  return GridSpec(s[0] == '1' ? 1 : 2, std::stoll(s.substr(colon + 1)));
}

/// Flat key = value format, '#' comments. Keys: alpha, methods, grids, rhs,
/// reference, normalization, fine_level, tolerance, max_iterations, workers,
/// precision, output_dir, eigen_i, eigen_j. List values are whitespace
/// separated.
inline ExperimentConfig parse_experiment_config(std::istream& is) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::istringstream vs(value);
    if (key == "alpha") cfg.alpha = std::stod(value);
    else if (key == "methods") {
      std::string tok;
      while (vs >> tok) cfg.methods.push_back(parse_method_spec(tok));
    } else if (key == "grids") {
      std::string tok;
      while (vs >> tok) cfg.grids.push_back(parse_grid_spec(tok));
    } else if (key == "rhs") cfg.rhs = parse_rhs_kind(value);
    else if (key == "reference") {
      if (value == "spectral-oracle") cfg.reference = Reference::spectral_oracle;
      else if (value == "quadrature-same") cfg.reference = Reference::quadrature_same;
      else if (value == "spectral-fine") cfg.reference = Reference::spectral_fine;
      else throw std::invalid_argument("unknown reference: " + value);
    } else if (key == "normalization") {
      if (value == "rhs") cfg.normalization = ErrorNormalization::rhs;
      else if (value == "reference") cfg.normalization = ErrorNormalization::reference;
      else if (value == "unit") cfg.normalization = ErrorNormalization::unit;
      else throw std::invalid_argument("unknown normalization: " + value);
    } else if (key == "fine_level") cfg.fine_level = std::stoi(value);
    else if (key == "tolerance") cfg.solver.tolerance = std::stod(value);
    else if (key == "max_iterations") cfg.solver.max_iterations = std::stoll(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "precision") cfg.precision_bits = static_cast<unsigned>(std::stoul(value));
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "eigen_i") cfg.rhs_eigen_index.i = std::stoll(value);
    else if (key == "eigen_j") cfg.rhs_eigen_index.j = std::stoll(value);
    else throw std::invalid_argument("unknown config key: " + key);
  }
  if (!(cfg.alpha > 0 && cfg.alpha < 1))
    throw std::invalid_argument("config: alpha must lie in (0,1)");
  return cfg;
}

}  // namespace fracpow

#endif  // FRACPOW_HARNESS_HPP
