#ifndef FRACPOW_REMEZ_HPP
#define FRACPOW_REMEZ_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracpow/bigreal.hpp"
#include "fracpow/chebyshev.hpp"
#include "fracpow/linsolve.hpp"

namespace fracpow {

/// Best uniform rational approximant r(t) = P_k(t)/Q_m(t) of t^beta on
/// [0,1], with the alternation data that certifies it. Coefficients are in
/// the Chebyshev basis of [0,1]; the denominator is monic (leading monomial
/// coefficient 1), which pins its highest Chebyshev coefficient to 2^(1-2m).
struct RationalMinimax {
  double beta = 0;
  int k = 0;
  int m = 0;
  unsigned precision_bits = 0;
  std::vector<BigReal> num;  // k+1 Chebyshev coefficients
  std::vector<BigReal> den;  // m+1 Chebyshev coefficients
  BigReal E;                 // achieved sup-norm error
  std::vector<BigReal> extreme_points;  // k+m+2 abscissae, ascending
  std::vector<int> signs;               // sign of r(t)-t^beta at each
};

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigReal rational_eval_big(const RationalMinimax& r, const BigReal& t) {
  return cheb_eval(r.num, t) / cheb_eval(r.den, t);
}

enum class EvalMode { bigreal, double_prec };

/// Chebyshev-Clenshaw evaluation of r at t in [0,1]; double mode rounds the
/// BigReal result.
inline double evaluate(const RationalMinimax& r, double t,
                       EvalMode mode = EvalMode::double_prec) {
  (void)mode;
  PrecisionGuard guard(r.precision_bits);
  return rational_eval_big(r, BigReal(t)).convert_to<double>();
}

namespace remez_detail {

struct Extremum {
  BigReal t;
  BigReal err;  // signed error value
};

inline BigReal power_of(const BigReal& t, const BigReal& beta) {
  if (t == 0) return BigReal(0);
  return pow(t, beta);
}

inline BigReal error_at(const std::vector<BigReal>& num, const std::vector<BigReal>& den,
                        const BigReal& beta, const BigReal& t) {
  return cheb_eval(num, t) / cheb_eval(den, t) - power_of(t, beta);
}

/// Fixed scan grid: 0, then log-spaced points, then 1.
inline std::vector<BigReal> make_scan_grid(double lo_exponent, int per_decade) {
  std::vector<BigReal> g;
  const int decades = static_cast<int>(-lo_exponent);
  g.reserve(static_cast<std::size_t>(decades) * per_decade + 2);
  g.push_back(BigReal(0));
  const BigReal step = pow(BigReal(10), BigReal(1) / per_decade);
  BigReal t = pow(BigReal(10), BigReal(lo_exponent));
  for (int i = 0; i <= decades * per_decade; ++i) {
    g.push_back(t > 1 ? BigReal(1) : t);
    t *= step;
  }
  if (g.back() != 1) g.push_back(BigReal(1));
  return g;
}

/// Golden-section maximization of sgn * eps on [a,b].
inline Extremum refine_extremum(const std::vector<BigReal>& num,
                                const std::vector<BigReal>& den, const BigReal& beta,
                                BigReal a, BigReal b, int sgn) {
  static const BigReal phi = (sqrt(BigReal(5)) - 1) / 2;
  BigReal x1 = b - phi * (b - a);
  BigReal x2 = a + phi * (b - a);
  BigReal f1 = sgn * error_at(num, den, beta, x1);
  BigReal f2 = sgn * error_at(num, den, beta, x2);
  for (int it = 0; it < 90; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = sgn * error_at(num, den, beta, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = sgn * error_at(num, den, beta, x1);
    }
    if (b - a <= BigReal(1e-40) * std::max(abs(a), BigReal(1e-300))) break;
  }
  BigReal t = (a + b) / 2;
  return {t, error_at(num, den, beta, t)};
}

/// One linearized alternation solve: given reference points and the error
/// sign pattern sigma_i = orient*(-1)^i, iterate on the unknown leveled
/// error until E stabilizes. Returns numerator, denominator, signed E.
inline void solve_alternation(int k, int m, const BigReal& beta,
                              const std::vector<BigReal>& ref,
                              std::vector<BigReal>& num, std::vector<BigReal>& den,
                              BigReal& E_out) {
  const std::size_t nref = ref.size();
  const std::size_t nunk = static_cast<std::size_t>(k + m + 2);
  if (nref != nunk) throw std::logic_error("solve_alternation: reference size mismatch");

  const BigReal gamma_m = (m == 0) ? BigReal(1) : 1 / cheb_leading_coeff(m);

  std::vector<BigReal> tb(nref), qprev(nref);
  std::vector<std::vector<BigReal>> T(nref);
  const int maxdeg = std::max(k, m);
  for (std::size_t i = 0; i < nref; ++i) {
    tb[i] = power_of(ref[i], beta);
    T[i] = cheb_values(static_cast<std::size_t>(maxdeg), ref[i]);
    qprev[i] = den.empty() ? BigReal(1) : cheb_eval(den, ref[i]);
  }

  BigReal E_prev(0);
  for (int inner = 0; inner < 40; ++inner) {
    std::vector<BigReal> M(nunk * nunk), rhs(nunk);
    for (std::size_t i = 0; i < nref; ++i) {
      const BigReal sigma = (i % 2 == 0) ? BigReal(1) : BigReal(-1);
      std::size_t c = 0;
      for (int j = 0; j <= k; ++j) M[i * nunk + c++] = T[i][static_cast<std::size_t>(j)];
      for (int j = 0; j < m; ++j)
        M[i * nunk + c++] = -tb[i] * T[i][static_cast<std::size_t>(j)];
      M[i * nunk + c] = -sigma * qprev[i];
      rhs[i] = tb[i] * gamma_m * T[i][static_cast<std::size_t>(m)];
    }
    std::vector<BigReal> x = dense_solve(std::move(M), std::move(rhs));

    num.assign(x.begin(), x.begin() + (k + 1));
    den.assign(x.begin() + (k + 1), x.begin() + (k + 1 + m));
    den.push_back(gamma_m);
    E_out = x.back();

    bool flipped_q = false;
    for (std::size_t i = 0; i < nref; ++i) {
      BigReal qv = cheb_eval(den, ref[i]);
      if (qv <= 0) flipped_q = true;
      qprev[i] = qv;
    }
    if (flipped_q)
      throw PrecisionError("denominator sign change on reference set; retry at doubled precision");

    if (E_prev != 0 && abs(E_out - E_prev) <= abs(E_out) * BigReal(1e-30)) break;
    E_prev = E_out;
  }
}

struct LevelResult {
  std::vector<BigReal> num, den;
  BigReal E;
  std::vector<Extremum> extrema;
};

/// Full Remez exchange at fixed degrees, starting from the given reference.
inline LevelResult remez_level(int k, int m, const BigReal& beta,
                               std::vector<BigReal> ref,
                               const std::vector<BigReal>& grid,
                               const std::vector<BigReal>& grid_pow, double tol) {
  LevelResult res;
  const std::size_t want = static_cast<std::size_t>(k + m + 2);
  BigReal spread(1);
  for (int sweep = 0; sweep < 50; ++sweep) {
    BigReal E_signed;
    solve_alternation(k, m, beta, ref, res.num, res.den, E_signed);

    // scan for sign-runs of the error and take the best point of each
    std::vector<Extremum> cand;
    {
      std::vector<BigReal> errs(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i)
        errs[i] = cheb_eval(res.num, grid[i]) / cheb_eval(res.den, grid[i]) - grid_pow[i];
      std::size_t i = 0;
      while (i < grid.size()) {
        int s = errs[i] > 0 ? 1 : (errs[i] < 0 ? -1 : 0);
        if (s == 0) {
          ++i;
          continue;
        }
        std::size_t best = i, j = i;
        while (j < grid.size()) {
          int sj = errs[j] > 0 ? 1 : (errs[j] < 0 ? -1 : 0);
          if (sj != 0 && sj != s) break;
          if (sj == s && abs(errs[j]) > abs(errs[best])) best = j;
          ++j;
        }
        if (best == 0 || grid[best] == 1) {
          cand.push_back({grid[best], errs[best]});
        } else {
          const BigReal a = grid[best - 1];
          const BigReal b = (best + 1 < grid.size()) ? grid[best + 1] : BigReal(1);
          cand.push_back(refine_extremum(res.num, res.den, beta, a, b, s));
        }
        i = j;
      }
    }
    if (cand.size() < want)
      throw PrecisionError("alternation collapsed: found " + std::to_string(cand.size()) +
                           " extrema, need " + std::to_string(want));

    // best consecutive alternating window of the required length
    std::size_t best_at = 0;
    BigReal best_min(-1);
    for (std::size_t s = 0; s + want <= cand.size(); ++s) {
      BigReal mn = abs(cand[s].err);
      for (std::size_t j = 1; j < want; ++j) mn = std::min(mn, abs(cand[s + j].err));
      if (mn > best_min) {
        best_min = mn;
        best_at = s;
      }
    }
    res.extrema.assign(cand.begin() + best_at, cand.begin() + best_at + want);

    BigReal mx(0), mn = abs(res.extrema[0].err);
    for (const auto& e : res.extrema) {
      mx = std::max(mx, abs(e.err));
      mn = std::min(mn, abs(e.err));
    }
    res.E = mx;
    spread = (mx - mn) / mx;
    if (std::getenv("FRACPOW_REMEZ_TRACE"))
      std::fprintf(stderr, "remez (%d,%d) sweep %d: E=%.12e spread=%.3e runs=%zu\n", k, m,
                   sweep, mx.convert_to<double>(), spread.convert_to<double>(),
                   cand.size());
    if (spread <= tol) return res;

    ref.clear();
    for (const auto& e : res.extrema) ref.push_back(e.t);
  }
  if (spread <= 1e-3) return res;  // leveled well enough to certify
  std::ostringstream os;
  os << "Remez exchange did not level: spread " << spread.convert_to<double>()
     << " at degrees (" << k << "," << m << ")";
  throw ConvergenceError(os.str());
}

}  // namespace remez_detail

/// Compute the best uniform rational approximant of t^beta on [0,1] in
/// R(k,m), m in {k, k-1}, by degree continuation from the best constant.
/// On certification failure the precision is doubled automatically, up to
/// 2048 bits.
inline RationalMinimax compute_bura(double beta, int k, int m, unsigned precision_bits = 512) {
  if (!(beta > 0 && beta < 1)) throw std::invalid_argument("compute_bura: beta must be in (0,1)");
  if (k < 0 || !(m == k || m == k - 1))
    throw std::invalid_argument("compute_bura: degrees must be (k,k) or (k+1,k)");
  if (precision_bits < 128) throw std::invalid_argument("compute_bura: precision below 128 bits");

  std::string last_error;
  for (unsigned bits = precision_bits; bits <= std::max(precision_bits, 2048u); bits *= 2) {
    try {
      PrecisionGuard guard(bits);
      const BigReal beta_big(beta);
      const auto grid = remez_detail::make_scan_grid(-40.0, 200);
      std::vector<BigReal> grid_pow(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i)
        grid_pow[i] = remez_detail::power_of(grid[i], beta_big);

      // degree continuation: (0,0) -> (1,0) -> (1,1) -> ... -> (k,m)
      remez_detail::LevelResult level;
      level.num = {BigReal(1) / 2};
      level.den = {BigReal(1)};
      level.E = BigReal(1) / 2;
      level.extrema = {{BigReal(0), level.E}, {BigReal(1), -level.E}};

      int ck = 0, cm = 0;
      while (ck < k || cm < m) {
        if (ck == cm)
          ++ck;
        else
          ++cm;
        std::vector<BigReal> ref;
        for (const auto& e : level.extrema) ref.push_back(e.t);
        // seed the new reference point in the cluster toward 0
        BigReal tnew;
        if (ref.size() >= 3 && ref[1] > 0 && ref[2] > 0)
          tnew = ref[1] * ref[1] / ref[2];
        else
          tnew = BigReal(1) / 100;
        ref.insert(ref.begin() + 1, tnew);
        level = remez_detail::remez_level(ck, cm, beta_big, std::move(ref), grid,
                                          grid_pow, 1e-9);
      }

      RationalMinimax r;
      r.beta = beta;
      r.k = k;
      r.m = m;
      r.precision_bits = bits;
      r.num = level.num;
      r.den = level.den;
      r.E = level.E;
      // orient so that the stored error at t=0 is positive (r(0) > 0)
      for (const auto& e : level.extrema) {
        r.extreme_points.push_back(e.t);
        r.signs.push_back(e.err > 0 ? 1 : -1);
      }
      // denominator must be sign-constant on [0,1]
      for (const auto& t : grid)
        if (cheb_eval(r.den, t) <= 0)
          throw PrecisionError("denominator sign change on [0,1]; retry at doubled precision");
      return r;
    } catch (const PrecisionError& e) {
      last_error = e.what();
    }
  }
  throw PrecisionError("compute_bura failed up to 2048 bits: " + last_error);
}

/// Re-verify the certification invariants (used when loading cached data).
inline bool verify_minimax(const RationalMinimax& r, double rel_tol = 1e-3) {
  PrecisionGuard guard(r.precision_bits);
  const BigReal beta(r.beta);
  if (r.extreme_points.size() != static_cast<std::size_t>(r.k + r.m + 2)) return false;
  if (r.extreme_points.front() != 0 || r.extreme_points.back() != 1) return false;
  if (r.E <= 0) return false;
  for (std::size_t i = 0; i < r.extreme_points.size(); ++i) {
    BigReal err = remez_detail::error_at(r.num, r.den, beta, r.extreme_points[i]);
    if ((err > 0 ? 1 : -1) != r.signs[i]) return false;
    if (i > 0 && r.signs[i] == r.signs[i - 1]) return false;
    if (abs(abs(err) - r.E) > rel_tol * r.E) return false;
  }
  for (int i = 0; i <= 500; ++i) {
    BigReal t = (i == 0) ? BigReal(0) : pow(BigReal(10), BigReal(-30) * (500 - i) / 500);
    if (cheb_eval(r.den, t) <= 0) return false;
  }
  return true;
}

}  // namespace fracpow

#endif  // FRACPOW_REMEZ_HPP
