#ifndef FRACPOW_ERROR_ROOTS_HPP
#define FRACPOW_ERROR_ROOTS_HPP

#include <stdexcept>
#include <vector>

#include "fracpow/bigreal.hpp"
#include "fracpow/remez.hpp"

namespace fracpow {

/// Roots xi_1 < xi_2 < ... of the error function eps(t) = r(t) - t^beta in
/// (0,1). A certified (k,m) approximant has exactly k+m+1 of them, one
/// between each pair of consecutive extreme points.
struct ErrorRootTable {
  double beta = 0;
  int k = 0;
  int m = 0;
  std::vector<BigReal> roots;
};

inline ErrorRootTable error_function_roots(const RationalMinimax& r) {
  PrecisionGuard guard(r.precision_bits);
  const BigReal beta(r.beta);
  ErrorRootTable table;
  table.beta = r.beta;
  table.k = r.k;
  table.m = r.m;
  for (std::size_t i = 0; i + 1 < r.extreme_points.size(); ++i) {
    BigReal a = r.extreme_points[i];
    BigReal b = r.extreme_points[i + 1];
    BigReal fa = remez_detail::error_at(r.num, r.den, beta, a);
    if (r.signs[i] * r.signs[i + 1] >= 0)
      throw std::logic_error("error_function_roots: extreme signs do not alternate");
    for (int it = 0; it < 500; ++it) {
      BigReal mid = (a + b) / 2;
      if (b - a <= BigReal(1e-9) * b || mid == a || mid == b) break;
      BigReal fm = remez_detail::error_at(r.num, r.den, beta, mid);
      if (fm == 0) {
        a = b = mid;
        break;
      }
      if ((fm > 0) == (fa > 0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    table.roots.push_back((a + b) / 2);
  }
  return table;
}

}  // namespace fracpow

#endif  // FRACPOW_ERROR_ROOTS_HPP
