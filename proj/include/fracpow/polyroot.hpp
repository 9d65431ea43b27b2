#ifndef FRACPOW_POLYROOT_HPP
#define FRACPOW_POLYROOT_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fracpow/bigreal.hpp"
#include "fracpow/chebyshev.hpp"

namespace fracpow {

namespace detail {

inline int sign_of(const BigReal& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

/// Bisection on [lo, hi] assuming a sign change of p across the interval.
inline BigReal bisect_root(const std::vector<BigReal>& p, BigReal lo, BigReal hi,
                           int sign_lo) {
  const BigReal eps = pow(BigReal(2), -static_cast<int>(current_digits10() * 3.33) + 8);
  for (int it = 0; it < 4000; ++it) {
    BigReal mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    if (hi - lo <= eps * std::max(abs(lo), abs(hi))) break;
    int sm = sign_of(monomial_eval(p, mid));
    if (sm == 0) return mid;
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace detail

/// All real roots of a monomial-basis polynomial, ascending. Intended for
/// polynomials whose roots are known (or suspected) to be real and simple;
/// if complex pairs exist, fewer than degree roots are returned and the
/// caller must treat that as a certification failure.
inline std::vector<BigReal> real_roots(std::vector<BigReal> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.size() <= 1) return {};
  if (a.size() == 2) return {-a[0] / a[1]};

  // Cauchy bound on root magnitudes
  BigReal bound(0);
  for (std::size_t j = 0; j + 1 < a.size(); ++j)
    bound = std::max(bound, abs(a[j] / a.back()));
  bound += 1;

  const std::vector<BigReal> crit = real_roots(monomial_derivative(a));
  std::vector<BigReal> pts;
  pts.push_back(-bound);
  for (const auto& c : crit)
    if (c > -bound && c < bound) pts.push_back(c);
  pts.push_back(bound);

  std::vector<BigReal> roots;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const int slo = detail::sign_of(monomial_eval(a, pts[i]));
    const int shi = detail::sign_of(monomial_eval(a, pts[i + 1]));
    if (slo == 0) {
      if (roots.empty() || roots.back() != pts[i]) roots.push_back(pts[i]);
      continue;
    }
    if (shi == 0) continue;  // picked up as the next interval's left endpoint
    if (slo != shi) roots.push_back(detail::bisect_root(a, pts[i], pts[i + 1], slo));
  }
  const int shi = detail::sign_of(monomial_eval(a, pts.back()));
  if (shi == 0) roots.push_back(pts.back());
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace fracpow

#endif  // FRACPOW_POLYROOT_HPP
