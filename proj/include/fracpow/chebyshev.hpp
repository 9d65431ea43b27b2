#ifndef FRACPOW_CHEBYSHEV_HPP
#define FRACPOW_CHEBYSHEV_HPP

#include <cstddef>
#include <vector>

#include "fracpow/bigreal.hpp"

namespace fracpow {

// Polynomials in the Chebyshev basis shifted to [0,1]: T*_j(t) = T_j(2t-1).

/// Clenshaw evaluation of sum_j c_j T*_j(t).
inline BigReal cheb_eval(const std::vector<BigReal>& c, const BigReal& t) {
  if (c.empty()) return BigReal(0);
  const BigReal x = 2 * t - 1;
  const BigReal two_x = 2 * x;
  BigReal b1(0), b2(0);
  for (std::size_t j = c.size(); j-- > 1;) {
    BigReal b0 = c[j] + two_x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + x * b1 - b2;
}

/// Values T*_0(t) .. T*_n(t) by the three-term recurrence.
inline std::vector<BigReal> cheb_values(std::size_t n, const BigReal& t) {
  std::vector<BigReal> v(n + 1);
  const BigReal x = 2 * t - 1;
  v[0] = 1;
  if (n >= 1) v[1] = x;
  for (std::size_t j = 2; j <= n; ++j) v[j] = 2 * x * v[j - 1] - v[j - 2];
  return v;
}

/// Monomial coefficient of t^j in T*_j (the leading coefficient): 2^(2j-1)
/// for j >= 1, and 1 for j = 0.
inline BigReal cheb_leading_coeff(std::size_t j) {
  if (j == 0) return BigReal(1);
  return pow(BigReal(2), 2 * static_cast<int>(j) - 1);
}

/// Convert Chebyshev coefficients (on [0,1]) to monomial coefficients,
/// low order first.
inline std::vector<BigReal> cheb_to_monomial(const std::vector<BigReal>& c) {
  const std::size_t n = c.size();
  std::vector<BigReal> result(n, BigReal(0));
  if (n == 0) return result;
  // monomial expansions of T*_{j-1} and T*_j, built up by the recurrence
  std::vector<BigReal> prev{BigReal(1)};
  std::vector<BigReal> cur{BigReal(-1), BigReal(2)};
  result[0] += c[0];
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) result[i] += c[j] * cur[i];
    if (j + 1 < n) {
      // next = (4t - 2) * cur - prev
      std::vector<BigReal> next(j + 2, BigReal(0));
      for (std::size_t i = 0; i <= j; ++i) {
        next[i + 1] += 4 * cur[i];
        next[i] -= 2 * cur[i];
      }
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return result;
}

/// Horner evaluation of a monomial-basis polynomial, low order first.
inline BigReal monomial_eval(const std::vector<BigReal>& a, const BigReal& t) {
  BigReal acc(0);
  for (std::size_t j = a.size(); j-- > 0;) acc = acc * t + a[j];
  return acc;
}

/// Derivative of a monomial-basis polynomial.
inline std::vector<BigReal> monomial_derivative(const std::vector<BigReal>& a) {
  if (a.size() <= 1) return {};
  std::vector<BigReal> d(a.size() - 1);
  for (std::size_t j = 1; j < a.size(); ++j) d[j - 1] = a[j] * static_cast<int>(j);
  return d;
}

}  // namespace fracpow

#endif  // FRACPOW_CHEBYSHEV_HPP
