#ifndef FRACPOW_QUADRATURE_HPP
#define FRACPOW_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fracpow {

/// Sinc-quadrature scheme for lambda^-alpha:
///   Q_alpha(lambda) = (2 k' sin(pi alpha)/pi) *
///                     sum_{l=-m}^{M} e^{2(alpha-1) l k'} / (lambda + e^{-2 l k'})
/// with m = ceil((1-alpha) k), M = ceil(alpha k), k' = pi / (2 sqrt(alpha (1-alpha) k)).
struct QuadratureScheme {
  double alpha = 0;
  double k = 0;        // degree parameter (real-valued when derived from k')
  double kprime = 0;   // step
  long m = 0;          // lower summation extent
  long M = 0;          // upper summation extent
  std::vector<double> shifts;   // e^{-2 l k'}, l = -m..M, all > 0
  std::vector<double> weights;  // (2 k' sin(pi alpha)/pi) e^{2(alpha-1) l k'}, all > 0

  long system_count() const { return m + M + 1; }

  /// Scalar evaluation of the quadrature symbol.
  double eval(double lambda) const {
    double acc = 0;
    for (std::size_t j = 0; j < shifts.size(); ++j) acc += weights[j] / (lambda + shifts[j]);
    return acc;
  }
};

namespace quad_detail {

inline QuadratureScheme finish(double alpha, double k, double kprime) {
  QuadratureScheme q;
  q.alpha = alpha;
  q.k = k;
  q.kprime = kprime;
  q.m = static_cast<long>(std::ceil((1 - alpha) * k - 1e-12));
  q.M = static_cast<long>(std::ceil(alpha * k - 1e-12));
  const double factor = 2 * kprime * std::sin(M_PI * alpha) / M_PI;
  q.shifts.reserve(static_cast<std::size_t>(q.m + q.M + 1));
  q.weights.reserve(static_cast<std::size_t>(q.m + q.M + 1));
  for (long l = -q.m; l <= q.M; ++l) {
    q.shifts.push_back(std::exp(-2.0 * l * kprime));
    q.weights.push_back(factor * std::exp(2.0 * (alpha - 1) * l * kprime));
  }
  return q;
}

}  // namespace quad_detail

inline QuadratureScheme build_quadrature_from_k(double alpha, double k) {
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("build_quadrature: alpha in (0,1)");
  if (!(k > 0)) throw std::invalid_argument("build_quadrature: k must be positive");
  const double kprime = M_PI / (2 * std::sqrt(alpha * (1 - alpha) * k));
  return quad_detail::finish(alpha, k, kprime);
}

inline QuadratureScheme build_quadrature_from_kprime(double alpha, double kprime) {
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("build_quadrature: alpha in (0,1)");
  if (!(kprime > 0)) throw std::invalid_argument("build_quadrature: k' must be positive");
  const double k = M_PI * M_PI / (4 * alpha * (1 - alpha) * kprime * kprime);
  return quad_detail::finish(alpha, k, kprime);
}

}  // namespace fracpow

#endif  // FRACPOW_QUADRATURE_HPP
