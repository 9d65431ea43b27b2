#ifndef FRACPOW_PARTIAL_FRACTION_HPP
#define FRACPOW_PARTIAL_FRACTION_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fracpow/bigreal.hpp"
#include "fracpow/chebyshev.hpp"
#include "fracpow/polyroot.hpp"
#include "fracpow/remez.hpp"

namespace fracpow {

/// Partial-fraction data for a rational function: optional constant plus
/// sum of coefficients[j] / (t - poles[j]). Poles are non-positive and
/// strictly decreasing.
struct PoleResidueForm {
  enum class Provenance { bura, reciprocal };
  Provenance provenance = Provenance::bura;
  bool has_constant = false;
  BigReal constant;
  std::vector<BigReal> poles;
  std::vector<BigReal> coefficients;

  BigReal eval(const BigReal& t) const {
    BigReal acc = has_constant ? constant : BigReal(0);
    for (std::size_t j = 0; j < poles.size(); ++j) acc += coefficients[j] / (t - poles[j]);
    return acc;
  }
};

struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace pf_detail {

inline void check_simple_negative(const std::vector<BigReal>& roots, std::size_t degree,
                                  unsigned precision_bits, const char* what) {
  if (roots.size() != degree)
    throw CertificationError(std::string(what) + ": expected " + std::to_string(degree) +
                             " real roots, found " + std::to_string(roots.size()));
  const BigReal min_gap = pow(BigReal(2), -static_cast<int>(precision_bits / 2));
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (roots[j] >= 0)
      throw CertificationError(std::string(what) + ": non-negative root found");
    if (j > 0 && abs(roots[j] - roots[j - 1]) < min_gap * abs(roots[j]))
      throw PrecisionError(std::string(what) +
                           ": near-coincident roots; retry at doubled precision");
  }
}

}  // namespace pf_detail

/// Partial fractions of t^-1 r(t) for a (k,k) approximant: pole 0 with
/// coefficient r(0), plus the k denominator roots with residues
/// P(d_j) / (d_j Q'(d_j)). All coefficients are positive for a certified
/// approximant of t^(1-alpha).
inline PoleResidueForm bura_partial_fractions(const RationalMinimax& r) {
  if (r.k != r.m)
    throw std::invalid_argument("bura_partial_fractions: requires a (k,k) approximant");
  PrecisionGuard guard(r.precision_bits);

  const std::vector<BigReal> P = cheb_to_monomial(r.num);
  const std::vector<BigReal> Q = cheb_to_monomial(r.den);
  std::vector<BigReal> droots = real_roots(Q);
  pf_detail::check_simple_negative(droots, static_cast<std::size_t>(r.m),
                                   r.precision_bits, "denominator");
  std::sort(droots.begin(), droots.end(), std::greater<BigReal>());

  PoleResidueForm form;
  form.provenance = PoleResidueForm::Provenance::bura;
  form.poles.push_back(BigReal(0));
  form.coefficients.push_back(monomial_eval(P, BigReal(0)) / monomial_eval(Q, BigReal(0)));
  const std::vector<BigReal> Qd = monomial_derivative(Q);
  for (const auto& d : droots) {
    form.poles.push_back(d);
    form.coefficients.push_back(monomial_eval(P, d) / (d * monomial_eval(Qd, d)));
  }
  for (const auto& c : form.coefficients)
    if (c <= 0) throw CertificationError("bura_partial_fractions: non-positive coefficient");
  return form;
}

/// Partial fractions of 1/r(t): poles are the numerator roots; a constant
/// term is present exactly when numerator and denominator degrees match.
inline PoleResidueForm reciprocal_partial_fractions(const RationalMinimax& r) {
  PrecisionGuard guard(r.precision_bits);

  const std::vector<BigReal> P = cheb_to_monomial(r.num);
  const std::vector<BigReal> Q = cheb_to_monomial(r.den);
  std::vector<BigReal> zroots = real_roots(P);
  pf_detail::check_simple_negative(zroots, static_cast<std::size_t>(r.k),
                                   r.precision_bits, "numerator");
  std::sort(zroots.begin(), zroots.end(), std::greater<BigReal>());

  PoleResidueForm form;
  form.provenance = PoleResidueForm::Provenance::reciprocal;
  if (r.k == r.m) {
    form.has_constant = true;
    form.constant = Q.back() / P.back();
  }
  const std::vector<BigReal> Pd = monomial_derivative(P);
  for (const auto& z : zroots) {
    form.poles.push_back(z);
    form.coefficients.push_back(monomial_eval(Q, z) / monomial_eval(Pd, z));
  }
  return form;
}

/// Partial fractions of r itself (k = m): r(t) = b0 + sum c*_j / (t - d_j).
/// Used for derivative-based monotonicity checks.
inline PoleResidueForm direct_partial_fractions(const RationalMinimax& r) {
  if (r.k != r.m)
    throw std::invalid_argument("direct_partial_fractions: requires a (k,k) approximant");
  PrecisionGuard guard(r.precision_bits);
  const std::vector<BigReal> P = cheb_to_monomial(r.num);
  const std::vector<BigReal> Q = cheb_to_monomial(r.den);
  std::vector<BigReal> droots = real_roots(Q);
  pf_detail::check_simple_negative(droots, static_cast<std::size_t>(r.m),
                                   r.precision_bits, "denominator");
  std::sort(droots.begin(), droots.end(), std::greater<BigReal>());
  PoleResidueForm form;
  form.provenance = PoleResidueForm::Provenance::bura;
  form.has_constant = true;
  form.constant = P.back() / Q.back();
  const std::vector<BigReal> Qd = monomial_derivative(Q);
  for (const auto& d : droots) {
    form.poles.push_back(d);
    form.coefficients.push_back(monomial_eval(P, d) / monomial_eval(Qd, d));
  }
  return form;
}

/// Max relative mismatch between the pole sum and the source function on a
/// log grid in [1e-15, 1]. source(t) is the exact value the form should
/// reproduce.
template <typename Source>
BigReal reconstruction_error(const PoleResidueForm& form, Source&& source, int points = 1000) {
  BigReal worst(0);
  for (int i = 0; i <= points; ++i) {
    BigReal t = pow(BigReal(10), BigReal(-15) + BigReal(15 * i) / points);
    if (t > 1) t = 1;
    BigReal exact = source(t);
    worst = std::max(worst, abs(form.eval(t) - exact) / abs(exact));
  }
  return worst;
}

}  // namespace fracpow

#endif  // FRACPOW_PARTIAL_FRACTION_HPP
