#include <cmath>

#include <gtest/gtest.h>

#include "fracpow/quadrature.hpp"

using namespace fracpow;

TEST(Quadrature, ReferenceSystemCounts) {
  EXPECT_EQ(build_quadrature_from_kprime(0.25, 1.0 / 3.0).system_count(), 120);
  EXPECT_EQ(build_quadrature_from_kprime(0.5, 1.0 / 3.0).system_count(), 91);
  EXPECT_EQ(build_quadrature_from_kprime(0.75, 1.0 / 3.0).system_count(), 120);
  EXPECT_EQ(build_quadrature_from_k(0.5, 7).system_count(), 9);
  EXPECT_EQ(build_quadrature_from_k(0.25, 9).system_count(), 11);
}

TEST(Quadrature, ExtentFormulas) {
  QuadratureScheme q = build_quadrature_from_k(0.25, 9);
  EXPECT_EQ(q.m, static_cast<long>(std::ceil(0.75 * 9 - 1e-12)));
  EXPECT_EQ(q.M, static_cast<long>(std::ceil(0.25 * 9 - 1e-12)));
  EXPECT_NEAR(q.kprime, M_PI / (2 * std::sqrt(0.25 * 0.75 * 9)), 1e-15);
  EXPECT_EQ(static_cast<long>(q.shifts.size()), q.system_count());
  EXPECT_EQ(q.shifts.size(), q.weights.size());
}

TEST(Quadrature, FromKprimeRoundTrip) {
  QuadratureScheme a = build_quadrature_from_k(0.5, 7);
  QuadratureScheme b = build_quadrature_from_kprime(0.5, a.kprime);
  EXPECT_NEAR(b.k, a.k, 1e-12);
  EXPECT_EQ(b.system_count(), a.system_count());
}

TEST(Quadrature, PositiveShiftsAndWeights) {
  QuadratureScheme q = build_quadrature_from_k(0.75, 12);
  for (double s : q.shifts) EXPECT_GT(s, 0.0);
  for (double w : q.weights) EXPECT_GT(w, 0.0);
  // shifts run from e^{2 m k'} down to e^{-2 M k'}
  EXPECT_NEAR(q.shifts.front(), std::exp(2.0 * q.m * q.kprime), 1e-9 * q.shifts.front());
  EXPECT_NEAR(q.shifts.back(), std::exp(-2.0 * q.M * q.kprime), 1e-15);
}

TEST(Quadrature, SymbolApproximatesPower) {
  // |Q_a(lambda) - lambda^-a| decays like e^{-pi sqrt(a(1-a)k)}
  for (double alpha : {0.25, 0.5, 0.75}) {
    QuadratureScheme q = build_quadrature_from_k(alpha, 25);
    const double envelope = std::exp(-M_PI * std::sqrt(alpha * (1 - alpha) * 25));
    for (double lambda : {1.0, 10.0, 1e3, 1e6}) {
      const double err = std::abs(q.eval(lambda) - std::pow(lambda, -alpha));
      EXPECT_LT(err, 20 * envelope) << "alpha=" << alpha << " lambda=" << lambda;
    }
  }
}

TEST(Quadrature, ErrorDecreasesWithDegree) {
  const double lambda = 19.7;
  for (double alpha : {0.25, 0.5, 0.75}) {
    const double e9 = std::abs(build_quadrature_from_k(alpha, 9).eval(lambda) -
                               std::pow(lambda, -alpha));
    const double e25 = std::abs(build_quadrature_from_k(alpha, 25).eval(lambda) -
                                std::pow(lambda, -alpha));
    EXPECT_LT(e25, e9);
  }
}

TEST(Quadrature, RejectsInvalidArguments) {
  EXPECT_THROW(build_quadrature_from_k(0.0, 7), std::invalid_argument);
  EXPECT_THROW(build_quadrature_from_k(1.0, 7), std::invalid_argument);
  EXPECT_THROW(build_quadrature_from_k(0.5, 0), std::invalid_argument);
  EXPECT_THROW(build_quadrature_from_kprime(0.5, 0), std::invalid_argument);
}
