#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bernlab/entire.hpp"

using namespace bernlab;
constexpr double pi = std::numbers::pi;

TEST(SeriesConfig, Validation) {
  SeriesConfig c;
  EXPECT_NO_THROW(c.validate());
  c.max_terms = 10;
  EXPECT_THROW(c.validate(), domain_error);
  c = {};
  c.target_tol = 0.0;
  EXPECT_THROW(c.validate(), domain_error);
}

TEST(HAlpha, SeriesAgreesWithIntegral) {
  for (double a : {0.5, 1.0, 1.5, 3.0, 5.5})
    for (double x : {0.3, 2.0, 7.0, 15.0, 31.4}) {
      double i = H_alpha_integral(a, x);
      double s = H_alpha_series(a, x);
      EXPECT_LE(std::fabs(i - s), 1e-6 * std::max(1.0, std::fabs(i))) << a << " " << x;
    }
}

TEST(HAlpha, InterpolatesAtMultiplesOfPi) {
  for (double a : {0.5, 1.0, 2.7}) {
    for (int k = 1; k <= 6; ++k) {
      double x = k * pi;
      double want = std::pow(x, a);
      EXPECT_NEAR(H_alpha_integral(a, x), want, 1e-9 * std::max(1.0, want)) << a << " " << k;
      EXPECT_NEAR(H_alpha_series(a, x), want, 1e-7 * std::max(1.0, want)) << a << " " << k;
    }
  }
}

TEST(HAlpha, EvenReflection) {
  for (double x : {0.4, 3.0, 9.9}) {
    EXPECT_EQ(H_alpha_integral(1.5, -x), H_alpha_integral(1.5, x));
    EXPECT_EQ(H_alpha_series(1.5, -x), H_alpha_series(1.5, x));
    EXPECT_EQ(G_alpha(0.5, -x), G_alpha(0.5, x));
  }
}

TEST(HAlpha, EvenIntegerAlphaIsThePowerItself) {
  for (double x : {0.5, 4.0}) EXPECT_NEAR(H_alpha_integral(2.0, x), x * x, 1e-12);
  EXPECT_THROW(H_alpha_series(2.0, 1.0), domain_error);
  EXPECT_THROW(H_alpha_series(0.0, 1.0), domain_error);
}

TEST(HAlpha, PairingConvergesBelowOneAndStallsAtOne) {
  EXPECT_NEAR(H_alpha_series(0.5, 2.0, {.accel = SeriesAccel::Pairing}), H_alpha_integral(0.5, 2.0), 1e-6);
  SeriesConfig c{.max_terms = 20000, .accel = SeriesAccel::Pairing};
  try {
    H_alpha_series(1.0, 2.0, c);
    FAIL() << "expected convergence_error";
  } catch (const convergence_error& e) {
    EXPECT_GT(e.achieved(), c.target_tol);
  }
}

TEST(HAlpha, ValueAtOrigin) {
  EXPECT_EQ(H_alpha_series(1.5, 0.0), 0.0);
  EXPECT_EQ(H_alpha_integral(1.5, 0.0), 0.0);
}

// |H_a(x)| <= C (1 + |x|)^a e^{|Im x|} restricted to the real line: growth
// no faster than |x|^a.
TEST(HAlpha, PolynomialGrowthOnRealLine) {
  for (double a : {0.5, 1.5})
    for (double x : {10.0, 40.0, 120.0})
      EXPECT_LE(std::fabs(H_alpha_integral(a, x)), 3.0 * std::pow(1.0 + x, a)) << a << " " << x;
}

TEST(GAlpha, InterpolatesAtHalfIntegerMultiplesOfPi) {
  EXPECT_EQ(G_alpha(0.5, 0.0), 0.0);
  for (double a : {0.5, 1.0, 1.5})
    for (int k = 0; k <= 5; ++k) {
      double x = (k + 0.5) * pi;
      double want = std::pow(x, a);
      EXPECT_NEAR(G_alpha(a, x), want, 1e-9 * std::max(1.0, want)) << a << " " << k;
    }
  EXPECT_THROW(G_alpha(0.0, 1.0), domain_error);
}

TEST(GAlpha, ApproachesPowerAwayFromNodes) {
  // The correction is bounded by (2/pi) D(a), so the relative gap shrinks.
  const double a = 1.5;
  for (double x : {50.0, 200.0})
    EXPECT_LE(std::fabs(G_alpha(a, x) - std::pow(x, a)), 2.0 / pi * D_const(a) * (1.0 + 1e-9));
}
