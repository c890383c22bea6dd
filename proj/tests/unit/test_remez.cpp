#include <gtest/gtest.h>

#include <cmath>

#include "bernlab/chebinterp.hpp"
#include "bernlab/remez.hpp"
#include "oracle_values.hpp"

using namespace bernlab;

TEST(BestPoly, QuadraticForAbsoluteValue) {
  auto b = best_poly(1.0, 1);
  EXPECT_NEAR(b.E_n, 0.125, 1e-10);
  for (double x : {0.0, 0.3, 0.77, 1.0}) EXPECT_NEAR(b(x), x * x + 0.125, 1e-9);
}

TEST(BestPoly, ConstantForAbsoluteValue) {
  auto b = best_poly(1.0, 0);
  EXPECT_NEAR(b.E_n, 0.5, 1e-12);
  EXPECT_NEAR(b(0.4), 0.5, 1e-12);
}

TEST(BestPoly, MatchesLinearProgramOracle) {
  struct Case {
    double alpha;
    int n;
    double E;
  };
  for (auto c : {Case{0.5, 8, oracle::E_0_5_n8}, Case{1.0, 4, oracle::E_1_n4}, Case{1.5, 6, oracle::E_1_5_n6}}) {
    auto b = best_poly(c.alpha, c.n);
    // The oracle solves on a finite grid, so it can only undershoot.
    EXPECT_GE(b.E_n, c.E * (1.0 - 1e-9)) << c.alpha;
    EXPECT_NEAR(b.E_n, c.E, 1e-7 * c.E) << c.alpha << " " << c.n;
  }
}

TEST(BestPoly, Equioscillates) {
  for (double a : {0.5, 1.0, 1.5}) {
    auto b = best_poly(a, 5);
    const auto& r = b.reference;
    ASSERT_EQ(r.points.size(), 7u);
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      EXPECT_NEAR(std::fabs(r.errors[i]), b.E_n, 1e-9 * b.E_n);
      if (i) {
        EXPECT_EQ(r.signs[i], -r.signs[i - 1]);
        EXPECT_GT(r.points[i], r.points[i - 1]);
      }
    }
    double sampled = 0.0;
    for (int i = 0; i <= 4000; ++i) {
      double x = i / 4000.0;
      sampled = std::max(sampled, std::fabs(std::pow(x, a) - b(x)));
    }
    EXPECT_LE(sampled, b.E_n * (1.0 + 1e-9));
  }
}

TEST(BestPoly, BeatsInterpolation) {
  for (double a : {0.5, 1.0})
    for (int n : {4, 16}) {
      double interp = sup_error(build_nodes(Scheme::P2, n), a).scaled_error * std::pow(2.0 * n, -a);
      EXPECT_LT(best_poly(a, n).E_n, interp);
    }
}

TEST(BestPoly, DecreasesWithDegree) {
  double prev = 1.0;
  for (int n = 1; n <= 12; ++n) {
    double e = best_poly(0.7, n).E_n;
    EXPECT_LT(e, prev) << n;
    prev = e;
  }
}

TEST(BestPoly, EvenIntegerPowerIsExact) {
  EXPECT_LT(best_poly(2.0, 1).E_n, 1e-14);
  EXPECT_LT(best_poly(4.0, 3).E_n, 1e-14);
}

TEST(BestPoly, ArgumentErrors) {
  EXPECT_THROW(best_poly(0.0, 2), domain_error);
  EXPECT_THROW(best_poly(1.0, -1), domain_error);
  EXPECT_THROW(best_poly(1.0, 2, 0.0), domain_error);
}

TEST(ScalingCheck, HomogeneityOfThePower) {
  EXPECT_NEAR(scaling_check(1.0, 1, 2.0), 2.0, 1e-8);
  EXPECT_NEAR(scaling_check(0.5, 2, 4.0), 2.0, 1e-8);
  EXPECT_NEAR(scaling_check(1.5, 3, 0.25), 0.125, 1e-8);
  EXPECT_THROW(scaling_check(1.0, 1, -1.0), domain_error);
}

TEST(Extrapolation, BernsteinConstants) {
  const std::vector<int> degrees{8, 16, 32, 64};
  EXPECT_NEAR(bernstein_extrapolate(1.0, degrees), 0.2801694990238691, 0.005);
  EXPECT_NEAR(bernstein_extrapolate(0.5, degrees), 0.348648, 0.005);
  EXPECT_EQ(bernstein_extrapolate(2.0, {2, 3, 4}), 0.0);
}

TEST(Extrapolation, ArgumentErrors) {
  EXPECT_THROW(bernstein_extrapolate(1.0, {4, 8}), domain_error);
  EXPECT_THROW(bernstein_extrapolate(1.0, {8, 4, 16}), domain_error);
  EXPECT_THROW(bernstein_extrapolate(1.0, {0, 4, 16}), domain_error);
}
