#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "bernlab/nearbest.hpp"

using namespace bernlab;
constexpr double pi = std::numbers::pi;

namespace {

constexpr std::array<double, 10> x05{0.13, 2.10, 4.99, 8.04, 11.13, 14.25, 17.37, 20.50, 23.63, 26.76};
constexpr std::array<double, 10> x08{0.25, 2.30, 5.15, 8.16, 11.22, 14.32, 17.43, 20.55, 23.67, 26.80};
constexpr std::array<double, 10> x10{0.34, 2.38, 5.24, 8.23, 11.28, 14.36, 17.47, 20.58, 23.70, 26.83};

}  // namespace

TEST(LimitError, VanishesForZeroCoefficientsAtMultiplesOfPi) {
  for (int k = 1; k <= 4; ++k) EXPECT_NEAR(limit_error(0.5, 0.0, 0.0, k * pi), 0.0, 1e-12);
  EXPECT_EQ(limit_error(2.0, 0.3, 0.7, 1.0), 0.0);
  EXPECT_THROW(limit_error(1.0, 0.2, 0.4, 0.0), domain_error);
}

TEST(LimitError, CacheGivesSameValues) {
  GridCache cache(0.8);
  for (std::size_t i : {std::size_t{0}, std::size_t{17}, std::size_t{400}, cache.size() - 1}) {
    const double x = cache.x(i);
    ASSERT_TRUE(cache.index_of(x).has_value());
    EXPECT_DOUBLE_EQ(limit_error(0.8, 0.28, 0.51, x, &cache), limit_error(0.8, 0.28, 0.51, x));
  }
  EXPECT_FALSE(cache.index_of(0.5 * cache.step()).has_value());
  EXPECT_NEAR(cache.horizon(), 40.0 * pi, 1e-9);
}

TEST(LimitError, AffineInCoefficients) {
  const double a = 1.3, x = 2.7;
  const double e00 = limit_error(a, 0.0, 0.0, x);
  const double e10 = limit_error(a, 1.0, 0.0, x);
  const double e01 = limit_error(a, 0.0, 1.0, x);
  for (auto [c1, c2] : {std::pair{0.2, 0.4}, std::pair{-0.5, 3.0}}) {
    double want = e00 + c1 * (e10 - e00) + c2 * (e01 - e00);
    EXPECT_NEAR(limit_error(a, c1, c2, x), want, 1e-12);
  }
}

TEST(LimitError, ContinuousAtZero) {
  for (double a : {0.5, 1.0, 1.5})
    EXPECT_NEAR(limit_error(a, 0.3, 0.6, 1e-7), limit_error_at_zero(a, 0.6), 1e-3) << a;
}

TEST(GridCache, Validation) {
  EXPECT_THROW(GridCache(1.0, pi / 20.0), domain_error);
  EXPECT_THROW(GridCache(0.0), domain_error);
  GridCache fine(1.0, pi / 80.0, pi);
  EXPECT_EQ(fine.size(), 80u);
}

TEST(OptimizeC, MatchesTabulatedPairs) {
  struct Row {
    double a, c1, c2;
  };
  for (auto r : {Row{0.5, 0.33, 0.78}, Row{1.0, 0.26, 0.45}, Row{1.9, 0.10, 0.49}}) {
    auto s = optimize_c(r.a);
    EXPECT_NEAR(s.c1, r.c1, 0.03) << r.a;
    EXPECT_NEAR(s.c2, r.c2, 0.03) << r.a;
    EXPECT_EQ(s.sign_exponent, 1);
    EXPECT_GT(s.tail_bound, s.asymptotic_level);
    EXPECT_TRUE(s.interp_brackets_ok);
  }
}

TEST(OptimizeC, Domain) {
  EXPECT_THROW(optimize_c(0.0), domain_error);
  EXPECT_THROW(optimize_c(2.0), domain_error);
}

TEST(InterpPoints, MatchTabulatedRowsAtTabulatedCoefficients) {
  auto p05 = interp_points(0.5, 0.33, 0.78, 10);
  auto p10 = interp_points(1.0, 0.26, 0.45, 10);
  for (int j = 0; j < 10; ++j) {
    EXPECT_NEAR(p05[j], x05[j], 0.03) << j;
    EXPECT_NEAR(p10[j], x10[j], 0.03) << j;
  }
  EXPECT_TRUE(interp_brackets_hold(p05));
  EXPECT_TRUE(interp_brackets_hold(p10));
}

TEST(InterpPoints, GapsApproachPi) {
  auto p = interp_points(0.8, 0.28, 0.51, 10);
  EXPECT_NEAR(p[9], x08[9], 0.05);
  for (int j = 2; j < 10; ++j) {
    double gap = p[j] - p[j - 1];
    EXPECT_GT(gap, 0.9 * pi);
    EXPECT_LT(gap, 1.1 * pi);
  }
  EXPECT_LT(std::fabs(p[9] - p[8] - pi), std::fabs(p[2] - p[1] - pi));
}

TEST(InterpPoints, Errors) {
  EXPECT_THROW(interp_points(1.0, 0.26, 0.45, 0), domain_error);
  EXPECT_THROW(interp_points(1.0, 0.26, 0.45, 100), convergence_error);
}

TEST(Alternation, SignsAlternateInsideBrackets) {
  auto z = interp_points(1.0, 0.26, 0.45, 7);
  auto pts = alternation_points(1.0, 0.26, 0.45, z);
  ASSERT_EQ(pts.size(), 7u);
  EXPECT_EQ(pts[0].x, 0.0);
  for (std::size_t j = 1; j < pts.size(); ++j) EXPECT_LT(pts[j].value * pts[j - 1].value, 0.0) << j;
  EXPECT_TRUE(alternation_brackets_hold(pts));
  double top = 0.0;
  for (const auto& e : pts) top = std::max(top, std::fabs(e.value));
  EXPECT_LT(equioscillation_spread(pts) / top, 0.15);
}

TEST(Alternation, SpreadAndBracketHelpers) {
  std::vector<Extremum> pts{{0.0, -0.3}, {2.0, 0.28}, {5.0, -0.31}};
  EXPECT_NEAR(equioscillation_spread(pts), 0.03, 1e-15);
  EXPECT_TRUE(alternation_brackets_hold(pts));
  pts[2].x = 7.0;
  EXPECT_FALSE(alternation_brackets_hold(pts));
  EXPECT_FALSE(interp_brackets_hold({0.1, 6.0}));
}

TEST(SupLimitError, IncludesValueAtZero) {
  GridCache cache(0.5);
  auto big_c2 = sup_limit_error(cache, 0.0, 4.0, true);
  EXPECT_NEAR(big_c2.value, std::fabs(limit_error_at_zero(0.5, 4.0)), 1e-12);
  EXPECT_EQ(big_c2.x, 0.0);
}

TEST(SupLimitError, PolishOnlyRaisesTheGridValue) {
  GridCache cache(1.0);
  auto grid = sup_limit_error(cache, 0.26, 0.45, false);
  auto fine = sup_limit_error(cache, 0.26, 0.45, true);
  EXPECT_GE(fine.value, grid.value);
  EXPECT_LT(fine.value, grid.value * 1.01);
}

TEST(P3, ValueAtOrigin) {
  const double want = 2.0 / pi * std::sin(pi / 4.0) * 0.78 * std::pow(8.0, -0.5);
  EXPECT_NEAR(p3_poly(0.5, 4, 0.33, 0.78, 0.0), want, 1e-15);
  EXPECT_THROW(p3_poly(0.5, 4, 0.33, 0.78, 1.1), domain_error);
}

TEST(P3, EvenAndBeatsP2) {
  P3Polynomial p(0.5, 4, 0.33, 0.78);
  EXPECT_NEAR(p(0.3), p(-0.3), 1e-15);
  const double p2 = sup_error(build_nodes(Scheme::P2, 4), 0.5).scaled_error;
  EXPECT_LT(p.sup_error().scaled_error, p2);
}

TEST(P3, NearMinimaxAtModerateDegree) {
  auto s = optimize_c(1.0);
  const double e = P3Polynomial(1.0, 64, s.c1, s.c2).sup_error().scaled_error;
  EXPECT_LT(std::fabs(e / s.minimax - 1.0), 0.10);
}

TEST(P3, ScaledErrorTendsToLimit) {
  for (auto [a, c1, c2] : {std::tuple{0.5, 0.33, 0.78}, std::tuple{1.0, 0.26, 0.45}}) {
    const int n = 128;
    P3Polynomial p(a, n, c1, c2);
    for (double X : {1.0, 4.0, 10.0}) {
      const double x = X / (2.0 * n);
      const double scaled = std::pow(2.0 * n, a) * (std::pow(x, a) - p(x));
      const double lim = limit_error(a, c1, c2, X);
      EXPECT_NEAR(scaled, lim, 0.05 * std::fabs(lim)) << a << " " << X;
    }
  }
}
