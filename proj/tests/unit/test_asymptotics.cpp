#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bernlab/asymptotics.hpp"

using namespace bernlab;
constexpr double pi = std::numbers::pi;

TEST(Watson, LeadingCoefficients) {
  for (int k : {0, 1}) {
    auto w = watson_coeffs(k, Branch::Upper);
    EXPECT_NEAR(w.a[0], 1.0 / (2.0 * std::numbers::sqrt2), 1e-16);
    EXPECT_NEAR(w.a[1], (3.0 * k - 1.0) / 6.0, 1e-16);
  }
  EXPECT_THROW(watson_coeffs(2, Branch::Upper), domain_error);
}

TEST(Watson, BranchesDifferInOddSigns) {
  for (int k : {0, 1}) {
    auto up = watson_coeffs(k, Branch::Upper);
    auto lo = watson_coeffs(k, Branch::Lower);
    for (std::size_t n = 0; n < up.a.size(); ++n) {
      if (n % 2) {
        EXPECT_EQ(up.a[n] + lo.a[n], 0.0);
      } else {
        EXPECT_EQ(up.a[n], lo.a[n]);
      }
    }
  }
}

TEST(Watson, CombinedCoefficients) {
  auto g0 = combined_coeffs(0);
  auto g1 = combined_coeffs(1);
  EXPECT_NEAR(g0[0], 0.5, 1e-15);
  EXPECT_NEAR(g0[1], -5.0 / 24.0, 1e-15);
  EXPECT_NEAR(g0[2], 61.0 / 576.0, 1e-15);
  EXPECT_NEAR(g1[0], 0.5, 1e-15);
  EXPECT_NEAR(g1[1], -5.0 / 24.0, 1e-15);
  EXPECT_NEAR(g1[2], 205.0 / 576.0, 1e-15);
}

TEST(Watson, BranchSeriesSumToExpansion) {
  const double a = 30.0;
  for (int k : {0, 1}) {
    double two = watson_branch_series(watson_coeffs(k, Branch::Upper), a, 5) +
                 watson_branch_series(watson_coeffs(k, Branch::Lower), a, 5);
    EXPECT_NEAR(two, G_asympt(a, k ? GVariant::G_a1a : GVariant::G_aa, 2), 1e-14 * two);
  }
  EXPECT_THROW(watson_branch_series(watson_coeffs(0, Branch::Upper), a, 7), domain_error);
}

TEST(GAsympt, ErrorShrinksWithOrder) {
  for (double a : {20.0, 60.0}) {
    const double exact = kernel_eval(KernelKind::G, a, a);
    double prev = std::numeric_limits<double>::infinity();
    for (int order = 0; order <= 2; ++order) {
      double err = std::fabs(G_asympt(a, GVariant::G_aa, order) - exact) / exact;
      EXPECT_LT(err, prev) << a << " " << order;
      prev = err;
    }
    EXPECT_LT(prev, 5.0 / std::pow(a, 3));
  }
}

TEST(GAsympt, ShiftedLeadingTerm) {
  for (double a : {30.0, 60.0}) {
    const double c = 1.5;
    const double exact = kernel_eval(KernelKind::G, a, a + c);
    const double lead = G_asympt(a, GVariant::G_aac, 0, c);
    EXPECT_LT(std::fabs(exact / lead - 1.0), 2.0 / a) << a;
    EXPECT_LT(std::fabs(G_shift_ratio(a, c) * std::exp(c) - 1.0), 2.0 / a) << a;
  }
}

TEST(GAsympt, ArgumentErrors) {
  EXPECT_THROW(G_asympt(0.0, GVariant::G_aa, 1), domain_error);
  EXPECT_THROW(G_asympt(10.0, GVariant::G_aa, 3), domain_error);
  EXPECT_THROW(G_asympt(10.0, GVariant::G_aa, -1), domain_error);
  EXPECT_THROW(G_asympt(10.0, GVariant::G_aac, 1, 1.0), domain_error);
  EXPECT_THROW(G_asympt(10.0, GVariant::G_aac, 0, -1.0), domain_error);
}

TEST(GAsympt, RemainderConstantsStable) {
  for (auto v : {GVariant::G_aa, GVariant::G_a1a}) {
    double k20 = watson_remainder_constant(20.0, v);
    double k80 = watson_remainder_constant(80.0, v);
    EXPECT_LT(std::fabs(k20), 3.0);
    EXPECT_LT(std::fabs(k80 - k20), 0.5 * std::fabs(k80));
  }
}

TEST(Envelope, ChainHolds) {
  for (double a : {2.0, 4.0, 8.0, 16.0, 32.0}) {
    auto e = envelope_bounds(a);
    EXPECT_LE(e.lower, e.point_value);
    EXPECT_LE(e.point_value, e.norm);
    EXPECT_LE(e.norm, e.upper);
  }
  EXPECT_THROW(envelope_bounds(1.5), domain_error);
}

TEST(Alpha0, RootOfDiagonal) {
  EXPECT_LT(R_diag(2.4), 0.0);
  EXPECT_GT(R_diag(3.0), 0.0);
  const double a0 = find_alpha0();
  EXPECT_GT(a0, 2.54288);
  EXPECT_LT(a0, 2.54289);
  EXPECT_THROW(find_alpha0(1e-9), domain_error);
}

TEST(Alpha0, SignOfDiagonalAwayFromRoot) {
  for (double a : {2.45, 2.5}) EXPECT_LT(R_diag(a), 0.0) << a;
  for (double a : {2.6, 4.0, 10.0, 20.0}) EXPECT_GT(R_diag(a), 0.0) << a;
}

TEST(Monotonicity, H1DecreasingPastAlpha) {
  for (double a : {3.0, 10.0, 25.0}) EXPECT_TRUE(monotonicity_check(a, a + 6.0 * pi)) << a;
  EXPECT_THROW(monotonicity_check(3.0, 2.0), domain_error);
}

TEST(Ratio, WithinEnvelopeAndTightening) {
  double prev = std::numeric_limits<double>::infinity();
  for (double a : {10.0, 20.0, 40.0}) {
    double r = norm_ratio(a);
    EXPECT_GT(r, 1.0 - 1.0 / std::sqrt(a) - 0.02);
    EXPECT_LT(r, 1.0 + 2.0 / std::sqrt(a) + 0.02);
    EXPECT_LE(std::fabs(r - 1.0), prev);
    prev = std::fabs(r - 1.0);
  }
  EXPECT_THROW(norm_ratio(1.0), domain_error);
}

TEST(ShiftRatio, ApproachesOne) {
  double prev = 1.0;
  for (double a : {20.0, 40.0, 80.0}) {
    double d = std::fabs(envelope_shift_ratio(a) - 1.0);
    EXPECT_LT(d, prev) << a;
    prev = d;
  }
  EXPECT_LE(std::fabs(envelope_shift_ratio(20.0) - 1.0), 0.25);
}

TEST(GStep, PositiveMargin) {
  for (double a : {20.0, 50.0}) EXPECT_GT(G_step_margin(a), 0.0) << a;
  const double a = 40.0;
  const double diff = kernel_eval(KernelKind::G, a + 1.0, a) - kernel_eval(KernelKind::G, a, a);
  const double lead = std::sqrt(2.0 * pi / a) * std::exp(-a) / (4.0 * a * a);
  EXPECT_LT(std::fabs(diff / lead - 1.0), 0.2);
}
