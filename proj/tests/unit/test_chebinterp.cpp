#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bernlab/chebinterp.hpp"
#include "bernlab/kernels.hpp"

using namespace bernlab;
constexpr double pi = std::numbers::pi;

namespace {

double lagrange(const std::vector<double>& nodes, double alpha, double x) {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double l = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (j != i) l *= (x - nodes[j]) / (nodes[i] - nodes[j]);
    s += l * std::pow(std::fabs(nodes[i]), alpha);
  }
  return s;
}

}  // namespace

TEST(Scheme, NamesRoundTrip) {
  EXPECT_EQ(*parse_scheme(scheme_name(Scheme::P1)), Scheme::P1);
  EXPECT_EQ(*parse_scheme(scheme_name(Scheme::P2)), Scheme::P2);
  EXPECT_FALSE(parse_scheme("P3").has_value());
}

TEST(Nodes, P2AreZerosOfOddChebyshev) {
  auto s = build_nodes(Scheme::P2, 3);
  ASSERT_EQ(s.nodes.size(), 7u);
  for (double x : s.nodes) EXPECT_NEAR(chebyshev_T(7, x), 0.0, 1e-14);
  EXPECT_EQ(s.nodes[3], 0.0);
}

TEST(Nodes, P1AreZerosOfEvenChebyshevPlusOrigin) {
  auto s = build_nodes(Scheme::P1, 3);
  ASSERT_EQ(s.nodes.size(), 7u);
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if (i == 3) {
      EXPECT_EQ(s.nodes[i], 0.0);
    } else {
      EXPECT_NEAR(chebyshev_T(6, s.nodes[i]), 0.0, 1e-14);
    }
  }
}

TEST(Nodes, SymmetricAndDecreasing) {
  for (auto sch : {Scheme::P1, Scheme::P2})
    for (int n : {1, 4, 33}) {
      auto s = build_nodes(sch, n);
      const auto m = s.nodes.size();
      for (std::size_t i = 0; i < m; ++i) {
        EXPECT_EQ(s.nodes[i], -s.nodes[m - 1 - i]);
        if (i) {
          EXPECT_LT(s.nodes[i], s.nodes[i - 1]);
        }
      }
      EXPECT_EQ(s.bary_weights.size(), m);
    }
  EXPECT_THROW(build_nodes(Scheme::P2, 0), domain_error);
}

TEST(InterpEval, SmallestP2) {
  auto s = build_nodes(Scheme::P2, 1);
  EXPECT_NEAR(interp_eval(s, 1.0, 0.5), 0.25 / (std::sqrt(3.0) / 2.0), 1e-15);
}

TEST(InterpEval, ReproducesNodeValuesAndIsEven) {
  for (auto sch : {Scheme::P1, Scheme::P2}) {
    auto s = build_nodes(sch, 6);
    for (double t : s.nodes) EXPECT_EQ(interp_eval(s, 0.7, t), std::pow(std::fabs(t), 0.7));
    for (double x : {0.11, 0.5, 0.93}) EXPECT_NEAR(interp_eval(s, 0.7, x), interp_eval(s, 0.7, -x), 1e-14);
    EXPECT_EQ(interp_eval(s, 0.7, 0.0), 0.0);
  }
  EXPECT_THROW(interp_eval(build_nodes(Scheme::P2, 2), 1.0, 1.5), domain_error);
}

TEST(InterpEval, AgreesWithLagrangeForm) {
  for (auto sch : {Scheme::P1, Scheme::P2})
    for (int n : {2, 5, 9}) {
      auto s = build_nodes(sch, n);
      for (double x : {0.013, 0.2, 0.61, 0.999})
        EXPECT_NEAR(interp_eval(s, 1.3, x), lagrange(s.nodes, 1.3, x), 1e-12) << n << " " << x;
    }
}

TEST(InterpEval, ExactForEvenPolynomials) {
  auto s = build_nodes(Scheme::P2, 3);
  for (double x : {0.1, 0.45, 0.8}) {
    EXPECT_NEAR(interp_eval(s, 2.0, x), x * x, 1e-14);
    EXPECT_NEAR(interp_eval(s, 4.0, x), std::pow(x, 4), 1e-14);
  }
}

TEST(ScaledInterpEval, Definition) {
  auto s = build_nodes(Scheme::P2, 8);
  const double a = 0.5;
  EXPECT_NEAR(scaled_interp_eval(s, a, 3.0), std::pow(16.0, a) * interp_eval(s, a, 3.0 / 16.0), 1e-14);
  EXPECT_THROW(scaled_interp_eval(s, a, 16.5), domain_error);
}

TEST(SupError, ErrorVanishesAtZeroForP2) {
  auto s = build_nodes(Scheme::P2, 10);
  EXPECT_EQ(std::pow(0.0, 0.5) - interp_eval(s, 0.5, 0.0), 0.0);
}

TEST(SupError, P2TendsToLimitingNorm) {
  for (double a : {0.5, 1.0}) {
    const double limit = 2.0 / pi * std::fabs(sin_half_pi(a)) * sup_norm_H(a).norm;
    const double e16 = sup_error(build_nodes(Scheme::P2, 16), a).scaled_error;
    const double e256 = sup_error(build_nodes(Scheme::P2, 256), a).scaled_error;
    EXPECT_LT(std::fabs(e256 - limit), std::fabs(e16 - limit)) << a;
    EXPECT_LT(std::fabs(e256 - limit) / limit, 0.02) << a;
  }
}

TEST(SupError, P1AtAlphaOneTendsToOne) {
  EXPECT_NEAR(sup_error(build_nodes(Scheme::P1, 256), 1.0).scaled_error, 1.0, 0.02);
}

TEST(SupError, BoundedSequenceAndSampledLowerBound) {
  for (double a : {0.3, 1.5}) {
    for (int n : {4, 8, 16, 32, 64}) {
      auto s = build_nodes(Scheme::P2, n);
      auto r = sup_error(s, a);
      EXPECT_LT(r.scaled_error, 3.0) << a << " " << n;
      double sampled = 0.0;
      for (int i = 0; i <= 2000; ++i) {
        double x = i / 2000.0;
        sampled = std::max(sampled, std::fabs(std::pow(x, a) - interp_eval(s, a, x)));
      }
      EXPECT_GE(r.scaled_error, std::pow(2.0 * n, a) * sampled * (1.0 - 1e-12));
      EXPECT_GE(r.argmax_x, 0.0);
      EXPECT_LE(r.argmax_x, 1.0);
    }
  }
}

TEST(SupError, Domain) {
  EXPECT_THROW(sup_error(build_nodes(Scheme::P2, 1), 3.0), domain_error);
  EXPECT_THROW(sup_error(build_nodes(Scheme::P2, 4), 0.0), domain_error);
}
