#pragma once

// Large-alpha behaviour: envelope bounds for H1, Laplace-type expansions of
// G(alpha + k, alpha + c), the first zero of R(alpha, alpha), and related
// ratio checks.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bernlab/error.hpp"
#include "bernlab/kernels.hpp"
#include "bernlab/search.hpp"

namespace bernlab {

/// Which half of the Laplace integral: [1, inf) or [0, 1].
enum class Branch { Upper, Lower };

struct WatsonCoeffs {
  int k = 0;
  Branch branch = Branch::Upper;
  std::array<double, 6> a{};
  double lambda = 1.0;
  double mu = 2.0;
};

/// Coefficients a_0..a_5 of the expansion of
///   int t^k / (1 + t^2) e^{-alpha (t - log t)} dt
/// over one side of t = 1.  The lower side flips the odd-index signs.
inline WatsonCoeffs watson_coeffs(int k, Branch branch) {
  if (k != 0 && k != 1) throw domain_error("watson_coeffs: k must be 0 or 1");
  const double r2 = std::numbers::sqrt2;
  const double K = k;
  WatsonCoeffs w;
  w.k = k;
  w.branch = branch;
  w.a = {
      1.0 / (2.0 * r2),
      (3.0 * K - 1.0) / 6.0,
      (6.0 * K * K - 6.0 * K - 5.0) / (12.0 * r2),
      (45.0 * K * K * K - 90.0 * K * K - 90.0 * K + 86.0) / 270.0,
      (36.0 * std::pow(K, 4) - 120.0 * K * K * K - 96.0 * K * K + 324.0 * K + 61.0) / (432.0 * r2),
      (189.0 * std::pow(K, 5) - 945.0 * std::pow(K, 4) - 315.0 * K * K * K + 4683.0 * K * K +
       168.0 * K - 3730.0) /
          11340.0,
  };
  if (branch == Branch::Lower)
    for (std::size_t n = 1; n < w.a.size(); n += 2) w.a[n] = -w.a[n];
  return w;
}

/// One-sided series e^{-alpha} sum_{n<terms} Gamma((n+1)/2) a_n alpha^{-(n+1)/2}.
inline double watson_branch_series(const WatsonCoeffs& w, double alpha, int terms) {
  if (terms < 1 || terms > static_cast<int>(w.a.size()))
    throw domain_error("watson_branch_series: terms must be between 1 and 6");
  double sum = 0.0;
  for (int n = 0; n < terms; ++n)
    sum += std::tgamma((n + w.lambda) / w.mu) * w.a[n] * std::pow(alpha, -(n + w.lambda) / w.mu);
  return std::exp(-alpha) * sum;
}

/// Coefficients g_j of G(alpha + k, alpha) ~ sqrt(2 pi/alpha) e^{-alpha}
/// sum_j g_j alpha^{-j}.  Both branches contribute; odd-index terms cancel
/// and even-index terms double.
inline std::array<double, 3> combined_coeffs(int k) {
  auto up = watson_coeffs(k, Branch::Upper);
  auto lo = watson_coeffs(k, Branch::Lower);
  std::array<double, 3> g{};
  const double root = std::sqrt(2.0 * std::numbers::pi);
  for (int j = 0; j < 3; ++j)
    g[j] = std::tgamma(j + 0.5) * (up.a[2 * j] + lo.a[2 * j]) / root;
  return g;
}

enum class GVariant { G_aa, G_a1a, G_aac };

/// Truncated large-alpha expansion of G(alpha, alpha), G(alpha + 1, alpha)
/// or G(alpha, alpha + c).
inline double G_asympt(double alpha, GVariant variant, int order, double c = 0.0) {
  if (!(alpha > 0.0)) throw domain_error("G_asympt: alpha must be positive");
  if (order < 0) throw domain_error("G_asympt: order must be nonnegative");
  const double pre = std::sqrt(2.0 * std::numbers::pi / alpha) * std::exp(-alpha);
  if (variant == GVariant::G_aac) {
    if (!(c >= 0.0)) throw domain_error("G_asympt: c must be nonnegative");
    if (order > 0) throw domain_error("G_asympt: only the leading term is known for c > 0");
    return pre * 0.5 * std::exp(-c);
  }
  if (order > 2) throw domain_error("G_asympt: order must not exceed 2");
  auto g = combined_coeffs(variant == GVariant::G_a1a ? 1 : 0);
  double sum = 0.0;
  for (int j = 0; j <= order; ++j) sum += g[j] * std::pow(alpha, -j);
  return pre * sum;
}

/// (G - order-2 expansion) * alpha^3 / (sqrt(2 pi/alpha) e^{-alpha}): the
/// measured remainder constant.
inline double watson_remainder_constant(double alpha, GVariant variant) {
  const double x = alpha;
  const double a = variant == GVariant::G_a1a ? alpha + 1.0 : alpha;
  const double exact = kernel_eval(KernelKind::G, a, x);
  const double pre = std::sqrt(2.0 * std::numbers::pi / alpha) * std::exp(-alpha);
  return (exact - G_asympt(alpha, variant, 2)) / pre * std::pow(alpha, 3);
}

struct EnvelopeBounds {
  double alpha = 0.0;
  double lower = 0.0;
  double point_value = 0.0;
  double norm = 0.0;
  double upper = 0.0;
};

/// C/(1+2a) (1 - 1/sqrt a) <= H1(a, a) <= sup H1(a, .) <= C/(1+2a) (1 + 2/sqrt a).
inline EnvelopeBounds envelope_bounds(double alpha) {
  if (!(alpha >= 2.0)) throw domain_error("envelope_bounds: alpha must be at least 2");
  const double base = C_const(alpha) / (1.0 + 2.0 * alpha);
  const double r = std::sqrt(alpha);
  EnvelopeBounds e;
  e.alpha = alpha;
  e.lower = base * (1.0 - 1.0 / r);
  e.upper = base * (1.0 + 2.0 / r);
  e.point_value = kernel_eval(KernelKind::H1, alpha, alpha);
  e.norm = sup_norm_H1(alpha).norm;
  if (!(e.lower <= e.point_value && e.point_value <= e.norm && e.norm <= e.upper))
    throw invariant_error("envelope_bounds: chain lower <= H1(a,a) <= norm <= upper broken at alpha=" +
                          std::to_string(alpha));
  return e;
}

/// R(alpha, alpha), the diagonal of (x/a) F(a+1, x) - F(a, x).
inline double R_diag(double alpha) { return kernel_eval(KernelKind::R, alpha, alpha); }

/// Zero of R(alpha, alpha) by bisection on [2.4, 3.0].
inline double find_alpha0(double tol = 1e-7) {
  if (!(tol >= 1e-7)) throw domain_error("find_alpha0: tol must be at least 1e-7");
  return bisect_root(R_diag, 2.4, 3.0, tol);
}

/// True iff H1(alpha, .) strictly decreases across 200 equally spaced
/// points of [alpha, x_hi].
inline bool monotonicity_check(double alpha, double x_hi) {
  if (!(alpha > 0.0)) throw domain_error("monotonicity_check: alpha must be positive");
  if (!(x_hi > alpha)) throw domain_error("monotonicity_check: need x_hi > alpha");
  constexpr int points = 200;
  double prev = kernel_eval(KernelKind::H1, alpha, alpha);
  for (int i = 1; i < points; ++i) {
    double x = alpha + (x_hi - alpha) * i / (points - 1);
    double v = kernel_eval(KernelKind::H1, alpha, x);
    if (!(v < prev)) return false;
    prev = v;
  }
  return true;
}

/// sup |H(alpha, .)| * (1 + 2 alpha) / C(alpha).
inline double norm_ratio(double alpha) {
  if (!(alpha >= 2.0)) throw domain_error("norm_ratio: alpha must be at least 2");
  return sup_norm_H(alpha).norm * (1.0 + 2.0 * alpha) / C_const(alpha);
}

/// H1(alpha, alpha + 3 pi/2) / H1(alpha, alpha).
inline double envelope_shift_ratio(double alpha) {
  return kernel_eval(KernelKind::H1, alpha, alpha + 1.5 * std::numbers::pi) /
         kernel_eval(KernelKind::H1, alpha, alpha);
}

/// G(alpha + 1, alpha) - (1 + alpha^{-3}) G(alpha, alpha).
inline double G_step_margin(double alpha) {
  return kernel_eval(KernelKind::G, alpha + 1.0, alpha) -
         (1.0 + std::pow(alpha, -3)) * kernel_eval(KernelKind::G, alpha, alpha);
}

/// G(alpha, alpha + c) / G(alpha, alpha).
inline double G_shift_ratio(double alpha, double c) {
  return kernel_eval(KernelKind::G, alpha, alpha + c) / kernel_eval(KernelKind::G, alpha, alpha);
}

}  // namespace bernlab
