#pragma once

// The entire functions H_a (integral and interpolating-series forms) and
// G_a that arise as scaled limits of the interpolation errors.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "bernlab/error.hpp"
#include "bernlab/kernels.hpp"
#include "bernlab/specfun.hpp"

namespace bernlab {

enum class SeriesAccel { Pairing, Euler };

struct SeriesConfig {
  int max_terms = 200000;
  SeriesAccel accel = SeriesAccel::Euler;
  double target_tol = 1e-8;

  void validate() const {
    if (max_terms < 100) throw domain_error("SeriesConfig: max_terms must be at least 100");
    if (!(target_tol > 0.0)) throw domain_error("SeriesConfig: target_tol must be positive");
  }
};

/// |x|^a - (2/pi) sin(pi a/2) H(a, |x|).
inline double H_alpha_integral(double alpha, double x, const QuadConfig& cfg = {}) {
  if (!(alpha > 0.0)) throw domain_error("H_alpha_integral: alpha must be positive");
  x = std::fabs(x);
  return std::pow(x, alpha) -
         2.0 / std::numbers::pi * sin_half_pi(alpha) * kernel_eval(KernelKind::H, alpha, x, cfg);
}

namespace detail {

// Iterated averaging of partial sums; for alternating series with
// completely monotone terms this is the Euler transform.
inline double euler_average(std::vector<double> partial) {
  for (std::size_t len = partial.size(); len > 1; --len)
    for (std::size_t i = 0; i + 1 < len; ++i) partial[i] = 0.5 * (partial[i] + partial[i + 1]);
  return partial.front();
}

}  // namespace detail

/// H_a(x) from its interpolating series at the nodes k*pi.
///
/// With N = floor(a/2) and s = a - 2N the series is
///   sin x [ (2/pi) sum_{n<N} sin(pi(a-2n-2)/2) C(a-2n-2) x^{2n+1}
///           + 2 x^{2N+1} sum_{k>=1} (-1)^k (k pi)^s / (x^2 - (k pi)^2) ].
/// The term whose pole is nearest x is folded with sin x into
/// sinc(x - k pi) / (x + k pi), which is regular at the pole.
inline double H_alpha_series(double alpha, double x, const SeriesConfig& cfg = {},
                             const QuadConfig& qcfg = {}) {
  cfg.validate();
  if (!(alpha > 0.0)) throw domain_error("H_alpha_series: alpha must be positive");
  const double half = 0.5 * alpha;
  if (half == std::floor(half)) throw domain_error("H_alpha_series: alpha must not be an even integer");
  constexpr double pi = std::numbers::pi;
  x = std::fabs(x);
  if (x == 0.0) return 0.0;

  const int N = static_cast<int>(std::floor(half));
  const double s = alpha - 2.0 * N;
  const double sx = std::sin(x);
  const double x2 = x * x;
  const double lead = 2.0 * std::pow(x, 2 * N + 1);

  double poly = 0.0;
  for (int n = 0; n < N; ++n) {
    double a = alpha - 2.0 * n - 2.0;
    poly += sin_half_pi(a) * C_const(a, qcfg) * std::pow(x, 2 * n + 1);
  }
  poly *= 2.0 / pi;

  auto sign = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };
  auto term = [&](int k) {
    double kp = k * pi;
    return sign(k) * std::pow(kp, s) / (x2 - kp * kp);
  };

  const int k_pole = static_cast<int>(std::lround(x / pi));
  const int K0 = static_cast<int>(std::ceil(x / pi)) + 10;
  double head = 0.0;
  for (int k = 1; k <= K0; ++k)
    if (k != k_pole) head += term(k);

  double pole = 0.0;
  if (k_pole >= 1) {
    double d = x - k_pole * pi;
    double sinc = d == 0.0 ? 1.0 : std::sin(d) / d;
    pole = lead * std::pow(k_pole * pi, s) * sinc / (x + k_pole * pi);
  }

  auto assemble = [&](double tail) { return sx * (poly + lead * (head + tail)) + pole; };
  const double scale = std::max(1.0, std::fabs(assemble(0.0)));

  if (cfg.accel == SeriesAccel::Pairing) {
    // Plain alternating summation, closed with one averaging stage.
    double tail = 0.0;
    double prev = 0.0;
    for (int k = K0 + 1; k <= cfg.max_terms; ++k) {
      prev = tail;
      tail += term(k);
      if (std::fabs(lead * sx * term(k + 1)) <= cfg.target_tol * scale)
        return assemble(0.5 * (tail + prev));
    }
    throw convergence_error("H_alpha_series: pairwise tail did not reach target_tol",
                            std::fabs(lead * sx * term(cfg.max_terms)) / scale);
  }

  double last = 0.0;
  bool have_last = false;
  double achieved = std::numeric_limits<double>::infinity();
  for (int m = 32; K0 + m <= cfg.max_terms; m *= 2) {
    std::vector<double> partial(m);
    double acc = 0.0;
    for (int j = 0; j < m; ++j) {
      acc += term(K0 + 1 + j);
      partial[j] = acc;
    }
    double est = detail::euler_average(std::move(partial));
    if (have_last) {
      achieved = std::fabs(lead * sx * (est - last)) / scale;
      if (achieved <= cfg.target_tol) return assemble(est);
    }
    last = est;
    have_last = true;
  }
  throw convergence_error("H_alpha_series: accelerated tail did not reach target_tol", achieved);
}

/// |x|^a - (2/pi) sin(pi a/2) cos(x) A0(a, |x|); interpolates |x|^a at 0
/// and at (k + 1/2) pi.
inline double G_alpha(double alpha, double x, const QuadConfig& cfg = {}) {
  if (!(alpha > 0.0)) throw domain_error("G_alpha: alpha must be positive");
  x = std::fabs(x);
  return std::pow(x, alpha) -
         2.0 / std::numbers::pi * sin_half_pi(alpha) * std::cos(x) * kernel_eval(KernelKind::A0, alpha, x, cfg);
}

}  // namespace bernlab
