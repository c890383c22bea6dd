#pragma once

// Kernel integrals built on t^a / sinh t and t^a e^{-xt}, the constants
// C(a) and D(a), and sup-norms of H(a, .) and H1(a, .) over [0, inf).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bernlab/error.hpp"
#include "bernlab/quadrature.hpp"
#include "bernlab/search.hpp"
#include "bernlab/specfun.hpp"

namespace bernlab {

enum class KernelKind { H, H1, H2, F, G, R, S, F1, F2, A0 };

inline std::string_view kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::H: return "H";
    case KernelKind::H1: return "H1";
    case KernelKind::H2: return "H2";
    case KernelKind::F: return "F";
    case KernelKind::G: return "G";
    case KernelKind::R: return "R";
    case KernelKind::S: return "S";
    case KernelKind::F1: return "F1";
    case KernelKind::F2: return "F2";
    case KernelKind::A0: return "A0";
  }
  return "?";
}

inline std::optional<KernelKind> parse_kernel(std::string_view s) {
  for (auto k : {KernelKind::H, KernelKind::H1, KernelKind::H2, KernelKind::F, KernelKind::G,
                 KernelKind::R, KernelKind::S, KernelKind::F1, KernelKind::F2, KernelKind::A0})
    if (kernel_name(k) == s) return k;
  return std::nullopt;
}

struct SupNormReport {
  double norm = 0.0;
  double argmax = 0.0;
  double truncation_X = 0.0;
  double tail_bound = 0.0;
  std::vector<Extremum> local_maxima;
};

namespace detail {

// t^p / sinh(s t), written to survive large p and small t.
inline double pow_over_sinh(double t, double p, double s = 1.0) {
  if (!(t > 0.0)) return 0.0;
  return 2.0 * std::exp(p * std::log(t) - s * t) / -std::expm1(-2.0 * s * t);
}

// t^p / cosh t.
inline double pow_over_cosh(double t, double p) {
  if (!(t > 0.0)) return 0.0;
  return 2.0 * std::exp(p * std::log(t) - t) / (1.0 + std::exp(-2.0 * t));
}

inline double pow_exp(double t, double p, double s) {
  if (!(t > 0.0)) return 0.0;
  return std::exp(p * std::log(t) - s * t);
}

// Cut points for integrands of the form w(t) * k(t/x): geometric ladder
// from x up to 1 so the kernel's transition is resolved, plus the peak of w.
inline std::vector<double> scale_breaks(double scale, double peak) {
  std::vector<double> pts;
  if (scale > 0.0 && scale < 1.0)
    for (double p = scale; p < 1.0; p *= 8.0) pts.push_back(p);
  else if (scale >= 1.0 && scale < 1e4)
    pts.push_back(scale);
  if (peak > 1.0 && std::isfinite(peak)) pts.push_back(peak);
  return pts;
}

inline void require_alpha(double alpha, const char* what) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw domain_error(std::string(what) + ": alpha must be positive and finite");
}

}  // namespace detail

/// C(a) = int_0^inf t^a / sinh t dt.
inline double C_const(double alpha, const QuadConfig& cfg = {}) {
  detail::require_alpha(alpha, "C_const");
  auto f = [alpha](double t) { return detail::pow_over_sinh(t, alpha); };
  return integrate_zero_to_inf(f, cfg, detail::scale_breaks(1.0, alpha)).value;
}

/// D(a) = int_0^inf t^{a-1} / cosh t dt.
inline double D_const(double alpha, const QuadConfig& cfg = {}) {
  detail::require_alpha(alpha, "D_const");
  auto f = [alpha](double t) { return detail::pow_over_cosh(t, alpha - 1.0); };
  return integrate_zero_to_inf(f, cfg, detail::scale_breaks(1.0, alpha - 1.0)).value;
}

namespace detail {

inline double sinh_family(double alpha, double x, double power_of_x, const QuadConfig& cfg) {
  auto f = [=](double t) { return pow_over_sinh(t, alpha) * std::pow(x, power_of_x) / (x * x + t * t); };
  return integrate_zero_to_inf(f, cfg, scale_breaks(x, alpha)).value;
}

inline double F_kernel(double alpha, double x, const QuadConfig& cfg) {
  auto f = [=](double t) { return pow_over_sinh(t, alpha, x) / (1.0 + t * t); };
  return integrate_zero_to_inf(f, cfg, scale_breaks(1.0 / x, alpha / x)).value;
}

inline double G_kernel(double alpha, double x, const QuadConfig& cfg) {
  auto f = [=](double t) { return pow_exp(t, alpha, x) / (1.0 + t * t); };
  return integrate_zero_to_inf(f, cfg, scale_breaks(1.0 / x, alpha / x)).value;
}

// (x/a) F(a+1, x) - F(a, x) as one integral, avoiding cancellation.
inline double R_kernel(double alpha, double x, const QuadConfig& cfg) {
  auto f = [=](double t) {
    return pow_over_sinh(t, alpha, x) / (1.0 + t * t) * (x * t / alpha - 1.0);
  };
  auto breaks = scale_breaks(1.0 / x, alpha / x);
  breaks.push_back(alpha / x);
  return integrate_zero_to_inf(f, cfg, breaks).value;
}

inline double A0_kernel(double alpha, double x, const QuadConfig& cfg) {
  auto f = [=](double t) { return pow_over_cosh(t, alpha - 1.0) * x * x / (x * x + t * t); };
  return integrate_zero_to_inf(f, cfg, scale_breaks(x, alpha - 1.0)).value;
}

}  // namespace detail

/// Evaluate one member of the kernel family at (alpha, x).
inline double kernel_eval(KernelKind kind, double alpha, double x, const QuadConfig& cfg = {}) {
  using K = KernelKind;
  const std::string name(kernel_name(kind));
  detail::require_alpha(alpha, name.c_str());
  if (kind == K::F2 && !(alpha > 2.0)) throw domain_error("F2: alpha must exceed 2");
  if (!(x >= 0.0) || !std::isfinite(x)) throw domain_error(name + ": x must be nonnegative and finite");

  if (x == 0.0) {
    switch (kind) {
      case K::H:
      case K::H2:
      case K::A0:
        return 0.0;
      case K::H1:
        if (alpha == 1.0) return std::numbers::pi / 2.0;
        if (alpha > 1.0) return 0.0;
        throw domain_error("H1: diverges at x=0 for alpha < 1");
      default:
        throw domain_error(name + ": x must be positive");
    }
  }

  switch (kind) {
    case K::H: return std::sin(x) * detail::sinh_family(alpha, x, 1.0, cfg);
    case K::H1: return detail::sinh_family(alpha, x, 1.0, cfg);
    case K::H2: return detail::sinh_family(alpha, x, 2.0, cfg);
    case K::F: return detail::F_kernel(alpha, x, cfg);
    case K::G: return detail::G_kernel(alpha, x, cfg);
    case K::R: return detail::R_kernel(alpha, x, cfg);
    case K::S:
      return 0.5 * alpha * std::pow(x, alpha - 1.0) * (x * x + alpha * alpha) *
             detail::R_kernel(alpha, x, cfg);
    case K::F1:
      return (2.0 - std::pow(2.0, -alpha)) * zeta(alpha + 1.0) * detail::G_kernel(alpha, x, cfg);
    case K::F2:
      return (2.0 - std::pow(2.0, 2.0 - alpha)) * zeta(alpha - 1.0) * detail::G_kernel(alpha, x, cfg);
    case K::A0: return detail::A0_kernel(alpha, x, cfg);
  }
  return 0.0;
}

/// pi*floor(a/pi) + 3pi/2: abscissa of a near-maximal lobe of |H(a, .)|
/// to the right of a, where |sin| = 1.
inline double beta_point(double alpha) {
  if (!(alpha > 0.0)) throw domain_error("beta_point: alpha must be positive");
  constexpr double pi = std::numbers::pi;
  return pi * std::floor(alpha / pi) + 1.5 * pi;
}

/// sup over x >= 0 of |H(alpha, x)|.
///
/// Each period [k pi, (k+1) pi] is sampled and the promising ones refined by
/// golden section.  The scan stops at X once C(alpha)/X < norm/2, which
/// bounds |H| beyond X.
inline SupNormReport sup_norm_H(double alpha, const QuadConfig& cfg = {}) {
  detail::require_alpha(alpha, "sup_norm_H");
  constexpr double pi = std::numbers::pi;
  constexpr int samples = 12;
  const double c = C_const(alpha, cfg);
  auto absH = [&](double x) { return std::fabs(kernel_eval(KernelKind::H, alpha, x, cfg)); };

  struct Period {
    int k;
    Extremum best;
    double cell;
  };
  std::vector<Period> periods;
  auto scan = [&](int k0, int k1) {
    for (int k = k0; k < k1; ++k) {
      Period p{k, {k * pi, 0.0}, pi / samples};
      for (int i = 1; i < samples; ++i) {
        double x = (k + static_cast<double>(i) / samples) * pi;
        double v = absH(x);
        if (v > p.best.value) p.best = {x, v};
      }
      periods.push_back(p);
    }
  };

  int K = static_cast<int>(std::ceil((beta_point(alpha) + 10.0 * pi) / pi));
  scan(0, K);
  auto grid_max = [&] {
    double m = 0.0;
    for (const auto& p : periods) m = std::max(m, p.best.value);
    return m;
  };
  while (c / (K * pi) >= 0.5 * grid_max()) {
    scan(K, 2 * K);
    K *= 2;
  }

  // Grid values sit within a few percent of the lobe maxima, so lobes well
  // below the best grid value cannot hold the supremum.
  const double threshold = 0.9 * grid_max();
  SupNormReport rep;
  for (auto& p : periods) {
    Extremum e = p.best;
    if (e.value >= threshold) {
      double lo = std::max(p.k * pi, e.x - p.cell);
      double hi = std::min((p.k + 1) * pi, e.x + p.cell);
      e = refine_max(absH, lo, hi, e, 1e-11);
    }
    rep.local_maxima.push_back(e);
    if (e.value > rep.norm) {
      rep.norm = e.value;
      rep.argmax = e.x;
    }
  }
  rep.truncation_X = K * pi;
  rep.tail_bound = c / rep.truncation_X;
  return rep;
}

/// sup over x >= 0 of H1(alpha, x), alpha > 1.  Beyond X the bound
/// H1 = H2/x <= C(alpha)/x certifies the tail.
inline SupNormReport sup_norm_H1(double alpha, const QuadConfig& cfg = {}) {
  detail::require_alpha(alpha, "sup_norm_H1");
  if (!(alpha > 1.0)) throw domain_error("sup_norm_H1: alpha must exceed 1");
  constexpr double pi = std::numbers::pi;
  const double c = C_const(alpha, cfg);
  auto h1 = [&](double x) { return kernel_eval(KernelKind::H1, alpha, x, cfg); };

  Extremum best{0.0, 0.0};
  double best_cell = 0.0;
  auto scan = [&](double lo, double hi, int n) {
    double h = (hi - lo) / n;
    for (int i = 1; i <= n; ++i) {
      double x = lo + i * h;
      double v = h1(x);
      if (v > best.value) {
        best = {x, v};
        best_cell = h;
      }
    }
  };

  double X = alpha + 20.0 * pi;
  scan(0.0, X, 400);
  while (c / X >= best.value) {
    scan(X, 2.0 * X, 400);
    X *= 2.0;
  }

  SupNormReport rep;
  Extremum e = refine_max(h1, std::max(0.0, best.x - best_cell), best.x + best_cell, best, 1e-11);
  rep.norm = e.value;
  rep.argmax = e.x;
  rep.local_maxima.push_back(e);
  rep.truncation_X = X;
  rep.tail_bound = c / X;
  return rep;
}

/// Nikolskii's closed form for the L1 Bernstein constant.
inline double delta_1_closed(double alpha) {
  if (!(alpha > -1.0)) throw domain_error("delta_1_closed: alpha must exceed -1");
  const double s = std::fabs(sin_half_pi(alpha));
  if (s == 0.0) return 0.0;
  return s / std::numbers::pi * 8.0 * gamma(alpha + 1.0) * alternating_odd_sum(alpha);
}

/// Raitsin's closed form for the L2 Bernstein constant.
inline double delta_2_closed(double alpha) {
  if (!(alpha > -0.5)) throw domain_error("delta_2_closed: alpha must exceed -1/2");
  const double s = std::fabs(sin_half_pi(alpha));
  if (s == 0.0) return 0.0;
  return s / std::numbers::pi * 2.0 * gamma(alpha + 1.0) *
         std::sqrt(std::numbers::pi / (2.0 * alpha + 1.0));
}

}  // namespace bernlab
