#pragma once

// Lagrange interpolation of |x|^a at Chebyshev node systems, in barycentric
// form, and the scaled sup-norm of the interpolation error on [0, 1].

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "bernlab/error.hpp"
#include "bernlab/search.hpp"

namespace bernlab {

/// P2: zeros of T_{2n+1}.  P1: zeros of T_{2n} plus the origin.
enum class Scheme { P1, P2 };

inline std::string_view scheme_name(Scheme s) { return s == Scheme::P1 ? "P1" : "P2"; }

inline std::optional<Scheme> parse_scheme(std::string_view s) {
  if (s == "P1") return Scheme::P1;
  if (s == "P2") return Scheme::P2;
  return std::nullopt;
}

struct NodeSystem {
  Scheme scheme = Scheme::P2;
  int n = 0;
  std::vector<double> nodes;  // strictly decreasing
  std::vector<double> bary_weights;
};

struct InterpError {
  int n = 0;
  double scaled_error = 0.0;
  double argmax_x = 0.0;
};

namespace detail {

// 1 / prod_{k != j} (x_j - x_k), accumulated in logs and rescaled so the
// largest weight has magnitude 1.
inline std::vector<double> product_weights(const std::vector<double>& x) {
  const std::size_t m = x.size();
  std::vector<double> logw(m, 0.0);
  std::vector<int> sign(m, 1);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      double d = x[j] - x[k];
      logw[j] -= std::log(std::fabs(d));
      if (d < 0.0) sign[j] = -sign[j];
    }
  }
  double top = *std::max_element(logw.begin(), logw.end());
  std::vector<double> w(m);
  for (std::size_t j = 0; j < m; ++j) w[j] = sign[j] * std::exp(logw[j] - top);
  return w;
}

}  // namespace detail

inline NodeSystem build_nodes(Scheme scheme, int n) {
  if (n < 1) throw domain_error("build_nodes: n must be at least 1");
  constexpr double pi = std::numbers::pi;
  NodeSystem s;
  s.scheme = scheme;
  s.n = n;
  if (scheme == Scheme::P2) {
    const int m = 2 * n + 1;
    s.nodes.resize(m);
    s.bary_weights.resize(m);
    for (int j = 1; j <= n; ++j) {
      double theta = (j - 0.5) * pi / m;
      s.nodes[j - 1] = std::cos(theta);
      s.nodes[m - j] = -std::cos(theta);
      double w = ((j - 1) % 2 == 0 ? 1.0 : -1.0) * std::sin(theta);
      s.bary_weights[j - 1] = w;
      s.bary_weights[m - j] = w;
    }
    s.nodes[n] = 0.0;
    s.bary_weights[n] = (n % 2 == 0 ? 1.0 : -1.0);
  } else {
    const int m = 2 * n;
    s.nodes.resize(m + 1);
    for (int j = 1; j <= n; ++j) {
      double c = std::cos((j - 0.5) * pi / m);
      s.nodes[j - 1] = c;
      s.nodes[m + 1 - j] = -c;
    }
    s.nodes[n] = 0.0;
    s.bary_weights = detail::product_weights(s.nodes);
  }
  return s;
}

/// Value at x of the interpolant to |t|^alpha on the system's nodes.
inline double interp_eval(const NodeSystem& s, double alpha, double x) {
  if (!(std::fabs(x) <= 1.0)) throw domain_error("interp_eval: x must lie in [-1, 1]");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < s.nodes.size(); ++j) {
    double d = x - s.nodes[j];
    double fj = std::pow(std::fabs(s.nodes[j]), alpha);
    if (d == 0.0) return fj;
    double t = s.bary_weights[j] / d;
    num += t * fj;
    den += t;
  }
  return num / den;
}

/// (2n)^alpha * P(x_big / (2n)).
inline double scaled_interp_eval(const NodeSystem& s, double alpha, double x_big) {
  const double m = 2.0 * s.n;
  if (!(std::fabs(x_big) <= m)) throw domain_error("scaled_interp_eval: |x| must not exceed 2n");
  return std::pow(m, alpha) * interp_eval(s, alpha, x_big / m);
}

namespace detail {

// (2n)^alpha * sup over [0, 1] of err(x), sampled at 40n points
// x = cos(theta) and refined by golden section around every sample peak
// reaching half the sampled maximum.
template <class E>
InterpError scaled_sup(int n, double alpha, const E& err) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  auto err_at_theta = [&](double theta) { return err(std::cos(theta)); };
  const int m = 40 * n;
  const double h = half_pi / m;
  std::vector<double> e(m + 1);
  for (int i = 0; i <= m; ++i) e[i] = err_at_theta(i * h);
  const double grid_top = *std::max_element(e.begin(), e.end());

  Extremum best{0.0, -1.0};
  for (int i = 0; i <= m; ++i) {
    bool peak = (i == 0 || e[i] >= e[i - 1]) && (i == m || e[i] >= e[i + 1]);
    if (!peak || e[i] < 0.5 * grid_top) continue;
    Extremum r = refine_max(err_at_theta, std::max(0.0, (i - 1) * h), std::min(half_pi, (i + 1) * h),
                            {i * h, e[i]}, 1e-12);
    if (r.value > best.value) best = r;
  }
  return {n, std::pow(2.0 * n, alpha) * best.value, std::cos(best.x)};
}

}  // namespace detail

/// (2n)^alpha * sup over [0, 1] of | |x|^alpha - P(x) |.
inline InterpError sup_error(const NodeSystem& s, double alpha) {
  if (!(alpha > 0.0)) throw domain_error("sup_error: alpha must be positive");
  if (!(2.0 * s.n > alpha)) throw domain_error("sup_error: need 2n > alpha");
  return detail::scaled_sup(s.n, alpha, [&](double x) {
    return std::fabs(std::pow(x, alpha) - interp_eval(s, alpha, x));
  });
}

}  // namespace bernlab
