#pragma once

// Double-exponential quadrature on finite segments and half-lines.
// Backed by Boost.Math tanh_sinh / exp_sinh.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "bernlab/error.hpp"

namespace bernlab {

struct QuadConfig {
  double rel_tol = 1e-12;
  double abs_floor = 1e-300;
  int max_levels = 12;
  double split_point = 1.0;

  void validate() const {
    if (!(rel_tol > 0.0)) throw domain_error("QuadConfig: rel_tol must be positive");
    if (!(abs_floor >= 0.0)) throw domain_error("QuadConfig: abs_floor must be nonnegative");
    if (max_levels < 1) throw domain_error("QuadConfig: max_levels must be at least 1");
    if (!(split_point > 0.0)) throw domain_error("QuadConfig: split_point must be positive");
  }
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int levels_used = 0;
  bool converged = false;
};

namespace detail {

// Rules are expensive to build and safe to share, so keep one per depth.
template <class Rule>
Rule& shared_rule(int levels) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Rule>> rules;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = rules[levels];
  if (!slot) slot = std::make_unique<Rule>(static_cast<std::size_t>(levels));
  return *slot;
}

template <class F>
auto guarded(const F& f) {
  return [&f](double t) {
    double y = f(t);
    if (!std::isfinite(y)) {
      throw evaluation_error("integrand returned " + std::to_string(y) + " at t=" +
                                 std::to_string(t),
                             t);
    }
    if (std::fabs(y) < DBL_MIN) return 0.0;
    return y;
  };
}

inline void finish(QuadResult& r, const QuadConfig& cfg) {
  r.converged = r.err_estimate <= std::max(cfg.rel_tol * std::fabs(r.value), cfg.abs_floor);
}

}  // namespace detail

/// Integrate f over [a, b] by tanh-sinh.  Integrable algebraic endpoint
/// singularities need no special treatment.
template <class F>
QuadResult integrate_finite(const F& f, double a, double b, const QuadConfig& cfg = {}) {
  cfg.validate();
  if (!(a < b)) throw domain_error("integrate_finite: need a < b");
  auto& rule = detail::shared_rule<boost::math::quadrature::tanh_sinh<double>>(cfg.max_levels);
  auto g = detail::guarded(f);
  // The two-argument form keeps abscissae next to a nonzero left endpoint
  // off the endpoint itself.
  auto g2 = [&g](double t, double) { return g(t); };
  QuadResult r;
  double l1 = 0.0;
  std::size_t levels = 0;
  r.value = rule.integrate(g2, a, b, cfg.rel_tol, &r.err_estimate, &l1, &levels);
  r.levels_used = static_cast<int>(levels);
  detail::finish(r, cfg);
  return r;
}

/// Integrate f over [a, inf) by exp-sinh.  f must decay at least
/// exponentially.
template <class F>
QuadResult integrate_semi_infinite(const F& f, double a, const QuadConfig& cfg = {}) {
  cfg.validate();
  if (!std::isfinite(a)) throw domain_error("integrate_semi_infinite: a must be finite");
  auto& rule = detail::shared_rule<boost::math::quadrature::exp_sinh<double>>(cfg.max_levels);
  auto g = detail::guarded(f);
  QuadResult r;
  double l1 = 0.0;
  std::size_t levels = 0;
  r.value = rule.integrate(g, a, std::numeric_limits<double>::infinity(), cfg.rel_tol,
                           &r.err_estimate, &l1, &levels);
  r.levels_used = static_cast<int>(levels);
  detail::finish(r, cfg);
  return r;
}

/// Integrate f over (0, inf), cutting at cfg.split_point and at any extra
/// breakpoints.  The last piece is a half-line.
template <class F>
QuadResult integrate_zero_to_inf(const F& f, const QuadConfig& cfg = {},
                                 std::vector<double> breakpoints = {}) {
  cfg.validate();
  breakpoints.push_back(cfg.split_point);
  std::erase_if(breakpoints, [](double p) { return !(p > 0.0) || !std::isfinite(p); });
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  QuadResult total;
  double lo = 0.0;
  auto add = [&](const QuadResult& part) {
    total.value += part.value;
    total.err_estimate += part.err_estimate;
    total.levels_used = std::max(total.levels_used, part.levels_used);
  };
  for (double p : breakpoints) {
    add(integrate_finite(f, lo, p, cfg));
    lo = p;
  }
  add(integrate_semi_infinite(f, lo, cfg));
  detail::finish(total, cfg);
  return total;
}

}  // namespace bernlab
