#pragma once

// Near-best approximation of |x|^a built from the two interpolants and a
// Chebyshev correction.  Its scaled error tends to
//   e(x) = (2/pi) sin(pi a/2) [c1 cos x A0(a,x) + (1-c1) sin x H1(a,x) - c2 sin x / x],
// and (c1, c2) are chosen to minimise sup |e|.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bernlab/chebinterp.hpp"
#include "bernlab/error.hpp"
#include "bernlab/kernels.hpp"
#include "bernlab/search.hpp"
#include "bernlab/specfun.hpp"

namespace bernlab {

/// Kernel values A0(a, x_i), H1(a, x_i) on x_i = i*step, i = 1..count.
/// The error is affine in (c1, c2), so one cache serves every trial pair.
class GridCache {
 public:
  GridCache(double alpha, double step = std::numbers::pi / 40.0,
            double horizon = 40.0 * std::numbers::pi)
      : alpha_(alpha), step_(step) {
    if (!(alpha > 0.0)) throw domain_error("GridCache: alpha must be positive");
    if (!(step > 0.0 && step <= std::numbers::pi / 40.0))
      throw domain_error("GridCache: step must lie in (0, pi/40]");
    const int count = static_cast<int>(std::floor(horizon / step + 1e-9));
    x_.resize(count);
    a0_.resize(count);
    h1_.resize(count);
    for (int i = 0; i < count; ++i) {
      double x = (i + 1) * step;
      x_[i] = x;
      a0_[i] = kernel_eval(KernelKind::A0, alpha, x);
      h1_[i] = kernel_eval(KernelKind::H1, alpha, x);
    }
  }

  double alpha() const { return alpha_; }
  double step() const { return step_; }
  double horizon() const { return x_.empty() ? 0.0 : x_.back(); }
  std::size_t size() const { return x_.size(); }
  double x(std::size_t i) const { return x_[i]; }
  double A0(std::size_t i) const { return a0_[i]; }
  double H1(std::size_t i) const { return h1_[i]; }

  /// Cached value at grid index i if x is that grid point.
  std::optional<std::size_t> index_of(double x) const {
    double r = x / step_ - 1.0;
    double k = std::round(r);
    if (k < 0.0 || k >= static_cast<double>(x_.size())) return std::nullopt;
    std::size_t i = static_cast<std::size_t>(k);
    if (x_[i] != x) return std::nullopt;
    return i;
  }

 private:
  double alpha_;
  double step_;
  std::vector<double> x_;
  std::vector<double> a0_;
  std::vector<double> h1_;
};

namespace detail {

inline double limit_error_from(double alpha, double c1, double c2, double x, double a0, double h1) {
  return 2.0 / std::numbers::pi * sin_half_pi(alpha) *
         (c1 * std::cos(x) * a0 + (1.0 - c1) * std::sin(x) * h1 - c2 * std::sin(x) / x);
}

}  // namespace detail

/// The scaled limit of |x|^a - P3 at x > 0.
inline double limit_error(double alpha, double c1, double c2, double x,
                          const GridCache* cache = nullptr) {
  if (!(x > 0.0)) throw domain_error("limit_error: x must be positive");
  if (cache) {
    if (auto i = cache->index_of(x))
      return detail::limit_error_from(alpha, c1, c2, x, cache->A0(*i), cache->H1(*i));
  }
  return detail::limit_error_from(alpha, c1, c2, x, kernel_eval(KernelKind::A0, alpha, x),
                                  kernel_eval(KernelKind::H1, alpha, x));
}

/// Limit of limit_error as x -> 0+.
inline double limit_error_at_zero(double alpha, double c2) {
  return -2.0 / std::numbers::pi * sin_half_pi(alpha) * c2;
}

struct NearBestSolution {
  double alpha = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double minimax = 0.0;
  double argmax = 0.0;
  double horizon = 0.0;
  /// Bound on |e| beyond the horizon.
  double tail_bound = 0.0;
  /// Amplitude that |e| approaches as x -> inf.
  double asymptotic_level = 0.0;
  std::vector<double> interp_points;
  std::vector<Extremum> alternation_points;  // (y_j, signed error), y_0 = 0
  double equioscillation_spread = 0.0;
  bool interp_brackets_ok = false;
  bool alternation_brackets_ok = false;
  int sign_exponent = 0;  // least integer exceeding alpha/2
  int iterations = 0;
};

struct NearBestConfig {
  int grid_c1 = 41;
  int grid_c2 = 41;
  double c1_max = 0.6;
  double c2_max = 5.0;
  double polish_fraction = 0.98;
  double xtol = 1e-4;
  int j_max = 10;
};

/// sup over (0, horizon] of |e|, including the x -> 0+ value.  With
/// `polish`, lobes near the top are refined by golden section on the exact
/// error; otherwise only grid values are used.
inline Extremum sup_limit_error(const GridCache& cache, double c1, double c2, bool polish,
                                double polish_fraction = 0.98) {
  const double alpha = cache.alpha();
  const std::size_t m = cache.size();
  std::vector<double> e(m);
  Extremum best{0.0, std::fabs(limit_error_at_zero(alpha, c2))};
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = std::fabs(detail::limit_error_from(alpha, c1, c2, cache.x(i), cache.A0(i), cache.H1(i)));
    if (e[i] > best.value) best = {cache.x(i), e[i]};
  }
  if (!polish) return best;

  const double threshold = polish_fraction * best.value;
  auto absE = [&](double x) { return std::fabs(limit_error(alpha, c1, c2, x)); };
  for (std::size_t i = 0; i < m; ++i) {
    bool peak = (i == 0 || e[i] >= e[i - 1]) && (i + 1 == m || e[i] >= e[i + 1]);
    if (!peak || e[i] < threshold) continue;
    double lo = i == 0 ? 0.5 * cache.x(0) : cache.x(i - 1);
    double hi = i + 1 == m ? cache.x(i) : cache.x(i + 1);
    Extremum r = refine_max(absE, lo, hi, {cache.x(i), e[i]}, 1e-9);
    if (r.value > best.value) best = r;
  }
  return best;
}

/// First j_max positive zeros of e, located by a scan with step pi/100 and
/// bisection to 1e-8.
inline std::vector<double> interp_points(double alpha, double c1, double c2, int j_max,
                                         double horizon = 40.0 * std::numbers::pi) {
  if (j_max < 1) throw domain_error("interp_points: j_max must be positive");
  const double step = std::numbers::pi / 100.0;
  auto f = [&](double x) { return limit_error(alpha, c1, c2, x); };
  std::vector<double> roots;
  double x0 = 1e-6;
  double f0 = f(x0);
  for (double x1 = step; x1 <= horizon && static_cast<int>(roots.size()) < j_max; x1 += step) {
    double f1 = f(x1);
    if (f1 == 0.0) {
      roots.push_back(x1);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f0 != 0.0) {
      roots.push_back(bisect_root(f, x0, x1, 1e-8));
    }
    x0 = x1;
    f0 = f1;
  }
  if (static_cast<int>(roots.size()) < j_max)
    throw convergence_error("interp_points: found only " + std::to_string(roots.size()) +
                                " zeros below the horizon",
                            static_cast<double>(roots.size()));
  return roots;
}

/// Extremum of e at 0+ followed by the extrema between consecutive zeros.
inline std::vector<Extremum> alternation_points(double alpha, double c1, double c2,
                                                const std::vector<double>& zeros) {
  std::vector<Extremum> out;
  out.push_back({0.0, limit_error_at_zero(alpha, c2)});
  auto absE = [&](double x) { return std::fabs(limit_error(alpha, c1, c2, x)); };
  for (std::size_t j = 0; j + 1 < zeros.size(); ++j) {
    Extremum r = golden_max(absE, zeros[j], zeros[j + 1], 1e-10);
    out.push_back({r.x, limit_error(alpha, c1, c2, r.x)});
  }
  return out;
}

inline double equioscillation_spread(const std::vector<Extremum>& pts) {
  if (pts.empty()) return 0.0;
  double lo = std::fabs(pts.front().value);
  double hi = lo;
  for (const auto& p : pts) {
    lo = std::min(lo, std::fabs(p.value));
    hi = std::max(hi, std::fabs(p.value));
  }
  return hi - lo;
}

/// x_j in [(j - 3/2) pi, (j - 1/2) pi] for j >= 2 (1-based).
inline bool interp_brackets_hold(const std::vector<double>& zeros) {
  constexpr double pi = std::numbers::pi;
  for (std::size_t i = 1; i < zeros.size(); ++i) {
    double j = static_cast<double>(i + 1);
    if (zeros[i] < (j - 1.5) * pi || zeros[i] > (j - 0.5) * pi) return false;
  }
  return true;
}

/// y_j in [(j - 1) pi, j pi] for j >= 1.
inline bool alternation_brackets_hold(const std::vector<Extremum>& pts) {
  constexpr double pi = std::numbers::pi;
  for (std::size_t j = 1; j < pts.size(); ++j)
    if (pts[j].x < (j - 1.0) * pi || pts[j].x > j * pi) return false;
  return true;
}

/// Fill the derived fields of a solution for given (c1, c2).
inline NearBestSolution describe_solution(double alpha, double c1, double c2, const GridCache& cache,
                                          int j_max = 10) {
  NearBestSolution s;
  s.alpha = alpha;
  s.c1 = c1;
  s.c2 = c2;
  Extremum top = sup_limit_error(cache, c1, c2, true);
  s.minimax = top.value;
  s.argmax = top.x;
  s.horizon = cache.horizon();
  const double amp = 2.0 / std::numbers::pi * std::fabs(sin_half_pi(alpha));
  const double d = D_const(alpha);
  s.asymptotic_level = amp * std::fabs(c1) * d;
  s.tail_bound = amp * (std::fabs(c1) * d + std::fabs(1.0 - c1) * C_const(alpha) / s.horizon +
                        std::fabs(c2) / s.horizon);
  s.interp_points = interp_points(alpha, c1, c2, j_max, s.horizon);
  s.alternation_points = alternation_points(alpha, c1, c2, s.interp_points);
  s.equioscillation_spread = equioscillation_spread(s.alternation_points);
  s.interp_brackets_ok = interp_brackets_hold(s.interp_points);
  s.alternation_brackets_ok = alternation_brackets_hold(s.alternation_points);
  s.sign_exponent = static_cast<int>(std::floor(0.5 * alpha)) + 1;
  return s;
}

/// Minimise J(c1, c2) = sup |e| over (0, 40 pi]: coarse grid on
/// [0, 0.6] x [0, 5], then Nelder-Mead on the polished J.
inline NearBestSolution optimize_c(double alpha, const NearBestConfig& cfg = {}) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw domain_error("optimize_c: alpha must lie in (0, 2)");
  const GridCache cache(alpha);

  std::array<double, 2> start{0.0, 0.0};
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cfg.grid_c1; ++i) {
    for (int k = 0; k < cfg.grid_c2; ++k) {
      double c1 = cfg.c1_max * i / (cfg.grid_c1 - 1);
      double c2 = cfg.c2_max * k / (cfg.grid_c2 - 1);
      double j = sup_limit_error(cache, c1, c2, false).value;
      if (j < best) {
        best = j;
        start = {c1, c2};
      }
    }
  }

  auto J = [&](const std::array<double, 2>& c) {
    return sup_limit_error(cache, c[0], c[1], true, cfg.polish_fraction).value;
  };
  std::array<double, 2> step{cfg.c1_max / (cfg.grid_c1 - 1), cfg.c2_max / (cfg.grid_c2 - 1)};
  SimplexResult r = nelder_mead_2d(J, start, step, cfg.xtol);
  if (!r.converged)
    throw convergence_error("optimize_c: simplex did not shrink below xtol", r.value);

  NearBestSolution s = describe_solution(alpha, r.x[0], r.x[1], cache, cfg.j_max);
  s.iterations = r.iterations;
  return s;
}

/// c1 P1 + (1 - c1) P2 + (2/pi) sin(pi a/2) c2 (-1)^n (2n)^{-a} T_{2n+1}(x) / ((2n+1) x).
class P3Polynomial {
 public:
  P3Polynomial(double alpha, int n, double c1, double c2)
      : alpha_(alpha), n_(n), c1_(c1), c2_(c2),
        p1_(build_nodes(Scheme::P1, n)), p2_(build_nodes(Scheme::P2, n)) {
    if (!(alpha > 0.0)) throw domain_error("P3Polynomial: alpha must be positive");
    corr_ = 2.0 / std::numbers::pi * sin_half_pi(alpha) * c2 * std::pow(2.0 * n, -alpha);
  }

  double operator()(double x) const {
    if (!(std::fabs(x) <= 1.0)) throw domain_error("P3Polynomial: x must lie in [-1, 1]");
    return c1_ * interp_eval(p1_, alpha_, x) + (1.0 - c1_) * interp_eval(p2_, alpha_, x) +
           corr_ * (n_ % 2 == 0 ? 1.0 : -1.0) * t_over_x(x) / (2.0 * n_ + 1.0);
  }

  /// (2n)^a sup over [0, 1] of | |x|^a - P3(x) |.
  InterpError sup_error() const {
    return detail::scaled_sup(n_, alpha_, [&](double x) { return std::fabs(std::pow(x, alpha_) - (*this)(x)); });
  }

  int n() const { return n_; }

 private:
  // T_{2n+1}(x) / x.  Near 0 use T_{2n+1}(x) = (-1)^n sin((2n+1) asin x).
  double t_over_x(double x) const {
    const int m = 2 * n_ + 1;
    const double sgn = n_ % 2 == 0 ? 1.0 : -1.0;
    if (x == 0.0) return sgn * m;
    if (std::fabs(x) < 0.5) return sgn * std::sin(m * std::asin(x)) / x;
    return std::cos(m * std::acos(x)) / x;
  }

  double alpha_;
  int n_;
  double c1_;
  double c2_;
  double corr_ = 0.0;
  NodeSystem p1_;
  NodeSystem p2_;
};

inline double p3_poly(double alpha, int n, double c1, double c2, double x) {
  return P3Polynomial(alpha, n, c1, c2)(x);
}

}  // namespace bernlab
