#pragma once

// Best uniform approximation of |x|^a on [-b, b] by even polynomials of
// degree 2n, via Remez exchange in y = x^2.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "bernlab/error.hpp"
#include "bernlab/search.hpp"

namespace bernlab {

struct ReferenceSet {
  std::vector<double> points;  // y = x^2, increasing
  std::vector<double> errors;  // signed error at each point
  double leveled_error = 0.0;
  std::vector<int> signs;
};

struct BestApprox {
  double alpha = 0.0;
  int degree_2n = 0;
  double half_width = 1.0;
  std::vector<double> coeffs;  // Chebyshev coefficients in u = 2y/b^2 - 1
  double E_n = 0.0;
  ReferenceSet reference;
  int iterations = 0;

  /// Value of the approximant at x in [-b, b].
  double operator()(double x) const {
    const double u = 2.0 * x * x / (half_width * half_width) - 1.0;
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
      double t = 2.0 * u * b1 - b2 + coeffs[k];
      b2 = b1;
      b1 = t;
    }
    return u * b1 - b2 + coeffs[0];
  }
};

struct RemezConfig {
  double rel_tol = 1e-10;
  int max_iter = 50;
  int grid_per_degree = 50;
};

namespace detail {

struct Candidate {
  double theta;
  double err;
};

}  // namespace detail

/// Best approximation of |x|^alpha on [-b, b] by an even polynomial of
/// degree 2n.
inline BestApprox best_poly(double alpha, int n, double half_width = 1.0, const RemezConfig& cfg = {}) {
  if (!(alpha > 0.0)) throw domain_error("best_poly: alpha must be positive");
  if (n < 0) throw domain_error("best_poly: n must be nonnegative");
  if (!(half_width > 0.0)) throw domain_error("best_poly: half_width must be positive");
  constexpr double pi = std::numbers::pi;
  const double b = half_width;
  const int m = n + 2;

  BestApprox out;
  out.alpha = alpha;
  out.degree_2n = 2 * n;
  out.half_width = b;
  out.coeffs.assign(n + 1, 0.0);

  // Work in theta with x = b cos(theta), theta in [0, pi/2]; y decreases
  // as theta grows.
  // sin(pi/2 - theta) rather than cos(theta) so that theta = pi/2 gives x = 0
  // exactly.
  auto x_of = [&](double theta) { return b * std::sin(0.5 * pi - theta); };
  auto f = [&](double theta) { return std::pow(x_of(theta), alpha); };
  auto err = [&](double theta) { return f(theta) - out(x_of(theta)); };
  auto u_of = [&](double theta) { return std::cos(2.0 * theta); };

  // Initial reference: Chebyshev extrema of [0, b^2] in y.
  std::vector<double> ref(m);
  for (int i = 0; i < m; ++i) {
    double u = -std::cos(i * pi / (m - 1));
    ref[i] = 0.5 * std::acos(u);
  }
  std::sort(ref.begin(), ref.end(), std::greater<>());

  const bool exact = (0.5 * alpha == std::floor(0.5 * alpha)) && (0.5 * alpha <= n);
  const int grid = std::max(cfg.grid_per_degree * std::max(n, 1), 200);
  const double h = 0.5 * pi / grid;

  double spread = 1.0;
  for (int it = 1; it <= cfg.max_iter; ++it) {
    Eigen::MatrixXd A(m, m);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) {
      double u = u_of(ref[i]);
      double tm = 1.0, tk = u;
      A(i, 0) = 1.0;
      for (int k = 1; k <= n; ++k) {
        A(i, k) = tk;
        double next = 2.0 * u * tk - tm;
        tm = tk;
        tk = next;
      }
      A(i, n + 1) = (i % 2 == 0) ? 1.0 : -1.0;
      rhs(i) = f(ref[i]);
    }
    Eigen::VectorXd sol = A.partialPivLu().solve(rhs);
    for (int k = 0; k <= n; ++k) out.coeffs[k] = sol(k);
    const double level = sol(n + 1);
    out.iterations = it;

    if (exact) {
      out.E_n = 0.0;
      out.reference.points.clear();
      for (double t : ref) out.reference.points.push_back(std::pow(x_of(t), 2));
      out.reference.errors.assign(m, 0.0);
      out.reference.signs.assign(m, 0);
      out.reference.leveled_error = 0.0;
      return out;
    }

    // Candidate extrema: local maxima of |err| on the grid, both endpoints,
    // and the current reference, each polished by golden section.
    std::vector<double> e(grid + 1);
    for (int i = 0; i <= grid; ++i) e[i] = err(i * h);
    std::vector<detail::Candidate> cand;
    auto absErr = [&](double t) { return std::fabs(err(t)); };
    auto polish = [&](double t0) {
      double lo = std::max(0.0, t0 - h);
      double hi = std::min(0.5 * pi, t0 + h);
      Extremum r = refine_max(absErr, lo, hi, {t0, absErr(t0)}, 1e-14);
      return detail::Candidate{r.x, err(r.x)};
    };
    for (int i = 0; i <= grid; ++i) {
      double a = std::fabs(e[i]);
      bool left = i == 0 || a >= std::fabs(e[i - 1]);
      bool right = i == grid || a >= std::fabs(e[i + 1]);
      if (!(left && right)) continue;
      if (i == 0 || i == grid)
        cand.push_back({i * h, e[i]});
      else
        cand.push_back(polish(i * h));
    }
    cand.push_back({0.0, err(0.0)});
    cand.push_back({0.5 * pi, err(0.5 * pi)});
    for (double t : ref) cand.push_back({t, err(t)});

    // Order by increasing y, then collapse runs of equal sign.
    std::sort(cand.begin(), cand.end(), [](const auto& p, const auto& q) { return p.theta > q.theta; });
    std::vector<detail::Candidate> alt;
    for (const auto& c : cand) {
      if (c.err == 0.0) continue;
      if (!alt.empty() && (alt.back().err > 0.0) == (c.err > 0.0)) {
        if (std::fabs(c.err) > std::fabs(alt.back().err)) alt.back() = c;
      } else {
        alt.push_back(c);
      }
    }
    double global = 0.0;
    for (const auto& c : alt) global = std::max(global, std::fabs(c.err));
    while (static_cast<int>(alt.size()) > m) {
      if (std::fabs(alt.front().err) < std::fabs(alt.back().err))
        alt.erase(alt.begin());
      else
        alt.pop_back();
    }
    if (static_cast<int>(alt.size()) < m)
      throw convergence_error("best_poly: lost alternation during exchange", spread);

    double lo = global;
    for (const auto& c : alt) lo = std::min(lo, std::fabs(c.err));
    spread = (global - lo) / global;
    for (int i = 0; i < m; ++i) ref[i] = alt[i].theta;

    if (spread <= cfg.rel_tol) {
      out.E_n = global;
      out.reference.points.clear();
      out.reference.errors.clear();
      out.reference.signs.clear();
      for (const auto& c : alt) {
        out.reference.points.push_back(std::pow(x_of(c.theta), 2));
        out.reference.errors.push_back(c.err);
        out.reference.signs.push_back(c.err > 0.0 ? 1 : -1);
      }
      out.reference.leveled_error = std::fabs(level);
      return out;
    }
  }
  throw convergence_error("best_poly: reference errors did not equalize", spread);
}

/// E_n on [-b, b] divided by E_n on [-1, 1].
inline double scaling_check(double alpha, int n, double b) {
  if (!(b > 0.0)) throw domain_error("scaling_check: b must be positive");
  double eb = best_poly(alpha, n, b).E_n;
  double e1 = best_poly(alpha, n, 1.0).E_n;
  if (e1 == 0.0) return eb == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return eb / e1;
}

/// Fit s_n = (2n)^alpha E_{2n} by delta + b/n + c/n^2 and return delta.
inline double bernstein_extrapolate(double alpha, const std::vector<int>& n_list) {
  if (n_list.size() < 3) throw domain_error("bernstein_extrapolate: need at least 3 degrees");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1) throw domain_error("bernstein_extrapolate: degrees must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw domain_error("bernstein_extrapolate: degrees must increase");
  }
  const int k = static_cast<int>(n_list.size());
  Eigen::MatrixXd A(k, 3);
  Eigen::VectorXd s(k);
  for (int i = 0; i < k; ++i) {
    double n = n_list[i];
    A(i, 0) = 1.0;
    A(i, 1) = 1.0 / n;
    A(i, 2) = 1.0 / (n * n);
    s(i) = std::pow(2.0 * n, alpha) * best_poly(alpha, n_list[i]).E_n;
  }
  if (s.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  return A.colPivHouseholderQr().solve(s)(0);
}

}  // namespace bernlab
