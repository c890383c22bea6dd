#pragma once

// Verification suites.  Each group returns a list of named checks with the
// measured quantity and the bound it was held to.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bernlab/asymptotics.hpp"
#include "bernlab/chebinterp.hpp"
#include "bernlab/entire.hpp"
#include "bernlab/kernels.hpp"
#include "bernlab/nearbest.hpp"
#include "bernlab/quadrature.hpp"
#include "bernlab/remez.hpp"
#include "bernlab/specfun.hpp"

namespace bernlab::cli {

struct Check {
  std::string label;
  double measured = 0.0;
  std::string relation;  // "<=", "<", ">=", ">", "in", "holds"
  double bound = 0.0;
  double bound_hi = 0.0;
  bool pass = false;
};

struct CheckOptions {
  /// Replaces the tolerance of every tolerance-type check.
  std::optional<double> tol;
};

inline std::string render(const Check& c) {
  char buf[160];
  if (c.relation == "holds")
    std::snprintf(buf, sizeof buf, "  [measured %.6e]", c.measured);
  else if (c.relation == "in")
    std::snprintf(buf, sizeof buf, "  [measured %.10g in (%.10g, %.10g)]", c.measured, c.bound, c.bound_hi);
  else
    std::snprintf(buf, sizeof buf, "  [measured %.6e %s %.6e]", c.measured, c.relation.c_str(), c.bound);
  return c.label + ": " + (c.pass ? "PASS" : "FAIL") + buf;
}

/// err <= tol, where --tol overrides tol.
inline Check within(std::string label, double err, double tol, const CheckOptions& o) {
  const double t = o.tol.value_or(tol);
  return {std::move(label), err, "<=", t, 0.0, err <= t};
}

/// A fixed inequality; not affected by --tol.
inline Check compare(std::string label, double measured, const std::string& rel, double bound) {
  bool ok = rel == "<=" ? measured <= bound
            : rel == "<" ? measured < bound
            : rel == ">=" ? measured >= bound
                          : measured > bound;
  return {std::move(label), measured, rel, bound, 0.0, ok};
}

/// lo < value < hi.
inline Check in_open(std::string label, double value, double lo, double hi) {
  return {std::move(label), value, "in", lo, hi, lo < value && value < hi};
}

inline Check holds(std::string label, bool ok, double measured = 0.0) {
  return {std::move(label), measured, "holds", 0.0, 0.0, ok};
}

namespace detail {

inline double rel_err(double got, double want) {
  const double d = std::fabs(got - want);
  return want == 0.0 ? d : d / std::fabs(want);
}

inline std::string fmt_a(const char* what, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s (alpha=%g)", what, a);
  return buf;
}

inline double quad(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  return integrate_finite(f, a, b).value;
}

inline double quad_inf(const std::function<double(double)>& f) { return integrate_zero_to_inf(f).value; }

// (2/pi) |sin(pi a/2)|.
inline double amp(double alpha) { return 2.0 / std::numbers::pi * std::fabs(sin_half_pi(alpha)); }

}  // namespace detail

/// Reference values used by the near-best and Bernstein-constant checks.
struct TabulatedC {
  double alpha, c1, c2;
};
inline constexpr std::array<TabulatedC, 6> tabulated_c{{
    {0.3, 0.36, 1.32}, {0.5, 0.33, 0.78}, {0.8, 0.28, 0.51},
    {1.0, 0.26, 0.45}, {1.5, 0.19, 0.41}, {1.9, 0.10, 0.49},
}};
inline constexpr std::array<double, 10> tabulated_x_05{0.13, 2.10, 4.99, 8.04, 11.13, 14.25, 17.37, 20.50, 23.63, 26.76};
inline constexpr std::array<double, 10> tabulated_x_08{0.25, 2.30, 5.15, 8.16, 11.22, 14.32, 17.43, 20.55, 23.67, 26.80};
inline constexpr std::array<double, 10> tabulated_x_10{0.34, 2.38, 5.24, 8.23, 11.28, 14.36, 17.47, 20.58, 23.70, 26.83};
inline constexpr double bernstein_inf_05 = 0.348648;
inline constexpr double bernstein_inf_1 = 0.2801694990238691;

inline TabulatedC tabulated_for(double alpha) {
  for (const auto& t : tabulated_c)
    if (std::fabs(t.alpha - alpha) < 1e-12) return t;
  throw domain_error("tabulated_for: no tabulated constants at this alpha");
}

// ---- identities -----------------------------------------------------------

inline std::vector<Check> identity_checks(const CheckOptions& o) {
  using detail::fmt_a;
  using detail::rel_err;
  constexpr double tol = 1e-9;
  constexpr std::array<double, 4> alphas{0.5, 1.0, 2.5, 5.0};
  constexpr std::array<double, 4> xs{0.1, 1.0, 5.0, 20.0};
  std::vector<Check> out;
  for (double a : alphas) {
    const double C = C_const(a);
    double ea = 0.0, eb = 0.0, ec = -1.0, ed = -1.0;
    for (double x : xs) {
      const double F = kernel_eval(KernelKind::F, a, x);
      const double H1 = kernel_eval(KernelKind::H1, a, x);
      const double H2 = kernel_eval(KernelKind::H2, a, x);
      const double H = kernel_eval(KernelKind::H, a, x);
      ea = std::max(ea, rel_err(H1, std::pow(x, a) * F));
      eb = std::max(eb, rel_err(H2, std::pow(x, a + 1.0) * F));
      ec = std::max({ec, -H2 / C, (H2 - C) / C});
      ed = std::max(ed, (std::fabs(H) - H2) / C);
    }
    out.push_back(within(fmt_a("H1 = x^a F", a), ea, tol, o));
    out.push_back(within(fmt_a("H2 = x^(a+1) F", a), eb, tol, o));
    out.push_back(compare(fmt_a("0 <= H2 <= C", a), ec, "<=", 0.0));
    out.push_back(compare(fmt_a("|H| <= H2", a), ed, "<=", 0.0));

    const double e = std::pow(a, a + 1.0) * detail::quad_inf([a](double t) { return bernlab::detail::pow_over_sinh(t, a, a); });
    out.push_back(within(fmt_a("C(a) = a^(a+1) int t^a/sinh(a t)", a), rel_err(e, C), tol, o));
    if (a > 1.0) {
      const double f = std::pow(a, a) * detail::quad_inf([a](double t) { return bernlab::detail::pow_over_sinh(t, a - 1.0, a); });
      out.push_back(within(fmt_a("C(a-1) = a^a int t^(a-1)/sinh(a t)", a), rel_err(f, C_const(a - 1.0)), tol, o));
    }

    double e2a = 0.0;
    for (double c : {0.0, 0.5, 2.0}) {
      const double lhs = detail::quad([a](double x) { return bernlab::detail::pow_exp(x, a - 1.0, a) * (1.0 - x); }, 0.0, c);
      const double rhs = std::pow(c, a) * std::exp(-a * c) / a;
      e2a = std::max(e2a, c == 0.0 ? std::fabs(lhs - rhs) : rel_err(lhs, rhs));
    }
    out.push_back(within(fmt_a("int_0^c x^(a-1) e^(-a x) (1-x) = c^a e^(-a c)/a", a), e2a, tol, o));
    if (a > 1.0) {
      const double lhs = detail::quad_inf([a](double x) { return bernlab::detail::pow_exp(x, a - 2.0, a); });
      out.push_back(within(fmt_a("int x^(a-2) e^(-a x) = Gamma(a-1)/a^(a-1)", a),
                           rel_err(lhs, bernlab::gamma(a - 1.0) / std::pow(a, a - 1.0)), tol, o));
    }
    const double g = bernlab::gamma(a) / std::pow(a, a);
    const double l1 = detail::quad_inf([a](double x) { return bernlab::detail::pow_exp(x, a - 1.0, a); });
    const double l2 = detail::quad_inf([a](double x) { return bernlab::detail::pow_exp(x, a, a); });
    out.push_back(within(fmt_a("int x^(a-1) e^(-a x) = int x^a e^(-a x) = Gamma(a)/a^a", a),
                         std::max(rel_err(l1, g), rel_err(l2, g)), tol, o));

    double hk = 0.0;
    for (int k = 1; k <= 5; ++k) hk = std::max(hk, std::fabs(kernel_eval(KernelKind::H, a, k * std::numbers::pi)) / C);
    out.push_back(within(fmt_a("H(a, k pi) = 0, k=1..5", a), hk, tol, o));
  }
  double stirling = std::numeric_limits<double>::infinity();
  for (double a : {1.0, 2.0, 5.0, 20.0})
    stirling = std::min(stirling, bernlab::gamma(a) / (std::sqrt(2.0 * std::numbers::pi / a) * std::pow(a / std::numbers::e, a)));
  out.push_back(compare("Gamma(a) / (sqrt(2 pi/a) (a/e)^a), min over a in {1,2,5,20}", stirling, ">", 1.0));
  return out;
}

// ---- limits ---------------------------------------------------------------

inline std::vector<Check> constant_checks(const CheckOptions& o) {
  constexpr double pi = std::numbers::pi;
  constexpr double zeta3 = 1.2020569031595942;
  constexpr double tol = 1e-10;
  return {
      within("C(1) = pi^2/4", detail::rel_err(C_const(1.0), pi * pi / 4.0), tol, o),
      within("C(2) = 3.5 zeta(3)", detail::rel_err(C_const(2.0), 3.5 * zeta3), tol, o),
      within("D(1) = pi/2", detail::rel_err(D_const(1.0), pi / 2.0), tol, o),
      within("Delta_1(1) = pi^2/4", detail::rel_err(delta_1_closed(1.0), pi * pi / 4.0), tol, o),
      within("Delta_2(1) = (2/pi) sqrt(pi/3)", detail::rel_err(delta_2_closed(1.0), 2.0 / pi * std::sqrt(pi / 3.0)), tol, o),
  };
}

inline std::vector<Check> limit_property_checks(const CheckOptions& o) {
  std::vector<Check> out;
  out.push_back(within("H1(1, 1e-8) -> pi/2", std::fabs(kernel_eval(KernelKind::H1, 1.0, 1e-8) - std::numbers::pi / 2.0), 1e-4, o));
  for (double a : {0.5, 2.5}) {
    out.push_back(compare(detail::fmt_a("H(a, 0) = 0", a), std::fabs(kernel_eval(KernelKind::H, a, 0.0)), "<=", 0.0));
    out.push_back(compare(detail::fmt_a("H2(a, 0) = 0", a), std::fabs(kernel_eval(KernelKind::H2, a, 0.0)), "<=", 0.0));
  }
  return out;
}

inline std::vector<Check> series_checks(const CheckOptions& o) {
  constexpr std::array<double, 5> alphas{0.5, 1.0, 1.9, 3.1, 5.3};
  std::vector<Check> out;
  for (double a : alphas) {
    double worst = 0.0;
    for (double x : {0.3, 2.0, 7.0, 15.0}) {
      const double hi = H_alpha_integral(a, x);
      const double hs = H_alpha_series(a, x);
      worst = std::max(worst, std::fabs(hs - hi) / std::max(1.0, std::fabs(hi)));
    }
    out.push_back(within(detail::fmt_a("series = integral at x in {0.3,2,7,15}", a), worst, 1e-6, o));
  }
  for (double a : alphas) {
    double worst = 0.0;
    for (int k = 1; k <= 6; ++k) {
      const double x = k * std::numbers::pi;
      const double want = std::pow(x, a);
      worst = std::max(worst, std::fabs(H_alpha_integral(a, x) - want) / std::max(1.0, want));
    }
    out.push_back(within(detail::fmt_a("H_a(k pi) = (k pi)^a, k=1..6", a), worst, 1e-9, o));
  }
  return out;
}

inline std::vector<Check> convergence_checks(const CheckOptions& o) {
  std::vector<Check> out;
  for (double a : {0.5, 1.0}) {
    const double limit = detail::amp(a) * sup_norm_H(a).norm;
    double first = 0.0, last = 0.0;
    for (int n : {16, 32, 64, 128, 256}) {
      const double s = sup_error(build_nodes(Scheme::P2, n), a).scaled_error;
      if (n == 16) first = s;
      last = s;
    }
    const double g0 = detail::rel_err(first, limit);
    const double g1 = detail::rel_err(last, limit);
    out.push_back(within(detail::fmt_a("P2 scaled error at n=256 vs (2/pi)|sin| ||H||", a), g1, 0.02, o));
    out.push_back(compare(detail::fmt_a("P2 gap at n=256 below gap at n=16", a), g1, "<", g0));
  }
  return out;
}

inline std::vector<Check> p1_limit_checks(const CheckOptions& o) {
  const double s = sup_error(build_nodes(Scheme::P1, 256), 1.0).scaled_error;
  return {within("P1 scaled error at n=256 -> 1 (alpha=1)", std::fabs(s - 1.0), 0.02, o)};
}

inline std::vector<Check> p2_bound_checks(const CheckOptions&) {
  std::vector<Check> out;
  for (double a : {0.5, 1.5}) {
    const double bound = detail::amp(a) * C_const(a) * 1.01;
    const double limit = detail::amp(a) * sup_norm_H(a).norm;
    const double s256 = sup_error(build_nodes(Scheme::P2, 256), a).scaled_error;
    out.push_back(compare(detail::fmt_a("limiting P2 error <= 1.01 (2/pi)|sin| C(a)", a), limit, "<=", bound));
    out.push_back(compare(detail::fmt_a("P2 scaled error at n=256 <= 1.01 (2/pi)|sin| C(a)", a), s256, "<=", bound));
  }
  return out;
}

// ---- asymptotics ----------------------------------------------------------

inline std::vector<Check> envelope_checks(const CheckOptions&) {
  std::vector<Check> out;
  for (double a : {2.0, 4.0, 8.0, 16.0, 32.0}) {
    const auto label = detail::fmt_a("lower <= H1(a,a) <= ||H1|| <= upper", a);
    try {
      EnvelopeBounds e = envelope_bounds(a);
      out.push_back(holds(label, true, e.norm / e.upper));
    } catch (const invariant_error&) {
      out.push_back(holds(label, false));
    }
  }
  return out;
}

inline std::vector<Check> alpha0_checks(const CheckOptions&) {
  return {
      compare("R(2.4, 2.4) < 0", R_diag(2.4), "<", 0.0),
      compare("R(3, 3) > 0", R_diag(3.0), ">", 0.0),
      in_open("alpha0 ∈ (2.54288, 2.54289)", find_alpha0(1e-7), 2.54288, 2.54289),
  };
}

inline std::vector<Check> monotonicity_checks(const CheckOptions&) {
  std::vector<Check> out;
  for (double a : {3.0, 10.0, 25.0})
    out.push_back(holds(detail::fmt_a("H1(a, .) strictly decreasing on [a, a + 6 pi]", a),
                        monotonicity_check(a, a + 6.0 * std::numbers::pi)));
  return out;
}

inline std::vector<Check> ratio_checks(const CheckOptions&) {
  std::vector<Check> out;
  double prev = std::numeric_limits<double>::infinity();
  bool trend = true;
  for (double a : {10.0, 20.0, 40.0, 80.0}) {
    const double r = norm_ratio(a);
    const double s = std::sqrt(a);
    out.push_back(in_open(detail::fmt_a("||H|| (1+2a)/C(a) in envelope bracket", a), r, 1.0 - 1.0 / s - 0.02,
                          1.0 + 2.0 / s + 0.02));
    trend = trend && std::fabs(r - 1.0) <= prev;
    prev = std::fabs(r - 1.0);
  }
  out.push_back(holds("|ratio - 1| non-increasing over a in {10,20,40,80}", trend, prev));
  return out;
}

inline std::vector<Check> watson_checks(const CheckOptions& o) {
  std::vector<Check> out;
  const auto g0 = combined_coeffs(0);
  const auto g1 = combined_coeffs(1);
  double cerr = std::max({std::fabs(g0[0] - 0.5), std::fabs(g0[1] + 5.0 / 24.0), std::fabs(g0[2] - 61.0 / 576.0),
                          std::fabs(g1[0] - 0.5), std::fabs(g1[1] + 5.0 / 24.0), std::fabs(g1[2] - 205.0 / 576.0)});
  out.push_back(within("combined coefficients (1/2, -5/24, 61/576) and (1/2, -5/24, 205/576)", cerr, 1e-14, o));
  for (auto [v, name] : {std::pair{GVariant::G_aa, "G(a,a)"}, std::pair{GVariant::G_a1a, "G(a+1,a)"}}) {
    const double k40 = watson_remainder_constant(40.0, v);
    double spread = 0.0;
    double biggest = 0.0;
    for (double a : {20.0, 40.0, 80.0}) {
      const double k = watson_remainder_constant(a, v);
      spread = std::max(spread, std::fabs(k - k40) / std::fabs(k40));
      biggest = std::max(biggest, std::fabs(k));
    }
    out.push_back(compare(std::string("order-2 remainder * a^3 bounded for ") + name, biggest, "<=", 3.0));
    out.push_back(within(std::string("order-2 remainder * a^3 stable over a in {20,40,80} for ") + name, spread, 0.5, o));
  }
  const double a = 40.0;
  const double diff = kernel_eval(KernelKind::G, a + 1.0, a) - kernel_eval(KernelKind::G, a, a);
  const double lead = std::sqrt(2.0 * std::numbers::pi / a) * std::exp(-a) / (4.0 * a * a);
  out.push_back(within("G(a+1,a) - G(a,a) vs sqrt(2 pi/a) e^-a / (4 a^2) (alpha=40)", detail::rel_err(diff, lead), 0.2, o));
  return out;
}

inline std::vector<Check> auxiliary_checks(const CheckOptions&) {
  std::vector<Check> out;
  double prev = std::numeric_limits<double>::infinity();
  bool trend = true;
  for (double a : {20.0, 40.0, 80.0}) {
    const double d = std::fabs(envelope_shift_ratio(a) - 1.0);
    if (a == 20.0) out.push_back(compare("|H1(a, a+3pi/2)/H1(a,a) - 1| (alpha=20)", d, "<=", 0.25));
    trend = trend && d < prev;
    prev = d;
  }
  out.push_back(holds("|H1(a, a+3pi/2)/H1(a,a) - 1| decreasing over a in {20,40,80}", trend, prev));
  for (double a : {20.0, 50.0})
    out.push_back(compare(detail::fmt_a("G(a+1,a) - (1+a^-3) G(a,a) > 0", a), G_step_margin(a), ">", 0.0));
  return out;
}

// ---- remez ----------------------------------------------------------------

inline std::vector<Check> remez_checks(const CheckOptions& o) {
  const std::vector<int> degrees{8, 16, 32, 64};
  return {
      within("E_2(|x|) = 1/8", std::fabs(best_poly(1.0, 1).E_n - 0.125), 1e-8, o),
      within("extrapolated Delta_inf(1) vs 0.2802", std::fabs(bernstein_extrapolate(1.0, degrees) - 0.2802), 0.005, o),
      within("extrapolated Delta_inf(0.5) vs 0.3486", std::fabs(bernstein_extrapolate(0.5, degrees) - 0.3486), 0.005, o),
      within("E on [-2,2] / E on [-1,1] = 2^1 (alpha=1, n=1)", std::fabs(scaling_check(1.0, 1, 2.0) - 2.0), 1e-8, o),
      within("E on [-4,4] / E on [-1,1] = 4^0.5 (alpha=0.5, n=2)", std::fabs(scaling_check(0.5, 2, 4.0) - 2.0), 1e-8, o),
  };
}

// ---- nearbest -------------------------------------------------------------

inline std::vector<Check> nearbest_checks(const CheckOptions& o) {
  std::vector<Check> out;
  NearBestSolution s05, s10;
  for (double a : {0.3, 0.5, 1.0, 1.5, 1.9}) {
    NearBestSolution s = optimize_c(a);
    const TabulatedC t = tabulated_for(a);
    out.push_back(within(detail::fmt_a("optimal (c1, c2) vs tabulated", a),
                         std::max(std::fabs(s.c1 - t.c1), std::fabs(s.c2 - t.c2)), 0.03, o));
    out.push_back(holds(detail::fmt_a("x_j in [(j-3/2)pi, (j-1/2)pi], j=2..10, at optimal c", a), s.interp_brackets_ok));
    if (a == 0.5) s05 = s;
    if (a == 1.0) s10 = s;
  }
  const std::array<const std::array<double, 10>*, 3> rows{&tabulated_x_05, &tabulated_x_08, &tabulated_x_10};
  const std::array<double, 3> row_alpha{0.5, 0.8, 1.0};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const TabulatedC t = tabulated_for(row_alpha[r]);
    const auto x = interp_points(t.alpha, t.c1, t.c2, 10);
    double worst = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) worst = std::max(worst, std::fabs(x[j] - (*rows[r])[j]));
    out.push_back(within(detail::fmt_a("x_1..x_10 at tabulated c vs tabulated x", t.alpha), worst, 0.05, o));
    out.push_back(holds(detail::fmt_a("x_j in [(j-3/2)pi, (j-1/2)pi], j=2..10, at tabulated c", t.alpha),
                        interp_brackets_hold(x)));
  }
  out.push_back(in_open("near-best minimax in [Delta, 1.1 Delta] (alpha=0.5)", s05.minimax, bernstein_inf_05 * (1 - 1e-12),
                        1.1 * bernstein_inf_05));
  out.push_back(in_open("near-best minimax in [Delta, 1.1 Delta] (alpha=1)", s10.minimax, bernstein_inf_1 * (1 - 1e-12),
                        1.1 * bernstein_inf_1));
  return out;
}

// ---- registry -------------------------------------------------------------

struct CheckGroup {
  std::string name;
  std::function<std::vector<Check>(const CheckOptions&)> run;
};

inline std::vector<CheckGroup> suite_groups(const std::string& suite) {
  std::vector<CheckGroup> g;
  const bool all = suite == "all";
  if (all || suite == "identities") g.push_back({"identities", identity_checks});
  if (all || suite == "limits") {
    g.push_back({"closed-form constants", constant_checks});
    g.push_back({"limits at zero", limit_property_checks});
    g.push_back({"interpolating series", series_checks});
    g.push_back({"P2 convergence", convergence_checks});
    g.push_back({"P1 limit at alpha=1", p1_limit_checks});
    g.push_back({"P2 upper estimate", p2_bound_checks});
  }
  if (all || suite == "asymptotics") {
    g.push_back({"envelope bounds", envelope_checks});
    g.push_back({"first zero of R(a,a)", alpha0_checks});
    g.push_back({"H1 monotonicity", monotonicity_checks});
    g.push_back({"norm ratio", ratio_checks});
    g.push_back({"Laplace expansions", watson_checks});
    g.push_back({"auxiliary inequalities", auxiliary_checks});
  }
  if (all || suite == "remez") g.push_back({"best approximation", remez_checks});
  if (all || suite == "nearbest") g.push_back({"near-best construction", nearbest_checks});
  if (g.empty()) throw domain_error("suite_groups: unknown suite '" + suite + "'");
  return g;
}

}  // namespace bernlab::cli
