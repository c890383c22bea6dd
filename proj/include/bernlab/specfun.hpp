#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/sin_pi.hpp>

#include "bernlab/error.hpp"

namespace bernlab {

/// Largest argument whose Gamma value is finite in double precision.
inline constexpr double gamma_max_arg = 171.62437695630272;

inline double gamma(double x) {
  if (!(x > 0.0)) throw domain_error("gamma: argument must be positive");
  if (x > gamma_max_arg) throw overflow_error("gamma: result overflows double");
  return std::tgamma(x);
}

namespace detail {

// B_{2j} / (2j)! for j = 1..10.
inline constexpr std::array<double, 10> bernoulli_over_factorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

// sum_{k>=0} (scale*(q+k))^{-s} by Euler-Maclaurin.  Keeping the scale
// inside each power avoids overflow of the bare Hurwitz value at large s.
inline double em_power_sum(double s, double q, double scale) {
  const int n = 12 + static_cast<int>(std::ceil(s));
  double sum = 0.0;
  for (int k = n - 1; k >= 0; --k) sum += std::pow(scale * (q + k), -s);

  const double a = q + n;
  const double head = std::pow(scale * a, -s);
  double tail = head * a / (s - 1.0) + 0.5 * head;

  // Rising product s(s+1)...(s+2j-2) times a^{-2j+1}.
  double rising = s;
  double apow = 1.0 / a;
  for (std::size_t j = 0; j < bernoulli_over_factorial.size(); ++j) {
    tail += bernoulli_over_factorial[j] * rising * apow * head;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    apow /= a * a;
  }
  return sum + tail;
}

}  // namespace detail

/// Hurwitz zeta sum_{k>=0} (q+k)^{-s}.
inline double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw domain_error("hurwitz_zeta: need s > 1");
  if (!(q > 0.0)) throw domain_error("hurwitz_zeta: need q > 0");
  return detail::em_power_sum(s, q, 1.0);
}

/// Riemann zeta for real s > 1.
inline double zeta(double s) {
  if (!(s > 1.0)) throw domain_error("zeta: need s > 1");
  return detail::em_power_sum(s, 1.0, 1.0);
}

/// 2 * sum_{n>=0} (2n+1)^{-s}, which equals zeta(s)(2 - 2^{1-s}).
inline double odd_zeta(double s) {
  if (!(s > 1.0)) throw domain_error("odd_zeta: need s > 1");
  return 2.0 * detail::em_power_sum(s, 0.5, 2.0);
}

/// Dirichlet beta sum_{n>=0} (-1)^n (2n+1)^{-s}, s > 0.
///
/// Cohen-Villegas-Zagier acceleration; (2n+1)^{-s} is a moment sequence so
/// the error falls like 5.8^{-terms}.
inline double dirichlet_beta(double s) {
  if (!(s > 0.0)) throw domain_error("dirichlet_beta: need s > 0");
  constexpr int terms = 30;
  double d = std::pow(3.0 + std::sqrt(8.0), terms);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    sum += c * std::pow(2.0 * k + 1.0, -s);
    b *= static_cast<double>(k + terms) * (k - terms) / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

/// sum_{n>=0} (-1)^n / (2n+1)^{alpha+2}.
inline double alternating_odd_sum(double alpha) {
  if (!(alpha > -1.0)) throw domain_error("alternating_odd_sum: need alpha > -1");
  return dirichlet_beta(alpha + 2.0);
}

/// sin(pi*a/2), exactly zero at even integers.
inline double sin_half_pi(double a) { return boost::math::sin_pi(0.5 * a); }

inline double chebyshev_T(int n, double x) {
  if (n < 0) throw domain_error("chebyshev_T: negative degree");
  if (!(std::fabs(x) <= 1.0)) throw domain_error("chebyshev_T: |x| must not exceed 1");
  return std::cos(n * std::acos(x));
}

}  // namespace bernlab
