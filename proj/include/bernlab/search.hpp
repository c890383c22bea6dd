#pragma once

// One- and two-dimensional derivative-free search helpers.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

#include <boost/math/tools/roots.hpp>

#include "bernlab/error.hpp"

namespace bernlab {

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for a maximum of f on [a, b].  Assumes f is
/// unimodal on the bracket; otherwise returns some local maximum.
template <class F>
Extremum golden_max(const F& f, double a, double b, double tol = 1e-10, int max_iter = 200) {
  constexpr double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol * (1.0 + std::fabs(a) + std::fabs(b)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc > fd ? Extremum{c, fc} : Extremum{d, fd};
}

/// Refine a sampled maximum: golden search on the two neighbouring grid
/// cells, keeping whichever of grid value and refined value is larger.
template <class F>
Extremum refine_max(const F& f, double lo, double hi, Extremum seed, double tol = 1e-10) {
  Extremum r = golden_max(f, lo, hi, tol);
  return r.value >= seed.value ? r : seed;
}

/// Root of f on [a, b] by bisection; f(a), f(b) must differ in sign.
template <class F>
double bisect_root(const F& f, double a, double b, double tol) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw domain_error("bisect_root: no sign change in bracket");
  std::uintmax_t max_iter = 200;
  auto done = [tol](double lo, double hi) { return std::fabs(hi - lo) <= tol; };
  auto r = boost::math::tools::bisect(f, a, b, done, max_iter);
  return 0.5 * (r.first + r.second);
}

struct SimplexResult {
  std::array<double, 2> x;
  double value;
  int iterations;
  bool converged;
};

/// Nelder-Mead minimisation in two variables.
template <class F>
SimplexResult nelder_mead_2d(const F& f, std::array<double, 2> start, std::array<double, 2> step,
                             double xtol = 1e-4, int max_iter = 400) {
  using Pt = std::array<double, 2>;
  std::array<Pt, 3> p = {start, Pt{start[0] + step[0], start[1]}, Pt{start[0], start[1] + step[1]}};
  std::array<double, 3> v = {f(p[0]), f(p[1]), f(p[2])};

  auto lerp = [](const Pt& a, const Pt& b, double t) {
    return Pt{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };
  auto order = [&] {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return v[i] < v[j]; });
    std::array<Pt, 3> q = {p[idx[0]], p[idx[1]], p[idx[2]]};
    std::array<double, 3> w = {v[idx[0]], v[idx[1]], v[idx[2]]};
    p = q;
    v = w;
  };
  auto size = [&] {
    double s = 0.0;
    for (int i = 1; i < 3; ++i)
      for (int k = 0; k < 2; ++k) s = std::max(s, std::fabs(p[i][k] - p[0][k]));
    return s;
  };

  int it = 0;
  for (; it < max_iter; ++it) {
    order();
    if (size() <= xtol) break;
    Pt centroid = {0.5 * (p[0][0] + p[1][0]), 0.5 * (p[0][1] + p[1][1])};
    Pt xr = lerp(centroid, p[2], -1.0);
    double fr = f(xr);
    if (fr < v[0]) {
      Pt xe = lerp(centroid, p[2], -2.0);
      double fe = f(xe);
      if (fe < fr) {
        p[2] = xe;
        v[2] = fe;
      } else {
        p[2] = xr;
        v[2] = fr;
      }
    } else if (fr < v[1]) {
      p[2] = xr;
      v[2] = fr;
    } else {
      bool outside = fr < v[2];
      Pt xc = outside ? lerp(centroid, xr, 0.5) : lerp(centroid, p[2], 0.5);
      double fc = f(xc);
      if (fc < (outside ? fr : v[2])) {
        p[2] = xc;
        v[2] = fc;
      } else {
        for (int i = 1; i < 3; ++i) {
          p[i] = lerp(p[0], p[i], 0.5);
          v[i] = f(p[i]);
        }
      }
    }
  }
  order();
  return {p[0], v[0], it, size() <= xtol};
}

}  // namespace bernlab
