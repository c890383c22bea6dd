// Scaled sup errors of the two Chebyshev interpolants of |x|^alpha and the
// limits they approach.
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "bernlab/chebinterp.hpp"
#include "bernlab/kernels.hpp"

int main(int argc, char** argv) {
  const double alpha = argc > 1 ? std::atof(argv[1]) : 0.5;
  const double amp = 2.0 / std::numbers::pi * std::fabs(bernlab::sin_half_pi(alpha));
  std::printf("alpha = %g\n", alpha);
  std::printf("P2 limit (2/pi)|sin(pi a/2)| ||H||      = %.10f\n", amp * bernlab::sup_norm_H(alpha).norm);
  std::printf("P1 limit at 0 (2/pi)|sin(pi a/2)| D(a)  = %.10f\n", amp * bernlab::D_const(alpha));
  std::printf("%6s %16s %16s\n", "n", "P1", "P2");
  for (int n = 8; n <= 256; n *= 2) {
    auto e1 = bernlab::sup_error(bernlab::build_nodes(bernlab::Scheme::P1, n), alpha);
    auto e2 = bernlab::sup_error(bernlab::build_nodes(bernlab::Scheme::P2, n), alpha);
    std::printf("%6d %16.10f %16.10f\n", n, e1.scaled_error, e2.scaled_error);
  }
}
