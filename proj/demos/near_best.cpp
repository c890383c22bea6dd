// Optimal near-best coefficients and the finite-n error of the combined
// polynomial against plain P2 and the best polynomial.
#include <cstdio>
#include <cstdlib>

#include "bernlab/chebinterp.hpp"
#include "bernlab/nearbest.hpp"
#include "bernlab/remez.hpp"

int main(int argc, char** argv) {
  const double alpha = argc > 1 ? std::atof(argv[1]) : 1.0;
  auto s = bernlab::optimize_c(alpha);
  std::printf("alpha = %g  c1 = %.4f  c2 = %.4f  sup|e| = %.6f\n", alpha, s.c1, s.c2, s.minimax);
  std::printf("zeros of e:");
  for (double x : s.interp_points) std::printf(" %.4f", x);
  std::printf("\n%6s %12s %12s %12s\n", "n", "P2", "P3", "best");
  for (int n : {4, 8, 16, 32}) {
    double p2 = bernlab::sup_error(bernlab::build_nodes(bernlab::Scheme::P2, n), alpha).scaled_error;
    double p3 = bernlab::P3Polynomial(alpha, n, s.c1, s.c2).sup_error().scaled_error;
    double best = std::pow(2.0 * n, alpha) * bernlab::best_poly(alpha, n).E_n;
    std::printf("%6d %12.6f %12.6f %12.6f\n", n, p2, p3, best);
  }
}
