#pragma once

#include <vector>

#include "rsn/special_functions.hpp"

namespace rsn {

// Gauss-Legendre discretization of [0,t] for the Nystrom method.
struct NystromGrid {
  double t = 0.0;
  int m = 0;
  std::vector<double> nodes;    // strictly inside (0,t)
  std::vector<double> weights;  // sum to t

  static NystromGrid build(double t, int m);
};

// Constants of the Dyson tail expansion
//   log F(t) = -t^2/4 - t/2 - (1/8) log t + (7/24) log 2 + (3/2) zeta'(-1) + o(1).
struct DysonConstants {
  double zeta_prime_minus_one = sf::kZetaPrimeMinusOne;
  double c0() const;  // (7/24) log 2 + (3/2) zeta'(-1)
};

// Gap probability F(t) = P(no edge-process points on {0} x [0,t])
//   = det(I - K) on L^2[0,t],  K(u,v) = sin(u-v)/(pi(u-v)) + sin(u+v)/(pi(u+v)),
// via the symmetrized Nystrom determinant det[delta_ij - sqrt(w_i w_j) K(u_i,u_j)].
// Equals P(T_FS > t) for the rescaled first-swap time.
double gap_probability(double t, int m = 96);

// P(T_FS <= t) = 1 - gap_probability(t).
double first_swap_cdf(double t, int m = 96);

// Joint tail P(T_- > a, T_+ > b) = gap_probability(a + b).
double gap_joint(double a, double b, int m = 96);

// Density of the size-biased gap: g * F''(g), F'' by Richardson-extrapolated
// central differences (step max(1e-3, 1e-2 g)); clipped at 0.
double gap_density(double g, int m = 96);

// CDF of the size-biased gap: 1 + g F'(g) - F(g).
double gap_cdf(double g, int m = 96);

// The Dyson expansion value (log scale, without the o(1)); t > 0.
double dyson_tail(double t);

}  // namespace rsn
