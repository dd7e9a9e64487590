#pragma once

#include <complex>
#include <string>

#include "rsn/tableau.hpp"

namespace rsn {

// Query for the limiting edge kernel K_edge(x1,u1; x2,u2).
struct EdgeKernelQuery {
  int x1 = 0, x2 = 0;
  double u1 = 0.0, u2 = 0.0;
};

// Query for the finite-shape kernel K_lambda; n >= l(shape).
struct LambdaKernelQuery {
  YoungDiagram shape;
  int n = 0;
  int x1 = 0, x2 = 0;
  double t1 = 0.0, t2 = 0.0;
};

// Closed integral form of the edge kernel:
//   x2 >= x1 :  (2/pi) int_0^1 t^(x2-x1) cos(t u1 + pi x1/2) cos(t u2 + pi x2/2) dt
//   x2 <  x1 : -(2/pi) int_1^inf  (same integrand) dt,
// the x2 = x1-1 case reduced to sine integrals, the x2 <= x1-2 case to
// Si/Ci by parts.  Values on the null set u1 = u2, x2 = x1-1 follow the
// displayed integral form.
double k_edge(int x1, double u1, int x2, double u2);
inline double k_edge(const EdgeKernelQuery& q) { return k_edge(q.x1, q.u1, q.x2, q.u2); }

// One-line marginal kernel:
//   sin(u1-u2)/(pi (u1-u2)) + (-1)^x sin(u1+u2)/(pi (u1+u2)),
// removable singularities taken by limit.
double k_edge_diagonal(int x, double u1, double u2);

// Expected number of edge-process points on {x} x [a,b]:
//   (b-a)/pi + ((-1)^x / 2pi) int_{2a}^{2b} sin(u)/u du.
double expected_count(int x, double a, double b);

// G_lambda(u) = Gamma(u+1+n) / prod_{i=1}^n (u - lambda_i + i), n >= l(lambda).
// Throws std::domain_error at (or within 1e-9 of) a pole u = lambda_i - i.
std::complex<double> g_lambda(const YoungDiagram& shape, int n, std::complex<double> u);

// Contour discretization for k_lambda.  Contours are counterclockwise
// circles around each enclosed integer; the z-radius / w-radius split keeps
// every contour point at least `margin` >= 0.1 from the integers and the
// denominator w + z + x2 - x1 + 1 at least z_radius - w_radius >= 0.1 in
// modulus away from zero.
struct ContourConfig {
  double z_radius = 0.4;
  double w_radius = 0.25;
  int nodes_per_unit = 64;       // quadrature nodes per unit of arc length
  double richardson_tol = 1e-8;  // node-doubling stability target
  double imag_tol = 1e-6;        // max acceptable imaginary residual
  int max_doublings = 6;
};

struct KLambdaResult {
  double value = 0.0;
  double imag_residual = 0.0;
  int nodes_z = 0;  // per z-circle
  int nodes_w = 0;
  double richardson_change = 0.0;
};

// Finite-shape jump kernel of the Poissonized tableau process:
//   K_lambda(x1,t1;x2,t2) = 1{t2>t1, x1>x2} (t1-t2)^(x1-x2-1)/(x1-x2-1)!
//     + (2 pi i)^-2 oint oint Gamma(-w)/Gamma(z+1)
//         * G_lambda(z+x2)/G_lambda(x1-1-w)
//         * (1-t2)^z (1-t1)^w / (w+z+x2-x1+1) dz dw,
// z-contour around the integers [0, lambda_1 - x2), w-contour around
// [0, n + x1).  t1 or t2 equal to 1 is evaluated in the limit (only the
// z=0 / w=0 residue survives).  Throws NumericalError if the imaginary
// residual exceeds the tolerance or node doubling fails to stabilize.
KLambdaResult k_lambda(const YoungDiagram& shape, int n, int x1, double t1, int x2,
                       double t2, const ContourConfig& config = {});
inline KLambdaResult k_lambda(const LambdaKernelQuery& q, const ContourConfig& config = {}) {
  return k_lambda(q.shape, q.n, q.x1, q.t1, q.x2, q.t2, config);
}

}  // namespace rsn
