#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace rsn::sf {

// Sine integral Si(x) = int_0^x sin(t)/t dt.  Power series for |x| <= 2,
// Lentz continued fraction for E1(ix) above; absolute error < 1e-14.
double si(double x);

// Cosine integral Ci(x) for x > 0.
double ci(double x);

// int_1^inf sin(a t)/t dt = sgn(a) * (pi/2 - Si(|a|)).
double sin_tail(double a);

// int_1^inf cos(a t + phi) / t^m dt for integer m >= 1 (a != 0 when m == 1).
// Reduced to Si/Ci by integration by parts.
double cos_power_tail(int m, double a, double phi);

// Gamma(z) for complex z, Lanczos approximation with reflection.
std::complex<double> gamma(std::complex<double> z);

// Gauss-Legendre nodes and weights on [-1,1]; cached per order.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int m);

// Adaptive Gauss-Legendre quadrature of f on [a,b] to absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, int max_depth = 40);

// zeta'(-1); enters the Dyson tail constant.  An independent
// Euler-Maclaurin evaluation lives in the test suite.
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

}  // namespace rsn::sf
