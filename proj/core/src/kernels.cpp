#include "rsn/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rsn/common.hpp"
#include "rsn/special_functions.hpp"

namespace rsn {

double k_edge(int x1, double u1, int x2, double u2) {
  if (u1 < 0 || u2 < 0) throw std::domain_error("k_edge: u >= 0 required");
  if (x2 >= x1) {
    auto f = [&](double t) {
      return std::pow(t, x2 - x1) * std::cos(t * u1 + kPi * x1 / 2) *
             std::cos(t * u2 + kPi * x2 / 2);
    };
    return 2.0 / kPi * sf::integrate(f, 0.0, 1.0, 1e-13);
  }
  if (x2 == x1 - 1) {
    // -(1/pi) [(-1)^x1 int_1^inf sin((u1+u2)t)/t dt + int_1^inf sin((u2-u1)t)/t dt]
    double sgn = (x1 % 2 == 0) ? 1.0 : -1.0;
    return -(sgn * sf::sin_tail(u1 + u2) + sf::sin_tail(u2 - u1)) / kPi;
  }
  // x2 <= x1 - 2: product-to-sum, then int_1^inf cos(a t + phi)/t^m dt.
  int m = x1 - x2;
  return -(sf::cos_power_tail(m, u1 - u2, kPi * (x1 - x2) / 2) +
           sf::cos_power_tail(m, u1 + u2, kPi * (x1 + x2) / 2)) /
         kPi;
}

double k_edge_diagonal(int x, double u1, double u2) {
  if (u1 < 0 || u2 < 0) throw std::domain_error("k_edge_diagonal: u >= 0 required");
  auto sinc = [](double a) { return a == 0.0 ? 1.0 : std::sin(a) / a; };
  double sgn = (x % 2 == 0) ? 1.0 : -1.0;
  return (sinc(u1 - u2) + sgn * sinc(u1 + u2)) / kPi;
}

double expected_count(int x, double a, double b) {
  if (a < 0 || a > b) throw std::domain_error("expected_count: 0 <= a <= b required");
  double sgn = (x % 2 == 0) ? 1.0 : -1.0;
  return (b - a) / kPi + sgn / (2 * kPi) * (sf::si(2 * b) - sf::si(2 * a));
}

std::complex<double> g_lambda(const YoungDiagram& shape, int n, std::complex<double> u) {
  if (n < shape.num_rows()) throw std::domain_error("g_lambda: n >= l(lambda) required");
  std::complex<double> den = 1.0;
  for (int i = 1; i <= n; ++i) {
    std::complex<double> factor = u - static_cast<double>(shape.row(i)) + static_cast<double>(i);
    if (std::abs(factor) < 1e-9) {
      std::ostringstream msg;
      msg << "g_lambda: pole at u = " << shape.row(i) - i << " (i = " << i << ")";
      throw std::domain_error(msg.str());
    }
    den *= factor;
  }
  return sf::gamma(u + 1.0 + static_cast<double>(n)) / den;
}

namespace {

struct ContourNodes {
  // Per circle: node values f(center + r e^{i theta}) * (d/dtheta of the
  // parameterization) / (2 pi i), so a plain node average gives the contour
  // integral / (2 pi i).
  std::vector<std::vector<std::complex<double>>> factors;
  std::vector<std::vector<std::complex<double>>> nodes;  // node positions
};

// Evaluate one side's per-node factors on circles around 0..K-1.
// limit_at_one: drop all circles but the 0-circle and replace (1-t)^s by 1.
template <typename F>
ContourNodes side_nodes(int K, double radius, int num_nodes, bool limit_at_one, F f) {
  ContourNodes out;
  int circles = limit_at_one ? std::min(K, 1) : K;
  out.factors.resize(circles);
  out.nodes.resize(circles);
  for (int c = 0; c < circles; ++c) {
    out.factors[c].resize(num_nodes);
    out.nodes[c].resize(num_nodes);
    for (int a = 0; a < num_nodes; ++a) {
      double th = 2 * kPi * a / num_nodes;
      std::complex<double> e(std::cos(th), std::sin(th));
      std::complex<double> s = static_cast<double>(c) + radius * e;
      // dz/dtheta = i r e^{i theta}; dividing by 2 pi i leaves r e / N.
      out.nodes[c][a] = s;
      out.factors[c][a] = f(s) * (radius * e) / static_cast<double>(num_nodes);
    }
  }
  return out;
}

}  // namespace

KLambdaResult k_lambda(const YoungDiagram& shape, int n, int x1, double t1, int x2,
                       double t2, const ContourConfig& config) {
  if (n < shape.num_rows()) throw std::domain_error("k_lambda: n >= l(lambda) required");
  if (!(t1 >= 0 && t1 <= 1 && t2 >= 0 && t2 <= 1))
    throw std::domain_error("k_lambda: t1, t2 in [0,1] required");
  if (config.z_radius < 0.1 || config.z_radius > 0.5 || config.w_radius < 0.1 ||
      config.w_radius >= config.z_radius || config.z_radius - config.w_radius < 0.1)
    throw std::domain_error("k_lambda: contour radii violate the margin invariants");

  KLambdaResult res;
  int d = x1 - x2;
  double indicator = 0.0;
  if (t2 > t1 && x1 > x2) {
    double fact = 1.0;
    for (int k = 2; k <= d - 1; ++k) fact *= k;
    indicator = std::pow(t1 - t2, d - 1) / fact;
  }

  long lam1 = shape.rows.empty() ? 0 : shape.rows[0];
  int Kz = static_cast<int>(lam1 - x2);
  int Kw = n + x1;
  if (Kz <= 0 || Kw <= 0) {
    res.value = indicator;
    return res;
  }

  const double c = x2 - x1 + 1;
  const bool z_limit = (t2 == 1.0);
  const bool w_limit = (t1 == 1.0);

  auto fz = [&](std::complex<double> z) {
    std::complex<double> pw = z_limit ? 1.0 : std::pow(1.0 - t2, z);
    return g_lambda(shape, n, z + static_cast<double>(x2)) / sf::gamma(z + 1.0) * pw;
  };
  auto fw = [&](std::complex<double> w) {
    std::complex<double> pw = w_limit ? 1.0 : std::pow(1.0 - t1, w);
    return sf::gamma(-w) / g_lambda(shape, n, static_cast<double>(x1) - 1.0 - w) * pw;
  };

  int nodes = std::max(16, static_cast<int>(config.nodes_per_unit * 2 * kPi * config.z_radius));
  double prev = 0.0;
  bool have_prev = false;
  for (int stage = 0; stage <= config.max_doublings; ++stage, nodes *= 2) {
    ContourNodes zn = side_nodes(Kz, config.z_radius, nodes, z_limit, fz);
    ContourNodes wn = side_nodes(Kw, config.w_radius, nodes, w_limit, fw);

    std::complex<double> total = 0.0;
    for (size_t zc = 0; zc < zn.factors.size(); ++zc)
      for (size_t wc = 0; wc < wn.factors.size(); ++wc)
        for (int az = 0; az < nodes; ++az)
          for (int aw = 0; aw < nodes; ++aw)
            total += zn.factors[zc][az] * wn.factors[wc][aw] /
                     (wn.nodes[wc][aw] + zn.nodes[zc][az] + c);
    // Each node factor carries f(s) dz / (2 pi i), so the plain double sum
    // over node pairs is already the (2 pi i)^-2 double contour integral.

    double value = total.real();
    res.imag_residual = std::abs(total.imag());
    if (have_prev) {
      res.richardson_change = std::abs(value - prev);
      if (res.richardson_change <= config.richardson_tol) {
        res.value = indicator + value;
        res.nodes_z = nodes;
        res.nodes_w = nodes;
        if (res.imag_residual > config.imag_tol)
          throw NumericalError("k_lambda: imaginary residual above tolerance");
        return res;
      }
    }
    prev = value;
    have_prev = true;
  }
  throw NumericalError("k_lambda: node doubling did not stabilize");
}

}  // namespace rsn
