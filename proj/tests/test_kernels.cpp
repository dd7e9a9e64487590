#include <doctest.h>

#include <cmath>
#include <array>

#include "rsn/common.hpp"
#include "rsn/jumps.hpp"
#include "rsn/kernels.hpp"
#include "rsn/rng.hpp"
#include "rsn/special_functions.hpp"

using namespace rsn;

TEST_SUITE_BEGIN("kernels");

// Frozen from a 30-digit evaluation of the integral forms.
TEST_CASE("k_edge reference values across branches") {
  CHECK(k_edge(0, 0.7, 2, 1.1) == doctest::Approx(-0.122325339224754734).epsilon(1e-10));
  CHECK(k_edge(-1, 0.8, 2, 2.2) == doctest::Approx(0.0231967872785981863).epsilon(1e-10));
  CHECK(k_edge(0, 1.3, 0, 0.4) == doctest::Approx(0.462725640990077174).epsilon(1e-10));
  // x2 = x1 - 1 (sine-integral reduction)
  CHECK(k_edge(1, 0.9, 0, 0.3) == doctest::Approx(0.460090407747918912).epsilon(1e-12));
  CHECK(k_edge(0, 0.9, -1, 0.3) == doctest::Approx(0.165495163356568549).epsilon(1e-12));
  CHECK(k_edge(2, 3.0, 1, 1.0) == doctest::Approx(0.0486346191228102035).epsilon(1e-12));
  CHECK(k_edge(-1, 0.25, -2, 2.0) == doctest::Approx(-0.0723275751307024903).epsilon(1e-12));
  // x2 <= x1 - 2 (Si/Ci reduction)
  CHECK(k_edge(2, 1.2, 0, 0.5) == doctest::Approx(-0.06135455889077921).epsilon(1e-12));
  CHECK(k_edge(3, 2.5, 0, 0.4) == doctest::Approx(0.0234793631286191295).epsilon(1e-12));
  CHECK(k_edge(1, 4.0, -2, 1.5) == doctest::Approx(0.000263418556273331373).epsilon(1e-9));
}

TEST_CASE("zero-argument limit values (x2 != x1 - 1)") {
  // L = (2/pi) cos(pi x1/2) cos(pi x2/2) / (x2 - x1 + 1).  The kernel is
  // differentiable at u = 0 with slope
  // L1 = -(2/pi)(u1 sin X1 cos X2 + u2 cos X1 sin X2)/(x2 - x1 + 2), so the
  // first-order-corrected value is accurate to O(u^2); for same-parity
  // pairs L1 = 0 and this is the plain limit comparison.
  CHECK(k_edge(0, 0.0, 2, 0.0) == doctest::Approx(-2 / (3 * kPi)).epsilon(1e-10));
  const double u = 1e-5;
  for (int x1 = -3; x1 <= 3; ++x1)
    for (int x2 = -3; x2 <= 3; ++x2) {
      if (x2 == x1 - 1) continue;
      double c1 = std::cos(kPi * x1 / 2), c2 = std::cos(kPi * x2 / 2);
      double s1 = std::sin(kPi * x1 / 2), s2 = std::sin(kPi * x2 / 2);
      double L = 2 / kPi * c1 * c2 / (x2 - x1 + 1);
      double L1;
      if (x2 == x1 - 2) {
        // the x2 - x1 + 2 matching degenerates; the tail form gives the slope
        L1 = std::cos(kPi * (x1 + x2) / 2);
      } else {
        L1 = -2 / kPi * (s1 * c2 + c1 * s2) / (x2 - x1 + 2);
      }
      CHECK(std::abs(k_edge(x1, u, x2, u) - L - u * L1) < 1e-6);
      // plain limit comparison where the slope vanishes
      if ((x1 + x2) % 2 == 0 && x2 != x1 - 2)
        CHECK(std::abs(k_edge(x1, u, x2, u) - L) < 1e-6);
    }
}

TEST_CASE("translation invariance by even shifts") {
  Rng rng(51);
  for (int rep = 0; rep < 40; ++rep) {
    int x1 = static_cast<int>(rng.next_below(5)) - 2;
    int x2 = static_cast<int>(rng.next_below(5)) - 2;
    double u1 = 6 * rng.next_double(), u2 = 6 * rng.next_double();
    double base = k_edge(x1, u1, x2, u2);
    for (int h = -3; h <= 3; ++h)
      CHECK(std::abs(k_edge(x1 + 2 * h, u1, x2 + 2 * h, u2) - base) < 1e-9);
  }
  // the spec's sample identity
  Rng rng2(52);
  for (int rep = 0; rep < 10; ++rep) {
    double u1 = 5 * rng2.next_double(), u2 = 5 * rng2.next_double();
    CHECK(std::abs(k_edge(3, u1, 5, u2) - k_edge(1, u1, 3, u2)) < 1e-9);
  }
}

TEST_CASE("reflection identity") {
  Rng rng(53);
  for (int rep = 0; rep < 60; ++rep) {
    int x1 = static_cast<int>(rng.next_below(7)) - 3;
    int x2 = static_cast<int>(rng.next_below(7)) - 3;
    double u1 = 5 * rng.next_double(), u2 = 5 * rng.next_double();
    double lhs = k_edge(-x1, u1, -x2, u2);
    double sgn = ((x1 - x2) % 2 == 0) ? 1.0 : -1.0;
    double rhs = sgn * k_edge(x2, u2, x1, u1);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("diagonal closed form") {
  CHECK(k_edge_diagonal(0, 0.0, 0.0) == doctest::Approx(2 / kPi).epsilon(1e-14));
  CHECK(k_edge_diagonal(2, 0.0, 0.0) == doctest::Approx(2 / kPi).epsilon(1e-14));
  CHECK(k_edge_diagonal(1, kPi / 2, kPi / 2) == doctest::Approx(1 / kPi).epsilon(1e-14));
  Rng rng(54);
  for (int rep = 0; rep < 50; ++rep) {
    int x = static_cast<int>(rng.next_below(9)) - 4;
    double u1 = 8 * rng.next_double(), u2 = 8 * rng.next_double();
    CHECK(k_edge_diagonal(x, u1, u2) == k_edge_diagonal(x, u2, u1));
    CHECK(std::abs(k_edge(x, u1, x, u2) - k_edge_diagonal(x, u1, u2)) < 1e-9);
  }
}

TEST_CASE("ode check: d/dt[t^(x2-x1+1) f] matches the integrand") {
  auto rhs = [](int x1, int x2, double u1, double u2, double t) {
    return 2 / kPi * std::pow(t, x2 - x1) * std::cos(t * u1 + kPi * x1 / 2) *
           std::cos(t * u2 + kPi * x2 / 2);
  };
  const double h = 1e-4;
  for (auto [x1, x2] : std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {-1, 2}, {2, 0}, {3, 0}}) {
    double u1 = 1.7, u2 = 0.6;
    for (double t = 0.2; t <= 2.0; t += 0.3) {
      auto g = [&](double s) {
        return std::pow(s, x2 - x1 + 1) * k_edge(x1, s * u1, x2, s * u2);
      };
      double lhs = (g(t + h) - g(t - h)) / (2 * h);
      CHECK(std::abs(lhs - rhs(x1, x2, u1, u2, t)) < 1e-5);
    }
  }
}

TEST_CASE("kernel decay bound") {
  double worst = 0.0;
  for (int x1 = -5; x1 <= 5; ++x1)
    for (int x2 = -5; x2 <= 5; ++x2)
      for (double u1 = 0; u1 <= 20; u1 += 2.5)
        for (double u2 = 0; u2 <= 20; u2 += 2.5) {
          double v = std::abs(k_edge(x1, u1, x2, u2));
          REQUIRE(std::isfinite(v));
          double scale = std::max(static_cast<double>(std::abs(x1 - x2)), std::abs(u1 - u2)) + 1.0;
          worst = std::max(worst, v * scale);
        }
  CHECK(worst <= 5.0);
}

TEST_CASE("expected_count formula") {
  CHECK(expected_count(0, 0.3, 0.3) == 0.0);
  CHECK(expected_count(0, 0.0, kPi) == doctest::Approx(1.2257058333950701567).epsilon(1e-12));
  CHECK(std::abs(expected_count(0, 0.0, 100.0) / 100.0 - 1 / kPi) < 0.01);
  CHECK(std::abs(expected_count(3, 0.0, 100.0) / 100.0 - 1 / kPi) < 0.01);
  CHECK_THROWS_AS(expected_count(0, 2.0, 1.0), std::domain_error);
  // consistency with the diagonal kernel by quadrature
  double byquad = sf::integrate([](double u) { return k_edge_diagonal(1, u, u); }, 0.5, 2.5, 1e-12);
  CHECK(expected_count(1, 0.5, 2.5) == doctest::Approx(byquad).epsilon(1e-10));
}

TEST_CASE("g_lambda forms and poles") {
  YoungDiagram lam({1});
  // G(u) = Gamma(u+2)/u at u=1: Gamma(3)/1 = 2
  CHECK(std::abs(g_lambda(lam, 1, {1.0, 0.0}) - std::complex<double>(2.0, 0.0)) < 1e-12);
  // ratio form agrees with the product form Gamma(u+1) prod (u+i)/(u-lambda_i+i)
  Rng rng(55);
  YoungDiagram lam2({3, 1});
  for (int rep = 0; rep < 30; ++rep) {
    std::complex<double> u(3 * rng.next_double() + 0.3, 2 * rng.next_double() - 1);
    for (int n : {2, 4, 6}) {
      std::complex<double> prod = sf::gamma(u + 1.0);
      for (int i = 1; i <= n; ++i)
        prod *= (u + static_cast<double>(i)) /
                (u - static_cast<double>(lam2.row(i)) + static_cast<double>(i));
      std::complex<double> ratio = g_lambda(lam2, n, u);
      CHECK(std::abs(prod - ratio) <= 1e-12 * std::abs(ratio));
    }
  }
  // poles exactly at u = lambda_i - i
  CHECK_THROWS_AS(g_lambda(lam2, 2, {2.0, 0.0}), std::domain_error);   // 3 - 1
  CHECK_THROWS_AS(g_lambda(lam2, 2, {-1.0, 0.0}), std::domain_error);  // 1 - 2
  CHECK_THROWS_AS(g_lambda(lam2, 4, {-3.0, 0.0}), std::domain_error);  // 0 - 3
}

// Exact one-point densities of the uniform order polytopes.
TEST_CASE("k_lambda against exact small-shape densities") {
  YoungDiagram one({1});
  for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    auto r = k_lambda(one, 1, 0, t, 0, t);
    CHECK(std::abs(r.value - 1.0) < 1e-8);
  }
  // empty z-contour: no jumps on line 1 for the single cell
  auto r0 = k_lambda(one, 1, 1, 0.5, 1, 0.5);
  CHECK(r0.value == 0.0);

  YoungDiagram two({2});
  for (double t : {0.25, 0.5, 0.75}) {
    CHECK(std::abs(k_lambda(two, 1, 0, t, 0, t).value - 2 * (1 - t)) < 1e-8);
    CHECK(std::abs(k_lambda(two, 1, 1, t, 1, t).value - 2 * t) < 1e-8);
  }
  // off-diagonal product from rho_2((0,t),(1,s)) = 2 * [s > t]
  for (auto [t, s] : std::vector<std::pair<double, double>>{{0.3, 0.7}, {0.7, 0.2}, {0.5, 0.6}}) {
    double k01 = k_lambda(two, 1, 0, t, 1, s).value;
    double k10 = k_lambda(two, 1, 1, s, 0, t).value;
    double expect = 4 * s * (1 - t) - 2 * (s > t ? 1.0 : 0.0);
    CHECK(std::abs(k01 * k10 - expect) < 1e-8);
  }

  YoungDiagram stair({2, 1});
  for (double t : {0.25, 0.5, 0.75}) {
    CHECK(std::abs(k_lambda(stair, 2, 0, t, 0, t).value - 3 * (1 - t) * (1 - t)) < 1e-8);
    CHECK(std::abs(k_lambda(stair, 2, 1, t, 1, t).value - 3 * t * (1 - t / 2)) < 1e-8);
    CHECK(std::abs(k_lambda(stair, 2, -1, t, -1, t).value - 3 * t * (1 - t / 2)) < 1e-8);
    // independent of the padding n >= l(lambda)
    CHECK(std::abs(k_lambda(stair, 4, 0, t, 0, t).value - 3 * (1 - t) * (1 - t)) < 1e-8);
  }
  // exact 2-point determinant: rho_2((0,t),(1,s)) = 3 (1-t) [t < s]
  for (auto [t, s] : std::vector<std::pair<double, double>>{{0.3, 0.8}, {0.6, 0.4}}) {
    double det = k_lambda(stair, 2, 0, t, 0, t).value * k_lambda(stair, 2, 1, s, 1, s).value -
                 k_lambda(stair, 2, 0, t, 1, s).value * k_lambda(stair, 2, 1, s, 0, t).value;
    double expect = 3 * (1 - t) * (t < s ? 1.0 : 0.0);
    CHECK(std::abs(det - expect) < 1e-7);
  }
}

TEST_CASE("k_lambda query struct overload") {
  LambdaKernelQuery q;
  q.shape = YoungDiagram({2});
  q.n = 1;
  q.x1 = q.x2 = 0;
  q.t1 = q.t2 = 0.25;
  CHECK(k_lambda(q).value == k_lambda(q.shape, 1, 0, 0.25, 0, 0.25).value);
}

TEST_CASE("k_lambda limit at t = 1 and node metadata") {
  YoungDiagram two({2});
  // densities vanish/saturate continuously at t = 1
  auto r = k_lambda(two, 1, 0, 1.0, 0, 1.0);
  CHECK(std::abs(r.value - 0.0) < 1e-8);
  auto r2 = k_lambda(two, 1, 1, 1.0, 1, 1.0);
  CHECK(std::abs(r2.value - 2.0) < 1e-8);
  CHECK(r2.nodes_z >= 16);
  CHECK(r2.imag_residual <= 1e-6);
}

TEST_CASE("k_lambda node-doubling stability") {
  YoungDiagram stair({3, 2, 1});
  ContourConfig coarse;
  coarse.nodes_per_unit = 32;
  ContourConfig fine;
  fine.nodes_per_unit = 64;
  for (auto [x, t] : std::vector<std::pair<int, double>>{{0, 0.5}, {1, 0.25}, {-1, 0.75}, {2, 0.5}}) {
    double a = k_lambda(stair, 3, x, t, x, t, coarse).value;
    double b = k_lambda(stair, 3, x, t, x, t, fine).value;
    CHECK(std::abs(a - b) <= 1e-8);
  }
}

TEST_CASE("k_lambda MC cross-check for the staircase (2,1)") {
  // Monte Carlo oracle via pyt_to_jumps: bin the jump density on lines
  // x in {-1, 0, 1} and compare with K(x,t;x,t).
  Rng rng(56);
  YoungDiagram stair({2, 1});
  const long trials = 200000;
  const double dt = 0.1;
  std::vector<std::array<long, 10>> counts(3, std::array<long, 10>{});
  for (long rep = 0; rep < trials; ++rep) {
    StandardTableau t = sample_syt_uniform(stair, rng);
    PoissonizedTableau p = poissonize(t, rng);
    for (const auto& q : pyt_to_jumps(p).points) {
      int b = std::min(static_cast<int>(q.u / dt), 9);
      counts[q.x + 1][b] += 1;
    }
  }
  for (int x = -1; x <= 1; ++x)
    for (int b = 0; b < 10; ++b) {
      double mid = (b + 0.5) * dt;
      double density = k_lambda(stair, 2, x, mid, x, mid).value;
      double mean = static_cast<double>(counts[x + 1][b]) / trials / dt;
      double se = std::sqrt(density / (trials * dt));  // Poisson-ish scale
      CHECK(std::abs(mean - density) < std::max(4 * se, 0.02));
    }
}

TEST_SUITE_END();
