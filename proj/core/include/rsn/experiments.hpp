#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <json.hpp>
#include <limits>
#include <string>
#include <vector>

#include "rsn/rng.hpp"

namespace rsn {

struct Histogram {
  double lo = 0.0, hi = 1.0;
  std::vector<long long> counts;
  long long underflow = 0, overflow = 0;

  static Histogram make(double lo, double hi, int bins);
  void add(double v);
  long long total() const;
  double bin_width() const { return (hi - lo) / static_cast<double>(counts.size()); }
};

// Result of one seeded Monte Carlo study.  Reproducible: identical
// (name, parameters, seed) give bit-identical reports for any thread count.
struct ExperimentReport {
  std::string name;
  nlohmann::json parameters;  // resolved parameter set including seed and c_n
  Histogram histogram;
  std::vector<std::array<double, 2>> reference_curve;  // (x, analytic value)
  double ks = std::numeric_limits<double>::quiet_NaN();
  long long trials = 0;
  long long discarded = 0;
  double wall_seconds = 0.0;
  nlohmann::json details;  // per-experiment payloads (z-scores, grids, ...)

  std::string to_json() const;
  void write_csv(std::ostream& os) const;        // one row per histogram bin
  void write_plot_data(std::ostream& os) const;  // two-column density + curve
};

// Exact one-sample KS against an analytic CDF evaluated at the sample points.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
// Two-sample KS statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// CDF of the global semicircle law of rescaled swap positions on (0,1).
double semicircle_cdf(double x);

// Rescaled first swap time of the swap at column floor(n(1+alpha)/2):
// samples 2 sqrt(1-alpha^2)/n * T_FS and compares with the Fredholm law.
ExperimentReport first_swap_experiment(int n, double alpha, long trials,
                                       std::uint64_t seed, int threads = 1);

// Rescaled gap between the appearances of that swap straddling time
// beta_time * N; KS against the size-biased gap density, plus the joint
// tail grid P(T_- > a, T_+ > b) vs F(a+b).
ExperimentReport gap_experiment(int n, double alpha, double beta_time, long trials,
                                std::uint64_t seed, int threads = 1);

// 1- and 2-point correlation estimators of the prelimit process X_{alpha,n}
// against det[K_edge], plus the no-points probability vs gap_probability.
ExperimentReport correlation_experiment(int n, double alpha, long trials,
                                        std::uint64_t seed, double u_max = 8.0,
                                        int threads = 1);

// Empirical mean counts on line 0 vs the exact expected-count formula.
ExperimentReport intensity_experiment(int n, double t_max, long trials,
                                      std::uint64_t seed, int threads = 1);

// Pooled swap positions s_i/n vs the semicircle law; includes the local
// swap-rate check at alpha in {0, 0.5}.
ExperimentReport semicircle_experiment(int n, long trials, std::uint64_t seed,
                                       int threads = 1);

struct AgueSpec {
  int M = 200;           // corner half-size; corner sizes are 2M + j
  long samples = 1000;
  std::vector<int> levels = {0};
};

// Antisymmetric GUE corners: scaled eigenvalues sqrt(2M) * lambda_i^(2M+j).
// Level-0 density vs k_edge_diagonal and the smallest scaled eigenvalue vs
// the first-swap law.
ExperimentReport ague_corners_experiment(const AgueSpec& spec, std::uint64_t seed,
                                         int threads = 1);

// Time stationarity: the rescaled first appearance of the tracked swap in
// [0, T] vs in [delta, T + delta]; two-sample KS per marginal.
ExperimentReport stationarity_experiment(int n, double alpha, double delta, long trials,
                                         std::uint64_t seed, int threads = 1);

}  // namespace rsn
