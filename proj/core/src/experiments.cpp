#include "rsn/experiments.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "rsn/common.hpp"
#include "rsn/edelman_greene.hpp"
#include "rsn/fredholm.hpp"
#include "rsn/jumps.hpp"
#include "rsn/kernels.hpp"
#include "rsn/tableau.hpp"

namespace rsn {

Histogram Histogram::make(double lo, double hi, int bins) {
  if (!(lo < hi) || bins < 1) throw std::domain_error("Histogram: bad range");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(bins, 0);
  return h;
}

void Histogram::add(double v) {
  if (v < lo) {
    ++underflow;
    return;
  }
  if (v >= hi) {
    ++overflow;
    return;
  }
  auto b = static_cast<size_t>((v - lo) / (hi - lo) * counts.size());
  if (b >= counts.size()) b = counts.size() - 1;
  ++counts[b];
}

long long Histogram::total() const {
  long long s = underflow + overflow;
  for (long long c : counts) s += c;
  return s;
}

std::string ExperimentReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["parameters"] = parameters;
  j["histogram"] = {{"lo", histogram.lo},
                    {"hi", histogram.hi},
                    {"counts", histogram.counts},
                    {"underflow", histogram.underflow},
                    {"overflow", histogram.overflow}};
  auto& rc = j["reference_curve"] = nlohmann::json::array();
  for (const auto& p : reference_curve) rc.push_back({p[0], p[1]});
  if (std::isfinite(ks)) j["ks"] = ks;
  j["trials"] = trials;
  j["discarded"] = discarded;
  j["wall_seconds"] = wall_seconds;
  j["details"] = details;
  return j.dump(2);
}

void ExperimentReport::write_csv(std::ostream& os) const {
  os << "# name=" << name << "\n";
  os << "# parameters=" << parameters.dump() << "\n";
  os << "# trials=" << trials << " discarded=" << discarded;
  if (std::isfinite(ks)) os << " ks=" << ks;
  os << "\n";
  os << "bin_lo,bin_hi,count\n";
  double w = histogram.bin_width();
  for (size_t b = 0; b < histogram.counts.size(); ++b)
    os << histogram.lo + w * b << "," << histogram.lo + w * (b + 1) << ","
       << histogram.counts[b] << "\n";
}

void ExperimentReport::write_plot_data(std::ostream& os) const {
  long long n = histogram.total();
  double w = histogram.bin_width();
  os << "# empirical density (bin center, density)\n";
  for (size_t b = 0; b < histogram.counts.size(); ++b)
    os << histogram.lo + w * (b + 0.5) << " "
       << (n > 0 ? histogram.counts[b] / (w * n) : 0.0) << "\n";
  os << "\n\n# reference curve\n";
  for (const auto& p : reference_curve) os << p[0] << " " << p[1] << "\n";
}

double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::domain_error("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  double m = static_cast<double>(sample.size());
  double ks = 0.0;
  for (size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    ks = std::max(ks, std::abs(f - (i + 1) / m));
    ks = std::max(ks, std::abs(f - i / m));
  }
  return ks;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::domain_error("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double ks = 0.0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    ks = std::max(ks, std::abs(static_cast<double>(i) / a.size() -
                               static_cast<double>(j) / b.size()));
  }
  return ks;
}

double semicircle_cdf(double x) {
  if (x <= 0) return 0.0;
  if (x >= 1) return 1.0;
  double v = 2 * x - 1;
  return (v * std::sqrt(1 - v * v) + std::asin(v) + kPi / 2) / kPi;
}

namespace {

// Runs body(trial, rng) for trial = 0..trials-1 with rng = Rng(seed, trial).
// Results must go into per-trial slots; the outcome is then independent of
// the thread count.
void run_trials(long trials, std::uint64_t seed, int threads,
                const std::function<void(long, Rng&)>& body) {
  if (trials <= 0) throw std::domain_error("experiment: trials >= 1 required");
  threads = std::max(1, threads);
  if (threads == 1) {
    for (long i = 0; i < trials; ++i) {
      Rng rng(seed, static_cast<std::uint64_t>(i));
      body(i, rng);
    }
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (long i = w; i < trials; i += threads) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        body(i, rng);
      }
    });
  }
  for (auto& th : pool) th.join();
}

int tracked_swap(int n, double alpha) {
  int s = static_cast<int>(floor_nudged(n * (1.0 + alpha) / 2.0));
  if (s < 1 || s > n - 1)
    throw std::domain_error("tracked swap column outside {1, ..., n-1}");
  return s;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

nlohmann::json base_params(int n, double alpha, long trials, std::uint64_t seed) {
  WindowSpec w(alpha, n);
  return {{"n", n},       {"alpha", alpha}, {"beta", w.beta},
          {"c_n", w.c_n}, {"trials", trials}, {"seed", seed}};
}

}  // namespace

ExperimentReport first_swap_experiment(int n, double alpha, long trials,
                                       std::uint64_t seed, int threads) {
  if (n < 10) throw std::domain_error("first_swap_experiment: n >= 10 required");
  Timer timer;
  WindowSpec w(alpha, n);
  int s0 = tracked_swap(n, alpha);
  long N = static_cast<long>(n) * (n - 1) / 2;
  YoungDiagram stair = YoungDiagram::staircase(n);

  std::vector<double> values(trials);
  run_trials(trials, seed, threads, [&](long i, Rng& rng) {
    StandardTableau t = sample_syt_uniform(stair, rng);
    // First appearance of swap s is recorded at cell (n-s, s).
    long tfs = N + 1 - t.at(n - s0, s0);
    values[i] = 2.0 * w.beta / n * static_cast<double>(tfs);
  });

  ExperimentReport rep;
  rep.name = "first-swap";
  rep.parameters = base_params(n, alpha, trials, seed);
  rep.parameters["tracked_swap"] = s0;
  rep.trials = trials;
  rep.histogram = Histogram::make(0.0, 5.0, 50);
  for (double v : values) rep.histogram.add(v);
  rep.ks = ks_statistic(values, [](double t) { return first_swap_cdf(t); });
  for (int k = 0; k <= 100; ++k) {
    double t = 0.05 * k;
    double h = 1e-3;
    double dens = -(gap_probability(t + h) - gap_probability(std::max(t - h, 0.0))) /
                  (t >= h ? 2 * h : h);
    rep.reference_curve.push_back({t, dens});
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

ExperimentReport gap_experiment(int n, double alpha, double beta_time, long trials,
                                std::uint64_t seed, int threads) {
  if (!(beta_time > 0 && beta_time < 1))
    throw std::domain_error("gap_experiment: 0 < beta < 1 required");
  Timer timer;
  WindowSpec w(alpha, n);
  int s0 = tracked_swap(n, alpha);
  long N = static_cast<long>(n) * (n - 1) / 2;
  double t0 = beta_time * static_cast<double>(N);
  YoungDiagram stair = YoungDiagram::staircase(n);

  constexpr double kMissing = -1.0;
  std::vector<double> gaps(trials, kMissing), t_minus(trials), t_plus(trials);
  run_trials(trials, seed, threads, [&](long i, Rng& rng) {
    StandardTableau t = sample_syt_uniform(stair, rng);
    SortingNetwork net = eg_map(t);
    long below = -1, above = -1;
    for (long k = 0; k < N; ++k) {
      if (net.swaps[k] != s0) continue;
      if (k + 1 <= t0)
        below = k + 1;
      else if (above < 0) {
        above = k + 1;
        break;
      }
    }
    if (below < 0 || above < 0) return;  // boundary effect; trial discarded
    double scale = 2.0 * w.beta / n;
    gaps[i] = scale * static_cast<double>(above - below);
    t_minus[i] = scale * (t0 - below);
    t_plus[i] = scale * (above - t0);
  });

  ExperimentReport rep;
  rep.name = "gap";
  rep.parameters = base_params(n, alpha, trials, seed);
  rep.parameters["beta_time"] = beta_time;
  rep.parameters["tracked_swap"] = s0;
  rep.trials = trials;

  std::vector<double> kept;
  std::vector<std::pair<double, double>> joint;
  for (long i = 0; i < trials; ++i) {
    if (gaps[i] == kMissing) {
      ++rep.discarded;
      continue;
    }
    kept.push_back(gaps[i]);
    joint.emplace_back(t_minus[i], t_plus[i]);
  }
  if (kept.empty()) throw NumericalError("gap_experiment: all trials discarded");

  rep.histogram = Histogram::make(0.0, 8.0, 64);
  for (double g : kept) rep.histogram.add(g);
  rep.ks = ks_statistic(kept, [](double g) { return gap_cdf(g); });
  for (int k = 1; k <= 80; ++k) {
    double g = 0.1 * k;
    rep.reference_curve.push_back({g, gap_density(g)});
  }

  // Joint tail grid: empirical P(T_- > a, T_+ > b) vs F(a+b).
  double sup_err = 0.0;
  auto grid = nlohmann::json::array();
  for (int ia = 1; ia <= 5; ++ia)
    for (int ib = 1; ib <= 5; ++ib) {
      double a = 0.25 * ia, b = 0.25 * ib;
      long cnt = 0;
      for (auto& [tm, tp] : joint)
        if (tm > a && tp > b) ++cnt;
      double emp = static_cast<double>(cnt) / joint.size();
      double ref = gap_probability(a + b);
      sup_err = std::max(sup_err, std::abs(emp - ref));
      grid.push_back({{"a", a}, {"b", b}, {"empirical", emp}, {"reference", ref}});
    }
  rep.details["joint_tail_grid"] = grid;
  rep.details["joint_tail_sup_error"] = sup_err;
  rep.details["effective_trials"] = static_cast<long long>(kept.size());
  rep.wall_seconds = timer.seconds();
  return rep;
}

ExperimentReport correlation_experiment(int n, double alpha, long trials,
                                        std::uint64_t seed, double u_max, int threads) {
  Timer timer;
  WindowSpec w(alpha, n);
  YoungDiagram stair = YoungDiagram::staircase(n);
  double min_entry = 1.0 - u_max / (w.beta * n);
  if (min_entry < 0) min_entry = 0;

  const double du = 0.5;
  const int nbins = static_cast<int>(u_max / du);
  const std::vector<int> lines = {0, 1};
  const double no_point_t = 1.0;

  // Per-trial, per-line bin counts plus pair products for the 2-point check.
  struct Obs {
    std::vector<double> bins0, bins1;
    double pair01 = 0.0, pair0b = 0.0;
    bool empty_line0 = false;
  };
  // Boxes for the 2-point functions.
  const double a_lo = 0.5, a_hi = 1.0, b_lo = 1.0, b_hi = 1.5, b2_lo = 2.0, b2_hi = 2.5;

  std::vector<Obs> obs(trials);
  run_trials(trials, seed, threads, [&](long i, Rng& rng) {
    StandardTableau t = sample_syt_uniform(stair, rng);
    PoissonizedTableau p = poissonize(t, rng);
    PointConfiguration pts = rescale_window(pyt_to_jumps(p, min_entry), w);
    Obs& o = obs[i];
    o.bins0.assign(nbins, 0.0);
    o.bins1.assign(nbins, 0.0);
    double nA = 0, nB = 0, nB2 = 0, n0 = 0;
    for (const JumpPoint& q : pts.points) {
      if (q.u >= u_max) continue;
      if (q.x == 0) {
        o.bins0[static_cast<int>(q.u / du)] += 1;
        if (q.u <= no_point_t) n0 += 1;
        if (q.u >= a_lo && q.u < a_hi) nA += 1;
      } else if (q.x == 1) {
        o.bins1[static_cast<int>(q.u / du)] += 1;
        if (q.u >= b_lo && q.u < b_hi) nB += 1;
        if (q.u >= b2_lo && q.u < b2_hi) nB2 += 1;
      }
    }
    o.pair01 = nA * nB;
    o.pair0b = nA * nB2;
    o.empty_line0 = (n0 == 0);
  });

  ExperimentReport rep;
  rep.name = "correlation";
  rep.parameters = base_params(n, alpha, trials, seed);
  rep.parameters["u_max"] = u_max;
  rep.trials = trials;
  rep.histogram = Histogram::make(0.0, u_max, nbins);

  auto mean_sd = [&](const std::function<double(const Obs&)>& f) {
    double s = 0, s2 = 0;
    for (const Obs& o : obs) {
      double v = f(o);
      s += v;
      s2 += v * v;
    }
    double mean = s / trials;
    double var = std::max(s2 / trials - mean * mean, 0.0);
    return std::pair<double, double>(mean, std::sqrt(var / trials));
  };

  double max_z1 = 0.0;
  auto one_point = nlohmann::json::array();
  for (int line = 0; line <= 1; ++line) {
    for (int b = 0; b < nbins; ++b) {
      auto [mean, se] = mean_sd([&](const Obs& o) {
        return line == 0 ? o.bins0[b] : o.bins1[b];
      });
      double ref = expected_count(line, b * du, (b + 1) * du);
      double z = se > 0 ? std::abs(mean - ref) / se : 0.0;
      max_z1 = std::max(max_z1, z);
      one_point.push_back({{"x", line}, {"u_lo", b * du}, {"u_hi", (b + 1) * du},
                           {"mean", mean}, {"se", se}, {"reference", ref}, {"z", z}});
      if (line == 0) rep.histogram.counts[b] = static_cast<long long>(mean * trials + 0.5);
    }
  }
  rep.details["one_point"] = one_point;
  rep.details["one_point_max_z"] = max_z1;

  // 2-point: E[N_A N_B] = int_A int_B det[K_edge] for disjoint boxes.
  auto det2 = [&](int xa, double ua, int xb, double ub) {
    double kaa = k_edge_diagonal(xa, ua, ua);
    double kbb = k_edge_diagonal(xb, ub, ub);
    double kab = k_edge(xa, ua, xb, ub);
    double kba = k_edge(xb, ub, xa, ua);
    return kaa * kbb - kab * kba;
  };
  auto box_integral = [&](int xa, double alo, double ahi, int xb, double blo, double bhi) {
    const auto& gl = sf::gauss_legendre(8);
    double s = 0;
    for (int ia = 0; ia < 8; ++ia)
      for (int ib = 0; ib < 8; ++ib) {
        double ua = (ahi - alo) / 2 * (gl.nodes[ia] + 1) + alo;
        double ub = (bhi - blo) / 2 * (gl.nodes[ib] + 1) + blo;
        s += gl.weights[ia] * gl.weights[ib] * det2(xa, ua, xb, ub);
      }
    return s * (ahi - alo) * (bhi - blo) / 4;
  };
  auto two_point = nlohmann::json::array();
  double max_z2 = 0.0;
  {
    auto [mean, se] = mean_sd([](const Obs& o) { return o.pair01; });
    double ref = box_integral(0, a_lo, a_hi, 1, b_lo, b_hi);
    double z = se > 0 ? std::abs(mean - ref) / se : 0.0;
    max_z2 = std::max(max_z2, z);
    two_point.push_back({{"boxes", "A=(0,[0.5,1.0)) B=(1,[1.0,1.5))"},
                         {"mean", mean}, {"se", se}, {"reference", ref}, {"z", z}});
  }
  {
    auto [mean, se] = mean_sd([](const Obs& o) { return o.pair0b; });
    double ref = box_integral(0, a_lo, a_hi, 1, b2_lo, b2_hi);
    double z = se > 0 ? std::abs(mean - ref) / se : 0.0;
    max_z2 = std::max(max_z2, z);
    two_point.push_back({{"boxes", "A=(0,[0.5,1.0)) B=(1,[2.0,2.5))"},
                         {"mean", mean}, {"se", se}, {"reference", ref}, {"z", z}});
  }
  rep.details["two_point"] = two_point;
  rep.details["two_point_max_z"] = max_z2;

  // No-points probability on {0} x [0, 1] vs the Fredholm determinant.
  {
    auto [mean, se] = mean_sd([](const Obs& o) { return o.empty_line0 ? 1.0 : 0.0; });
    double ref = gap_probability(no_point_t);
    rep.details["no_points"] = {{"t", no_point_t}, {"empirical", mean}, {"se", se},
                                {"reference", ref},
                                {"z", se > 0 ? std::abs(mean - ref) / se : 0.0}};
  }
  for (int b = 0; b < nbins; ++b)
    rep.reference_curve.push_back({(b + 0.5) * du, k_edge_diagonal(0, (b + 0.5) * du, (b + 0.5) * du)});
  rep.wall_seconds = timer.seconds();
  return rep;
}

ExperimentReport intensity_experiment(int n, double t_max, long trials,
                                      std::uint64_t seed, int threads) {
  if (t_max <= 0) throw std::domain_error("intensity_experiment: t_max > 0 required");
  Timer timer;
  WindowSpec w(0.0, n);
  YoungDiagram stair = YoungDiagram::staircase(n);
  double min_entry = std::max(0.0, 1.0 - t_max / (w.beta * n));
  int ngrid = static_cast<int>(t_max);
  std::vector<double> grid;
  for (int k = 1; k <= ngrid; ++k) grid.push_back(k * t_max / ngrid);

  std::vector<std::vector<double>> counts(trials);
  run_trials(trials, seed, threads, [&](long i, Rng& rng) {
    StandardTableau t = sample_syt_uniform(stair, rng);
    PoissonizedTableau p = poissonize(t, rng);
    PointConfiguration pts = rescale_window(pyt_to_jumps(p, min_entry), w);
    std::vector<double>& c = counts[i];
    c.assign(grid.size(), 0.0);
    for (const JumpPoint& q : pts.points)
      if (q.x == 0)
        for (size_t g = 0; g < grid.size(); ++g)
          if (q.u <= grid[g]) c[g] += 1;
  });

  ExperimentReport rep;
  rep.name = "intensity";
  rep.parameters = base_params(n, 0.0, trials, seed);
  rep.parameters["t_max"] = t_max;
  rep.trials = trials;
  rep.histogram = Histogram::make(0.0, t_max, ngrid);

  double max_z = 0.0;
  auto rows = nlohmann::json::array();
  for (size_t g = 0; g < grid.size(); ++g) {
    double s = 0, s2 = 0;
    for (long i = 0; i < trials; ++i) {
      s += counts[i][g];
      s2 += counts[i][g] * counts[i][g];
    }
    double mean = s / trials;
    double se = std::sqrt(std::max(s2 / trials - mean * mean, 0.0) / trials);
    double ref = expected_count(0, 0.0, grid[g]);
    double z = se > 0 ? std::abs(mean - ref) / se : 0.0;
    max_z = std::max(max_z, z);
    rows.push_back({{"t", grid[g]}, {"mean", mean}, {"se", se}, {"reference", ref}, {"z", z}});
    rep.reference_curve.push_back({grid[g], ref});
  }
  rep.details["counts"] = rows;
  rep.details["max_z"] = max_z;
  rep.details["intensity_at_100"] = expected_count(0, 0.0, 100.0) / 100.0;
  rep.details["one_over_pi"] = 1.0 / kPi;
  rep.wall_seconds = timer.seconds();
  return rep;
}

ExperimentReport semicircle_experiment(int n, long trials, std::uint64_t seed,
                                       int threads) {
  if (n < 50) throw std::domain_error("semicircle_experiment: n >= 50 required");
  Timer timer;
  long N = static_cast<long>(n) * (n - 1) / 2;

  std::vector<std::vector<int>> swaps(trials);
  run_trials(trials, seed, threads, [&](long i, Rng& rng) {
    swaps[i] = sample_network(n, rng).swaps;
  });

  ExperimentReport rep;
  rep.name = "semicircle";
  rep.parameters = base_params(n, 0.0, trials, seed);
  rep.trials = trials;
  rep.histogram = Histogram::make(0.0, 1.0, 50);

  std::vector<double> pooled;
  pooled.reserve(static_cast<size_t>(trials) * N);
  double mean_pos = 0.0;
  for (auto& sw : swaps)
    for (int s : sw) {
      double v = static_cast<double>(s) / n;
      pooled.push_back(v);
      mean_pos += v;
      rep.histogram.add(v);
    }
  mean_pos /= pooled.size();
  rep.ks = ks_statistic(pooled, semicircle_cdf);

  // Pooled positions have mean 1/2 by symmetry; sd of the semicircle on
  // (0,1) is 1/4, so the standard error of the mean is 1/(4 sqrt(#)).
  rep.details["mean_position"] = mean_pos;
  rep.details["mean_se"] = 0.25 / std::sqrt(static_cast<double>(pooled.size()));

  // Local swap rate per unit 2i/n time at columns alpha = 0, 0.5: the
  // semicircle implies rate 2 sqrt(1-alpha^2)/pi.
  auto rates = nlohmann::json::array();
  for (double alpha : {0.0, 0.5}) {
    int s0 = tracked_swap(n, alpha);
    double beta = std::sqrt(1 - alpha * alpha);
    double cnt = 0;
    for (auto& sw : swaps)
      for (int s : sw)
        if (s == s0) cnt += 1;
    double per_unit = (cnt / trials) * n / (2.0 * N);
    rates.push_back({{"alpha", alpha}, {"rate", per_unit}, {"reference", 2 * beta / kPi}});
  }
  rep.details["local_rates"] = rates;
  for (int k = 0; k <= 100; ++k) {
    double x = 0.01 * k, v = 2 * x - 1;
    rep.reference_curve.push_back({x, 4.0 / kPi * std::sqrt(std::max(0.0, 1 - v * v))});
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

ExperimentReport ague_corners_experiment(const AgueSpec& spec, std::uint64_t seed,
                                         int threads) {
  if (spec.M < 10) throw std::domain_error("ague_corners_experiment: M >= 10 required");
  if (spec.levels.empty()) throw std::domain_error("ague_corners_experiment: no levels");
  Timer timer;
  int max_level = *std::max_element(spec.levels.begin(), spec.levels.end());
  int mmax = 2 * spec.M + std::max(max_level, 0);
  double scale = std::sqrt(2.0 * spec.M);

  const double u_hi = 3.0, du = 0.25;
  const int nbins = static_cast<int>(u_hi / du);

  struct Obs {
    std::vector<double> lambda1;  // smallest scaled magnitude per level
    std::vector<double> bins;     // level-0 scaled eigenvalues
  };
  std::vector<Obs> obs(spec.samples);

  run_trials(spec.samples, seed, threads, [&](long i, Rng& rng) {
    Eigen::MatrixXd g(mmax, mmax);
    for (int r = 0; r < mmax; ++r)
      for (int c = 0; c < mmax; ++c) g(r, c) = rng.next_gauss();
    Eigen::MatrixXd a = (g - g.transpose()) / std::sqrt(2.0);

    Obs& o = obs[i];
    o.bins.assign(nbins, 0.0);
    o.lambda1.assign(spec.levels.size(), 0.0);
    for (size_t li = 0; li < spec.levels.size(); ++li) {
      int m = 2 * spec.M + spec.levels[li];
      Eigen::MatrixXd corner = a.topLeftCorner(m, m);
      // Nonzero eigenvalues come in pairs +-i lambda; the eigenvalues of
      // -A^2 = A A^T are the lambda^2, each twice (plus 0 if m is odd).
      Eigen::MatrixXd b = corner * corner.transpose();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b, Eigen::EigenvaluesOnly);
      const auto& ev = es.eigenvalues();  // ascending
      int zero_modes = m % 2;
      for (int k = zero_modes; k + 1 < m; k += 2) {
        double lam = std::sqrt(std::max(0.0, 0.5 * (ev(k) + ev(k + 1))));
        double v = scale * lam;
        if (k == zero_modes) o.lambda1[li] = v;
        if (spec.levels[li] == 0 && v < u_hi) o.bins[static_cast<int>(v / du)] += 1;
      }
    }
  });

  ExperimentReport rep;
  rep.name = "ague";
  rep.parameters = {{"M", spec.M}, {"samples", spec.samples}, {"levels", spec.levels},
                    {"seed", seed}};
  rep.trials = spec.samples;
  rep.histogram = Histogram::make(0.0, u_hi, nbins);

  auto level0 = std::find(spec.levels.begin(), spec.levels.end(), 0);
  if (level0 == spec.levels.end())
    throw std::domain_error("ague_corners_experiment: levels must contain 0");
  size_t l0 = static_cast<size_t>(level0 - spec.levels.begin());
  std::vector<double> lam1;
  for (const Obs& o : obs) lam1.push_back(o.lambda1[l0]);
  rep.ks = ks_statistic(lam1, [](double t) { return first_swap_cdf(t); });
  auto by_level = nlohmann::json::array();
  for (size_t li = 0; li < spec.levels.size(); ++li) {
    double s = 0;
    for (const Obs& o : obs) s += o.lambda1[li];
    by_level.push_back({{"level", spec.levels[li]},
                        {"mean_smallest_scaled", s / spec.samples}});
  }
  rep.details["levels"] = by_level;

  double max_z = 0.0;
  auto rows = nlohmann::json::array();
  for (int b = 0; b < nbins; ++b) {
    double s = 0, s2 = 0;
    for (const Obs& o : obs) {
      s += o.bins[b];
      s2 += o.bins[b] * o.bins[b];
    }
    double mean = s / spec.samples;
    double se = std::sqrt(std::max(s2 / spec.samples - mean * mean, 0.0) /
                          static_cast<double>(spec.samples));
    double ref = expected_count(0, b * du, (b + 1) * du);
    double z = se > 0 ? std::abs(mean - ref) / se : 0.0;
    max_z = std::max(max_z, z);
    rows.push_back({{"u_lo", b * du}, {"u_hi", (b + 1) * du}, {"mean", mean},
                    {"se", se}, {"reference", ref}, {"z", z}});
    rep.histogram.counts[b] = static_cast<long long>(s + 0.5);
    rep.reference_curve.push_back({(b + 0.5) * du,
                                   k_edge_diagonal(0, (b + 0.5) * du, (b + 0.5) * du)});
  }
  rep.details["level0_density"] = rows;
  rep.details["level0_max_z"] = max_z;
  rep.wall_seconds = timer.seconds();
  return rep;
}

ExperimentReport stationarity_experiment(int n, double alpha, double delta, long trials,
                                         std::uint64_t seed, int threads) {
  if (delta <= 0) throw std::domain_error("stationarity_experiment: delta > 0 required");
  Timer timer;
  WindowSpec w(alpha, n);
  int s0 = tracked_swap(n, alpha);
  long N = static_cast<long>(n) * (n - 1) / 2;
  double scale = 2.0 * w.beta / n;
  long shift = static_cast<long>(std::floor(delta / scale));
  YoungDiagram stair = YoungDiagram::staircase(n);

  constexpr double kMissing = -1.0;
  std::vector<double> from_zero(trials, kMissing), from_delta(trials, kMissing);
  run_trials(trials, seed, threads, [&](long i, Rng& rng) {
    StandardTableau t = sample_syt_uniform(stair, rng);
    SortingNetwork net = eg_map(t);
    for (long k = 0; k < N; ++k) {
      if (net.swaps[k] != s0) continue;
      if (from_zero[i] == kMissing) from_zero[i] = scale * (k + 1);
      if (k + 1 > shift) {
        from_delta[i] = scale * (k + 1 - shift);
        break;
      }
    }
  });

  ExperimentReport rep;
  rep.name = "stationarity";
  rep.parameters = base_params(n, alpha, trials, seed);
  rep.parameters["delta"] = delta;
  rep.parameters["tracked_swap"] = s0;
  rep.trials = trials;

  std::vector<double> a, b;
  for (long i = 0; i < trials; ++i) {
    if (from_zero[i] != kMissing && from_delta[i] != kMissing) {
      a.push_back(from_zero[i]);
      b.push_back(from_delta[i]);
    } else {
      ++rep.discarded;
    }
  }
  rep.ks = ks_two_sample(a, b);
  rep.histogram = Histogram::make(0.0, 5.0, 50);
  for (double v : a) rep.histogram.add(v);
  rep.details["marginal"] = "first tracked-swap time in the window";
  rep.details["shift_steps"] = shift;
  rep.wall_seconds = timer.seconds();
  return rep;
}

}  // namespace rsn
