// Command line interface to the sorting-network / tableau / kernel library.
// Exit codes: 0 success, 2 usage or domain error, 3 numerical failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "rsn/common.hpp"
#include "rsn/edelman_greene.hpp"
#include "rsn/experiments.hpp"
#include "rsn/fredholm.hpp"
#include "rsn/jumps.hpp"
#include "rsn/kernels.hpp"
#include "rsn/local_eg.hpp"
#include "rsn/tableau.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20177;  // fixed so casual runs reproduce

std::uint64_t resolve_seed(const std::string& seed_str) {
  if (seed_str == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  return std::stoull(seed_str);
}

rsn::YoungDiagram parse_shape(const std::string& text) {
  std::vector<int> rows;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) rows.push_back(std::stoi(part));
  }
  return rsn::YoungDiagram(rows);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text << "\n";
  }
}

struct ExperimentArgs {
  int n = 300;
  double alpha = 0.0;
  double beta_time = 0.5;
  double delta = 0.5;
  double u_max = 8.0;
  double t_max = 10.0;
  long trials = 1000;
  int M = 200;
  long samples = 1000;
  std::string seed_str = std::to_string(kDefaultSeed);
  int threads = 1;
  std::string out;
  std::string plot_base;
  std::string format = "json";
};

void write_report(const rsn::ExperimentReport& rep, const ExperimentArgs& a) {
  if (a.format == "csv") {
    std::ostringstream os;
    rep.write_csv(os);
    emit(os.str(), a.out);
  } else {
    emit(rep.to_json(), a.out);
  }
  if (!a.plot_base.empty()) {
    std::ofstream f(a.plot_base + ".dat");
    rep.write_plot_data(f);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random sorting networks: tableaux, kernels, Fredholm laws, experiments"};
  app.require_subcommand(1);

  // ---- sample-network ----
  auto* sn = app.add_subcommand("sample-network", "sample uniform sorting networks");
  int sn_n = 10;
  long sn_count = 1;
  std::string sn_seed = std::to_string(kDefaultSeed), sn_out, sn_wiring;
  sn->add_option("--n", sn_n, "symmetric group size")->required();
  sn->add_option("--count", sn_count, "number of networks");
  sn->add_option("--seed", sn_seed, "64-bit seed or 'random'");
  sn->add_option("-o,--output", sn_out, "output file (default stdout)");
  sn->add_option("--wiring", sn_wiring, "also write a wiring-diagram CSV here");

  // ---- sample-tableau ----
  auto* st = app.add_subcommand("sample-tableau", "sample uniform standard tableaux");
  std::string st_shape, st_seed = std::to_string(kDefaultSeed), st_out;
  int st_stair = 0;
  bool st_poisson = false;
  st->add_option("--shape", st_shape, "partition, e.g. 3,2,1");
  st->add_option("--staircase", st_stair, "staircase parameter n (shape Delta_n)");
  st->add_flag("--poissonize", st_poisson, "emit a Poissonized tableau");
  st->add_option("--seed", st_seed, "64-bit seed or 'random'");
  st->add_option("-o,--output", st_out, "output file");

  // ---- kernel ----
  auto* kn = app.add_subcommand("kernel", "evaluate correlation kernels");
  kn->require_subcommand(1);
  auto* ke = kn->add_subcommand("edge", "limiting edge kernel K_edge");
  int ke_x1 = 0, ke_x2 = 0;
  double ke_u1 = 0, ke_u2 = 0;
  std::string ke_out;
  ke->add_option("--x1", ke_x1)->required();
  ke->add_option("--u1", ke_u1)->required();
  ke->add_option("--x2", ke_x2)->required();
  ke->add_option("--u2", ke_u2)->required();
  ke->add_option("-o,--output", ke_out);

  auto* kl = kn->add_subcommand("lambda", "finite-shape kernel K_lambda");
  std::string kl_shape, kl_out;
  int kl_n = 0, kl_x1 = 0, kl_x2 = 0, kl_nodes = 64;
  double kl_t1 = 0.5, kl_t2 = 0.5;
  kl->add_option("--shape", kl_shape, "partition, e.g. 2,1")->required();
  kl->add_option("--n", kl_n, "number of rows (>= l(shape); default l(shape))");
  kl->add_option("--x1", kl_x1)->required();
  kl->add_option("--t1", kl_t1)->required();
  kl->add_option("--x2", kl_x2)->required();
  kl->add_option("--t2", kl_t2)->required();
  kl->add_option("--nodes", kl_nodes, "contour nodes per unit arc length");
  kl->add_option("-o,--output", kl_out);

  // ---- fredholm ----
  auto* fr = app.add_subcommand("fredholm", "gap probability / first-swap law");
  double fr_t = 1.0;
  int fr_nodes = 96;
  std::string fr_out, fr_grid, fr_format = "json";
  fr->add_option("--t", fr_t, "interval length");
  fr->add_option("--nodes", fr_nodes, "Nystrom nodes");
  fr->add_option("--grid", fr_grid, "CSV file with a t column; batch mode");
  fr->add_option("--format", fr_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  fr->add_option("-o,--output", fr_out);

  // ---- local-eg ----
  auto* le = app.add_subcommand("local-eg", "run the local Edelman-Greene algorithm");
  std::string le_in, le_out;
  std::vector<int> le_window{-2, 2};
  double le_tmax = 1e18;
  int le_search = 50;
  le->add_option("--input", le_in, "point configuration (JSON {\"points\":[[x,u],...]})")
      ->required();
  le->add_option("--window", le_window, "target window a b")->expected(2);
  le->add_option("--tmax", le_tmax, "time cutoff");
  le->add_option("--search-bound", le_search, "empty-column search bound");
  le->add_option("-o,--output", le_out);

  // ---- experiment ----
  auto* ex = app.add_subcommand("experiment", "seeded Monte Carlo studies");
  ex->require_subcommand(1);
  ExperimentArgs ea;
  ea.threads = static_cast<int>(std::thread::hardware_concurrency());
  if (ea.threads < 1) ea.threads = 1;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--trials", ea.trials, "Monte Carlo trials");
    sub->add_option("--seed", ea.seed_str, "64-bit seed or 'random'");
    sub->add_option("--threads", ea.threads, "worker threads (result independent)");
    sub->add_option("-o,--output", ea.out, "report file (default stdout)");
    sub->add_option("--plot-data", ea.plot_base, "write gnuplot data to <base>.dat");
    sub->add_option("--format", ea.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto* ex_fs = ex->add_subcommand("first-swap", "rescaled first swap time vs Fredholm law");
  ex_fs->add_option("--n", ea.n);
  ex_fs->add_option("--alpha", ea.alpha);
  add_common(ex_fs);
  auto* ex_gap = ex->add_subcommand("gap", "swap gap vs Gaudin-Mehta-type density");
  ex_gap->add_option("--n", ea.n);
  ex_gap->add_option("--alpha", ea.alpha);
  ex_gap->add_option("--beta", ea.beta_time, "time fraction in (0,1)");
  add_common(ex_gap);
  auto* ex_corr = ex->add_subcommand("correlation", "1/2-point functions vs det[K_edge]");
  ex_corr->add_option("--n", ea.n);
  ex_corr->add_option("--alpha", ea.alpha);
  ex_corr->add_option("--u-max", ea.u_max);
  add_common(ex_corr);
  auto* ex_int = ex->add_subcommand("intensity", "line-0 counts vs expected-count formula");
  ex_int->add_option("--n", ea.n);
  ex_int->add_option("--t-max", ea.t_max);
  add_common(ex_int);
  auto* ex_semi = ex->add_subcommand("semicircle", "global swap positions vs semicircle");
  ex_semi->add_option("--n", ea.n);
  add_common(ex_semi);
  auto* ex_ague = ex->add_subcommand("ague", "antisymmetric GUE corners comparison");
  ex_ague->add_option("--M", ea.M, "corner half-size");
  ex_ague->add_option("--samples", ea.samples);
  add_common(ex_ague);
  auto* ex_stat = ex->add_subcommand("stationarity", "window-shift invariance check");
  ex_stat->add_option("--n", ea.n);
  ex_stat->add_option("--alpha", ea.alpha);
  ex_stat->add_option("--delta", ea.delta, "window shift (rescaled time)");
  add_common(ex_stat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*sn) {
      rsn::Rng rng(resolve_seed(sn_seed));
      std::ostringstream os;
      rsn::SortingNetwork last;
      for (long c = 0; c < sn_count; ++c) {
        last = rsn::sample_network(sn_n, rng);
        os << rsn::network_to_json(last) << "\n";
      }
      std::string text = os.str();
      if (!text.empty()) text.pop_back();
      emit(text, sn_out);
      if (!sn_wiring.empty()) {
        std::ofstream f(sn_wiring);
        rsn::write_wiring_csv(f, last);
      }
    } else if (*st) {
      if (st_shape.empty() == (st_stair == 0))
        throw std::domain_error("give exactly one of --shape, --staircase");
      rsn::YoungDiagram shape =
          st_shape.empty() ? rsn::YoungDiagram::staircase(st_stair) : parse_shape(st_shape);
      rsn::Rng rng(resolve_seed(st_seed));
      rsn::StandardTableau t = rsn::sample_syt_uniform(shape, rng);
      if (st_poisson)
        emit(rsn::tableau_to_json(rsn::poissonize(t, rng)), st_out);
      else
        emit(rsn::tableau_to_json(t), st_out);
    } else if (*ke) {
      double v = rsn::k_edge(ke_x1, ke_u1, ke_x2, ke_u2);
      nlohmann::json j = {{"query", {{"x1", ke_x1}, {"u1", ke_u1}, {"x2", ke_x2}, {"u2", ke_u2}}},
                          {"value", v},
                          {"metadata", {{"kernel", "edge"}}}};
      emit(j.dump(2), ke_out);
    } else if (*kl) {
      rsn::YoungDiagram shape = parse_shape(kl_shape);
      int n = kl_n > 0 ? kl_n : shape.num_rows();
      rsn::ContourConfig cfg;
      cfg.nodes_per_unit = kl_nodes;
      rsn::KLambdaResult r = rsn::k_lambda(shape, n, kl_x1, kl_t1, kl_x2, kl_t2, cfg);
      nlohmann::json j = {
          {"query",
           {{"shape", shape.rows}, {"n", n}, {"x1", kl_x1}, {"t1", kl_t1}, {"x2", kl_x2}, {"t2", kl_t2}}},
          {"value", r.value},
          {"metadata",
           {{"kernel", "lambda"}, {"nodes", r.nodes_z}, {"imag_residual", r.imag_residual},
            {"richardson_change", r.richardson_change}}}};
      emit(j.dump(2), kl_out);
    } else if (*fr) {
      std::vector<double> ts;
      if (!fr_grid.empty()) {
        std::ifstream f(fr_grid);
        if (!f) throw std::domain_error("cannot open grid file " + fr_grid);
        std::string line;
        while (std::getline(f, line)) {
          if (line.empty() || line[0] == '#' || line[0] == 't') continue;
          ts.push_back(std::stod(line));
        }
      } else {
        ts.push_back(fr_t);
      }
      if (fr_format == "csv" || !fr_grid.empty()) {
        std::ostringstream os;
        os << "t,gap_probability,first_swap_cdf,dyson_tail\n";
        os.precision(15);
        for (double t : ts) {
          double g = rsn::gap_probability(t, fr_nodes);
          os << t << "," << g << "," << (1 - g) << ","
             << (t > 0 ? rsn::dyson_tail(t) : 0.0) << "\n";
        }
        std::string text = os.str();
        text.pop_back();
        emit(text, fr_out);
      } else {
        double g = rsn::gap_probability(fr_t, fr_nodes);
        nlohmann::json j = {{"t", fr_t},
                            {"nodes", fr_nodes},
                            {"gap_probability", g},
                            {"first_swap_cdf", 1 - g}};
        if (fr_t > 0) j["dyson_tail"] = rsn::dyson_tail(fr_t);
        emit(j.dump(2), fr_out);
      }
    } else if (*le) {
      std::ifstream f(le_in);
      if (!f) throw std::domain_error("cannot open input file " + le_in);
      std::stringstream buf;
      buf << f.rdbuf();
      rsn::PointConfiguration pts = rsn::points_from_json(buf.str());
      rsn::PointConfiguration swaps =
          rsn::local_eg_on_points(pts, le_window[0], le_window[1], le_tmax, le_search);
      emit(rsn::points_to_json(swaps, "swap"), le_out);
    } else if (*ex) {
      std::uint64_t seed = resolve_seed(ea.seed_str);
      rsn::ExperimentReport rep;
      if (*ex_fs)
        rep = rsn::first_swap_experiment(ea.n, ea.alpha, ea.trials, seed, ea.threads);
      else if (*ex_gap)
        rep = rsn::gap_experiment(ea.n, ea.alpha, ea.beta_time, ea.trials, seed, ea.threads);
      else if (*ex_corr)
        rep = rsn::correlation_experiment(ea.n, ea.alpha, ea.trials, seed, ea.u_max, ea.threads);
      else if (*ex_int)
        rep = rsn::intensity_experiment(ea.n, ea.t_max, ea.trials, seed, ea.threads);
      else if (*ex_semi)
        rep = rsn::semicircle_experiment(ea.n, ea.trials, seed, ea.threads);
      else if (*ex_ague) {
        rsn::AgueSpec spec;
        spec.M = ea.M;
        spec.samples = ea.samples;
        rep = rsn::ague_corners_experiment(spec, seed, ea.threads);
      } else if (*ex_stat) {
        rep = rsn::stationarity_experiment(ea.n, ea.alpha, ea.delta, ea.trials, seed, ea.threads);
      }
      write_report(rep, ea);
    }
  } catch (const rsn::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
