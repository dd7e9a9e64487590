#include <benchmark/benchmark.h>

#include "rsn/edelman_greene.hpp"
#include "rsn/fredholm.hpp"
#include "rsn/kernels.hpp"
#include "rsn/rng.hpp"
#include "rsn/tableau.hpp"

namespace {

void BM_HookWalkSample(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  rsn::YoungDiagram d = rsn::YoungDiagram::staircase(n);
  rsn::Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsn::sample_syt_uniform(d, rng));
  }
  state.SetItemsProcessed(state.iterations() * d.size());
}
BENCHMARK(BM_HookWalkSample)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EgMap(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  rsn::Rng rng(2);
  rsn::StandardTableau t = rsn::sample_syt_uniform(rsn::YoungDiagram::staircase(n), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsn::eg_map(t));
  }
}
BENCHMARK(BM_EgMap)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_KEdge(benchmark::State& state) {
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsn::k_edge(0, u, 2, 1.3));
    u = u < 8 ? u + 0.1 : 0.1;
  }
}
BENCHMARK(BM_KEdge);

void BM_GapProbability(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsn::gap_probability(4.0, m));
  }
}
BENCHMARK(BM_GapProbability)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_KLambda(benchmark::State& state) {
  rsn::YoungDiagram shape({3, 2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsn::k_lambda(shape, 3, 0, 0.5, 0, 0.5));
  }
}
BENCHMARK(BM_KLambda)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
