#include <benchmark/benchmark.h>

#include <random>

#include "phi4/canonical.hpp"
#include "phi4/gff.hpp"
#include "phi4/valuation.hpp"
#include "phi4/wick.hpp"

using namespace phi4;

static void BM_Canonicalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> v(0, n - 1);
  while (static_cast<int>(edges.size()) < 2 * n) {
    const int a = v(rng);
    const int b = v(rng);
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  const Multigraph g(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(g));
}
BENCHMARK(BM_Canonicalize)->Arg(4)->Arg(8)->Arg(12);

// Uncached enumeration: p0 memoizes, so bucket through the raw enumerator.
static void BM_WickEnumerate(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DiagramSum s;
    enumerate_matchings(a, 1, [&](const Matching& m) { s.add(matching_graph(a, 1, m), 1); });
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_WickEnumerate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_PiKernel(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pi_kernel(diagrams::double_triangle(), N).value);
}
BENCHMARK(BM_PiKernel)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_PiMomentum(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pi_momentum(diagrams::bubble(), N).value);
}
BENCHMARK(BM_PiMomentum)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_GffSamples(benchmark::State& state) {
  GffSampleConfig cfg;
  cfg.N = static_cast<int>(state.range(0));
  cfg.samples = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(gff_samples(cfg).size());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cfg.samples));
}
BENCHMARK(BM_GffSamples)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
