#include <benchmark/benchmark.h>

#include "irs/engine.hpp"
#include "irs/oracle.hpp"
#include "irs/step_b.hpp"

using namespace irs;

static void BM_SolvePipeline(benchmark::State& state) {
  long long n = state.range(0), d = state.range(1);
  Graph g = generate_random_regular((int)n, (int)d, 3);
  SolveConfig cfg;
  cfg.auto_overrides = true;
  for (auto _ : state) {
    cfg.seed++;
    auto rep = solve(g, cfg);
    benchmark::DoNotOptimize(rep.k_achieved);
  }
}
BENCHMARK(BM_SolvePipeline)->Args({2000, 50})->Args({2000, 100})->Args({4000, 50})
    ->Unit(benchmark::kMillisecond);

static void BM_Fallback(benchmark::State& state) {
  long long n = state.range(0);
  Graph g = generate_min_degree_graph((int)n, 8, 0.05, 3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto f = baseline_solve(g, ++seed);
    benchmark::DoNotOptimize(f.k);
  }
}
BENCHMARK(BM_Fallback)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_ExactStrength(benchmark::State& state) {
  Graph g = generate_random_regular((int)state.range(0), 3, 7);
  for (auto _ : state) {
    auto r = exact_strength(g);
    benchmark::DoNotOptimize(r.k);
  }
}
BENCHMARK(BM_ExactStrength)->Arg(8)->Arg(10)->Arg(12);

static void BM_ShiftIntervals(benchmark::State& state) {
  std::vector<std::pair<long long, long long>> iv;
  for (long long i = 0; i < state.range(0); ++i) iv.push_back({i * 3, i * 3 + 5});
  for (auto _ : state) {
    auto out = shift_intervals(iv);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ShiftIntervals)->Arg(100)->Arg(10000);

BENCHMARK_MAIN();
