#include <benchmark/benchmark.h>

#include "algconn/builder.hpp"
#include "algconn/consensus.hpp"
#include "algconn/forest_oracle.hpp"
#include "algconn/search.hpp"
#include "algconn/spectra.hpp"

using namespace algconn;

static void BM_Build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = n * (n - 1) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(build(n, m));
}
BENCHMARK(BM_Build)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntMatrix L = build(n, n * (n - 1) / 2).laplacian();
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(L));
}
BENCHMARK(BM_Eigenvalues)->Arg(5)->Arg(8)->Arg(16)->Arg(32);

static void BM_CharPolyExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntMatrix L = build(n, n * (n - 1) / 2).laplacian();
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(L));
}
BENCHMARK(BM_CharPolyExact)->Arg(5)->Arg(8)->Arg(12)->Arg(16);

static void BM_ForestOracle(benchmark::State& state) {
  DiGraph g = build(5, 9);
  for (auto _ : state)
    benchmark::DoNotOptimize(forest_oracle::count_forests_k(g, 1));
}
BENCHMARK(BM_ForestOracle);

static void BM_Search(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  SearchOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(max_connectivity(4, m, opts));
}
BENCHMARK(BM_Search)->Arg(3)->Arg(6)->Arg(9);

static void BM_Simulate(benchmark::State& state) {
  DiGraph g = build(6, 17);
  std::vector<double> x0 = {1, -1, 0.5, -0.5, 0.25, -0.25};
  double dt = stable_step(g);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(g, x0, dt, 10.0));
}
BENCHMARK(BM_Simulate);

BENCHMARK_MAIN();
