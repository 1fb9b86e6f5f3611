// OpenMP beta sweep vs its serial reference on identical grids. Items/s is
// most-probable-exit solves per second; on a single hardware thread the two
// should sit at parity, with the parallel path pulling ahead as cores appear.

#include <benchmark/benchmark.h>

#include <vector>

#include "pairgate/maxprob.hpp"
#include "pairgate/sweep.hpp"

namespace {

std::vector<double> beta_grid(int n) {
  std::vector<double> betas(n);
  for (int i = 0; i < n; ++i)
    betas[i] = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
  return betas;
}

void bench_sweep_parallel(benchmark::State& state) {
  const auto betas = beta_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto results = pairgate::sweep_beta(0.05, 0.5, betas);
    benchmark::DoNotOptimize(results.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(betas.size()));
  state.counters["threads"] = pairgate::max_threads();
}

void bench_sweep_serial(benchmark::State& state) {
  const auto betas = beta_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto results = pairgate::sweep_beta_serial(0.05, 0.5, betas);
    benchmark::DoNotOptimize(results.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(betas.size()));
}

BENCHMARK(bench_sweep_parallel)->Arg(64)->Arg(256);
BENCHMARK(bench_sweep_serial)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
