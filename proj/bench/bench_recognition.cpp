// Serial reference vs OpenMP sweeps.
#include <benchmark/benchmark.h>

#include "geodkit/construct.hpp"
#include "geodkit/enumerate.hpp"
#include "geodkit/families.hpp"
#include "geodkit/oracle.hpp"
#include "geodkit/recognition.hpp"
#include "geodkit/weighted.hpp"

using namespace geodkit;

namespace {

Graph sample(int n) {
  Rng rng(kDefaultSeed);
  return random_connected_graph(n, 4.0 / n, rng);
}

void BM_recognize_serial(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(recognize_serial(g));
  }
}

void BM_recognize_parallel(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(recognize(g));
  }
}

void BM_oracle(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_is_geodetic(g));
  }
}

void BM_weighted_serial(benchmark::State& state) {
  const Graph g = assign_weights(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_weighted_serial(g));
  }
}

void BM_weighted_parallel(benchmark::State& state) {
  const Graph g = assign_weights(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_weighted(g));
  }
}

void BM_enumerate_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_connected_graphs(n, [](std::uint64_t, const Graph& g) { benchmark::DoNotOptimize(recognize_serial(g)); }));
  }
}

void BM_enumerate_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_connected_graphs_parallel(
        n, [](std::uint64_t, const Graph& g) { benchmark::DoNotOptimize(recognize_serial(g)); }));
  }
}

}  // namespace

BENCHMARK(BM_recognize_serial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_recognize_parallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_oracle)->Arg(64)->Arg(256);
BENCHMARK(BM_weighted_serial)->Arg(64)->Arg(128);
BENCHMARK(BM_weighted_parallel)->Arg(64)->Arg(128);
BENCHMARK(BM_enumerate_serial)->Arg(5)->Arg(6);
BENCHMARK(BM_enumerate_parallel)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
