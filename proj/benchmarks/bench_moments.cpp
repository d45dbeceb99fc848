#include <benchmark/benchmark.h>

#include <cmath>

#include "starclt/ccr_gue.hpp"
#include "starclt/finite_scale.hpp"
#include "starclt/limit_moments.hpp"
#include "starclt/partitions.hpp"

using namespace starclt;

namespace {

const WeightVector& weights() {
  static const WeightVector w = WeightVector::parse("1/2,1/3,1/6");
  return w;
}

template <ExactScalar (*Route)(const WeightVector&, int)>
void BM_Route(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Route(weights(), k));
}

void BM_MatrixMoment(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_moment(weights(), k));
  state.counters["tuples"] = std::pow(3.0, k);
}

void BM_EnumeratePartitions(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  long long n = 0;
  for (auto _ : state) {
    n = 0;
    for_each_partition(k, [&](const SetPartition&) { ++n; });
  }
  state.counters["partitions"] = static_cast<double>(n);
}

void BM_EnumerateBicoloured(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  long long n = 0;
  for (auto _ : state) {
    n = 0;
    for_each_bicoloured(k, [&](const BicolouredPairPartition&) { ++n; });
  }
  state.counters["pairings"] = static_cast<double>(n);
}

void BM_SnMoment(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_n_moment(weights(), 32, k));
}

}  // namespace

BENCHMARK(BM_Route<moment_routeA>)->Name("routeA")->DenseRange(4, 10, 2);
BENCHMARK(BM_Route<moment_routeB>)->Name("routeB")->DenseRange(4, 12, 2);
BENCHMARK(BM_Route<moment_routeC>)->Name("routeC")->DenseRange(4, 12, 2);
BENCHMARK(BM_MatrixMoment)->Name("routeD")->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumeratePartitions)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateBicoloured)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnMoment)->DenseRange(4, 8, 2);
BENCHMARK_MAIN();
