#include <benchmark/benchmark.h>

#include "bellhopf/partition_function.hpp"

namespace {

using namespace bellhopf;

void BM_RegularizedGauss(benchmark::State& state) {
  const auto p = ModelParams::from_beta_epsilon(1);
  const QuadratureConfig q{cutoff_for_tail(p, 1e-12), QuadratureMethod::gauss,
                           static_cast<unsigned>(state.range(0)), 1e-6};
  for (auto _ : state) benchmark::DoNotOptimize(regularized_Z(p, q).value);
}
BENCHMARK(BM_RegularizedGauss)->Arg(16)->Arg(64);

void BM_RegularizedSeries(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(regularized_series_Z(0.5, 20, order));
}
BENCHMARK(BM_RegularizedSeries)->Arg(50)->Arg(200);

void BM_CombinatorialZ(benchmark::State& state) {
  const auto p = ModelParams::from_beta_epsilon(1);
  const QuadratureConfig q{5, QuadratureMethod::gauss, 64, 1e-6};
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(combinatorial_Z(p, q, order).value);
}
BENCHMARK(BM_CombinatorialZ)->Arg(40)->Arg(90);

}  // namespace
