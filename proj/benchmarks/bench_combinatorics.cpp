#include <benchmark/benchmark.h>

#include "bellhopf/combinatorics.hpp"
#include "bellhopf/dobinski.hpp"
#include "bellhopf/set_partition.hpp"

namespace {

using namespace bellhopf;

void BM_StirlingTriangle(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    StirlingTable table(n);
    benchmark::DoNotOptimize(table.at(n, n / 2));
  }
}
BENCHMARK(BM_StirlingTriangle)->Arg(50)->Arg(200)->Arg(500);

void BM_EnumerateSetPartitions(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for (auto s = enumerate_set_partitions(n); !s.done(); s.advance()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * bell(n).get_si());
}
BENCHMARK(BM_EnumerateSetPartitions)->Arg(8)->Arg(10)->Arg(12);

void BM_DiagramCensus(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diagram_census(n).counts.size());
}
BENCHMARK(BM_DiagramCensus)->Arg(8)->Arg(10);

void BM_Dobinski(benchmark::State& state) {
  const auto digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dobinski_bell(15, 70, digits).value.to_double());
}
BENCHMARK(BM_Dobinski)->Arg(50)->Arg(200);

}  // namespace
