#include <benchmark/benchmark.h>

#include <random>

#include "bellhopf/boson.hpp"
#include "bellhopf/boson_text.hpp"
#include "bellhopf/egf.hpp"
#include "bellhopf/hopf.hpp"
#include "bellhopf/hopf_axioms.hpp"

namespace {

using namespace bellhopf;

void BM_NormalOrderNumberPower(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normal_order(BosonWord::number_power(n)).size());
}
BENCHMARK(BM_NormalOrderNumberPower)->DenseRange(4, 12, 4);

void BM_WordMoments(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto w = parse_boson_expression("a + ad");
  for (auto _ : state) benchmark::DoNotOptimize(word_moments(w, n, RationalComplex(1)).size());
}
BENCHMARK(BM_WordMoments)->Arg(8)->Arg(12);

void BM_EgfLogBell(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const auto a = bell_egf(order);
  for (auto _ : state) benchmark::DoNotOptimize(egf_log(a).order());
}
BENCHMARK(BM_EgfLogBell)->Arg(12)->Arg(40)->Arg(100);

void BM_Coproduct(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = random_element(rng, static_cast<unsigned>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(a).size());
}
BENCHMARK(BM_Coproduct)->Arg(4)->Arg(8);

void BM_HopfAxiomSuite(benchmark::State& state) {
  AxiomConfig config;
  config.max_weight = static_cast<unsigned>(state.range(0));
  config.random_elements = 20;
  for (auto _ : state) benchmark::DoNotOptimize(check_all_axioms(config).size());
}
BENCHMARK(BM_HopfAxiomSuite)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
