#include <benchmark/benchmark.h>

#include "sasaki/constructors.hpp"
#include "sasaki/descriptions.hpp"
#include "sasaki/sasaki_filters.hpp"

using namespace sasaki;

static void BM_VerifyOmlBoolean(benchmark::State& state) {
  const OmlTables t = to_tables(boolean_algebra(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_oml(t));
  state.SetLabel(std::to_string(t.n) + " elements");
}
BENCHMARK(BM_VerifyOmlBoolean)->DenseRange(3, 6);

static void BM_EnumerateFilters(benchmark::State& state) {
  const FiniteOml L = state.range(0) == 0 ? boolean_algebra(4) : mo(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_filters(L, 64, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_EnumerateFilters)->Args({0, 1})->Args({0, 4})->Args({3, 1})->Args({6, 1})->Args({6, 4});

static void BM_EnumerateFbas(benchmark::State& state) {
  const FiniteOml L = from_greechie(parse_greechie("a b c\nc d e\ne f g\n"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fbas(L));
}
BENCHMARK(BM_EnumerateFbas);

static void BM_E1IffE2(benchmark::State& state) {
  const FiniteOml L = mo(static_cast<std::size_t>(state.range(0)));
  const DescriptionSpace space(L);
  for (auto _ : state) benchmark::DoNotOptimize(check_e1_iff_e2(space));
}
BENCHMARK(BM_E1IffE2)->DenseRange(2, 4);
