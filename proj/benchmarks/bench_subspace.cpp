#include <benchmark/benchmark.h>

#include <random>

#include "sasaki/ks_search.hpp"
#include "sasaki/nonprincipal.hpp"
#include "sasaki/subspace.hpp"

using namespace sasaki;

namespace {

Subspace random_subspace(std::mt19937_64& rng, std::size_t dim, std::size_t rank) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  std::vector<Vector> vs(rank);
  for (auto& v : vs) {
    for (std::size_t i = 0; i < dim; ++i) v.emplace_back(mpq_class(num(rng), den(rng)));
  }
  return Subspace::span(dim, vs);
}

}  // namespace

static void BM_SasakiProjection(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Subspace x = random_subspace(rng, dim, dim / 2);
  const Subspace y = random_subspace(rng, dim, dim - 1);
  for (auto _ : state) benchmark::DoNotOptimize(sub_sasaki(x, y));
}
BENCHMARK(BM_SasakiProjection)->DenseRange(3, 6);

static void BM_ProjectionImage(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Subspace x = random_subspace(rng, dim, dim / 2);
  const Subspace y = random_subspace(rng, dim, dim - 1);
  for (auto _ : state) benchmark::DoNotOptimize(projection_image(x, y));
}
BENCHMARK(BM_ProjectionImage)->DenseRange(3, 6);

static void BM_KsSearchCabello(benchmark::State& state) {
  const RayConfig cfg = build_config(cabello_rays(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(search_coloring(cfg));
}
BENCHMARK(BM_KsSearchCabello);

static void BM_BuildConfigCabello(benchmark::State& state) {
  const auto rays = cabello_rays();
  for (auto _ : state) benchmark::DoNotOptimize(build_config(rays, 4));
}
BENCHMARK(BM_BuildConfigCabello);

static void BM_NonprincipalConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nonprincipal_construction(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_NonprincipalConstruction)->DenseRange(3, 6);
