#include "quasilab/wavefront.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_MassMap(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto points = static_cast<std::size_t>(state.range(1));
  const auto threads = static_cast<unsigned>(state.range(2));
  const auto family = quasilab::concentrating_bump_family(dim, quasilab::dyadic_ladder(4, 12));
  const auto grid = quasilab::PhaseSpaceGrid::standard(dim, points);
  for (auto _ : state) benchmark::DoNotOptimize(quasilab::wavefront_mass_map(family, grid, threads));
}
BENCHMARK(BM_MassMap)
    ->Args({1, 64, 1})
    ->Args({2, 32, 1})
    ->Args({2, 32, 4})
    ->Args({2, 64, 4})
    ->Args({3, 16, 4})
    ->Unit(benchmark::kMillisecond);

void BM_CoherentMass(benchmark::State& state) {
  const auto family = quasilab::concentrating_bump_family(2, {std::ldexp(1.0, -static_cast<int>(state.range(0)))});
  const double x[] = {0.3, 0.7}, xi[] = {0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(quasilab::coherent_mass(family.members[0], x, xi, family.h_ladder[0]));
}
BENCHMARK(BM_CoherentMass)->DenseRange(4, 10, 2);

}  // namespace
BENCHMARK_MAIN();
