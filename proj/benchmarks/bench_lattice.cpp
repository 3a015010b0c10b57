#include "quasilab/lattice.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

quasilab::FrequencyVector related_frequencies(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 20);
  std::vector<quasilab::BasisNumber> entries;
  for (std::size_t i = 0; i < n; ++i) {
    // Two-element basis so the relation lattice has rank about n - 2.
    entries.emplace_back(std::vector<quasilab::Rational>{quasilab::Rational(num(rng), den(rng)),
                                                         quasilab::Rational(num(rng), den(rng))});
  }
  return quasilab::FrequencyVector(entries);
}

void BM_RelationLattice(benchmark::State& state) {
  const auto omega = related_frequencies(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(quasilab::relation_lattice(omega));
}
BENCHMARK(BM_RelationLattice)->DenseRange(2, 8, 2);

void BM_SplitFrequencies(benchmark::State& state) {
  const auto omega = related_frequencies(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(quasilab::split_frequencies(omega));
}
BENCHMARK(BM_SplitFrequencies)->DenseRange(2, 8, 2);

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-50, 50);
  quasilab::IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(quasilab::hermite_normal_form(a));
}
BENCHMARK(BM_HermiteNormalForm)->DenseRange(2, 10, 2);

}  // namespace
