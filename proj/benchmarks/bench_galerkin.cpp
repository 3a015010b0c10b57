#include "quasilab/galerkin.hpp"
#include "quasilab/quasimode.hpp"

#include <benchmark/benchmark.h>

namespace {

quasilab::OperatorOnTPrime golden_operator() {
  using namespace quasilab;
  FactoryTemplate t;
  t.omega = rational_frequencies({2, 3});
  t.hessian = HessianForm(Eigen::MatrixXd::Identity(2, 2));
  const auto split = split_frequencies(t.omega);
  TrigPolynomial v(1);
  v.set({-1}, 0.5);
  v.set({0}, 2.0);
  v.set({1}, 0.5);
  const auto fq = build_factory_quasimode(t, split, {0}, v, dyadic_ladder(4, 7));
  return assemble_Q_alpha(transform_quadratic_form(t.hessian, split), {0}, fq.r0_hat);
}

void BM_GalerkinNullspace(benchmark::State& state) {
  const auto op = golden_operator();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quasilab::galerkin_nullspace(op, n));
}
BENCHMARK(BM_GalerkinNullspace)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);

void BM_UniqueContinuation(benchmark::State& state) {
  const auto null = quasilab::galerkin_nullspace(golden_operator(), 16);
  for (auto _ : state) benchmark::DoNotOptimize(quasilab::unique_continuation_constant(null, {{0.0}, {0.25}}));
}
BENCHMARK(BM_UniqueContinuation);

void BM_FactoryBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(golden_operator());
}
BENCHMARK(BM_FactoryBuild);

}  // namespace
