#include <fracplap/discrete.hpp>
#include <fracplap/funcs.hpp>
#include <fracplap/reps.hpp>
#include <fracplap/seminorm.hpp>

#include <benchmark/benchmark.h>

using namespace fracplap;

namespace {

const TestFunction& gauss() {
  static TestFunction u = catalog("gaussian", 1);
  return u;
}

QuadConfig cfg() {
  QuadConfig q;
  q.rel_tol = 1e-6;
  q.abs_tol = 1e-10;
  return q;
}

void BM_Direct(benchmark::State& state) {
  const FracParams params(1, 0.5, state.range(0) / 10.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        eval_direct(gauss(), Vec::d1(0.5), params, cfg()).value);
}
BENCHMARK(BM_Direct)->Arg(15)->Arg(20)->Arg(30);

void BM_Semigroup(benchmark::State& state) {
  const FracParams params(1, 0.5, state.range(0) / 10.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        eval_semigroup(gauss(), Vec::d1(0.5), params, cfg()).value);
}
BENCHMARK(BM_Semigroup)->Arg(20)->Arg(30);

void BM_Balakrishnan(benchmark::State& state) {
  const FracParams params(1, 0.5, state.range(0) / 10.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        eval_balakrishnan(gauss(), Vec::d1(0.5), params, cfg()).value);
}
BENCHMARK(BM_Balakrishnan)->Arg(20)->Arg(30);

void BM_Extension(benchmark::State& state) {
  const FracParams params(1, 0.5, 2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        eval_extension(gauss(), Vec::d1(0.5), params, cfg()).value);
}
BENCHMARK(BM_Extension);

void BM_BuildWeights(benchmark::State& state) {
  const FracParams params(1, 0.5, 2.0);
  const int stencil = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        build_weights(params, 0.1, 0.0, stencil, cfg()).w1d.size());
}
BENCHMARK(BM_BuildWeights)->Arg(32)->Arg(128);

} // namespace

BENCHMARK_MAIN();
