#include <benchmark/benchmark.h>

#include "uqsl/classify.hpp"
#include "uqsl/tangle.hpp"

using namespace uqsl;

namespace {

void BM_trefoil_invariant(benchmark::State& state) {
  BraidSpec b = braid_of(knot_db("3_1"));
  (void)invariant(b);  // warm the crossing kit
  for (auto _ : state) benchmark::DoNotOptimize(invariant(b));
}
BENCHMARK(BM_trefoil_invariant);

void BM_10_132_invariant(benchmark::State& state) {
  BraidSpec b = braid_of(knot_db("10_132"));
  (void)invariant(b);
  for (auto _ : state) benchmark::DoNotOptimize(invariant(b));
}
BENCHMARK(BM_10_132_invariant);

void BM_torus_braid(benchmark::State& state) {
  long b = state.range(0);
  (void)invariant(torus_braid(1));
  for (auto _ : state) benchmark::DoNotOptimize(invariant(torus_braid(b)));
}
BENCHMARK(BM_torus_braid)->Arg(5)->Arg(10)->Arg(15);

void BM_classify_ribbon(benchmark::State& state) {
  SuperAData d = build_super_a(4, {1, 2, 3, 4}, (long)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ribbon_pairs(d));
}
BENCHMARK(BM_classify_ribbon)->Arg(4)->Arg(8);

void BM_braiding_W(benchmark::State& state) {
  SModule W = symbolic_W();
  for (auto _ : state) benchmark::DoNotOptimize(r_matrix_braiding(W, W, 6));
}
BENCHMARK(BM_braiding_W);

void BM_simple_module(benchmark::State& state) {
  long N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(simple_module(N, 1, 1));
}
BENCHMARK(BM_simple_module)->Arg(4)->Arg(8);

void BM_cyclotomic_mul(benchmark::State& state) {
  CycloScalar a = CycloScalar::q_power(12, 5) + CycloScalar(12, 3);
  CycloScalar b = CycloScalar::q_power(12, 7) - CycloScalar(12, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_cyclotomic_mul);

}  // namespace

BENCHMARK_MAIN();
