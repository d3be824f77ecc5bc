#include <benchmark/benchmark.h>

#include "uqgln/bethe.hpp"
#include "uqgln/gauss.hpp"
#include "uqgln/rmatrix.hpp"
#include "uqgln/rng.hpp"

using namespace uqgln;

namespace {

OpMatrix random_matrix(int n, Sampler& s) {
  OpMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = s.positive_rational();
  return m;
}

void BM_MatMul(benchmark::State& state) {
  Sampler s(7);
  const int n = static_cast<int>(state.range(0));
  const OpMatrix a = random_matrix(n, s);
  const OpMatrix b = random_matrix(n, s);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatMul)->Arg(16)->Arg(32);

void BM_Invert(benchmark::State& state) {
  Sampler s(11);
  const int n = static_cast<int>(state.range(0));
  const OpMatrix a = random_matrix(n, s);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_Invert)->Arg(8)->Arg(16);

void BM_Ybe(benchmark::State& state) {
  Sampler s(13);
  const int n = static_cast<int>(state.range(0));
  const Rational q = s.generic_q(), u = s.positive_rational(), v = s.positive_rational(),
                 w = s.positive_rational();
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe(n, q, u, v, w));
}
BENCHMARK(BM_Ybe)->Arg(2)->Arg(4);

void BM_GaussExtract(benchmark::State& state) {
  Sampler s(17);
  const int n = static_cast<int>(state.range(0));
  const Rational q = s.generic_q(), z = s.positive_rational(), t = s.positive_rational();
  const ModuleWithL mod = make_evaluation_module(n, q, z);
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_extract(mod.lplus, mod.lminus, t, GaussFlavor::first));
}
BENCHMARK(BM_GaussExtract)->Arg(3)->Arg(4);

void BM_RouteTrace(benchmark::State& state) {
  Sampler s(19);
  const int n = static_cast<int>(state.range(0));
  BetheTask task;
  task.comp.N = n;
  task.comp.n.assign(static_cast<size_t>(n - 1), 1);
  task.q = s.generic_q();
  const Rational z = s.positive_rational();
  task.module = make_evaluation_module(n, task.q, z);
  task.t = sample_assignment(task.comp, task.q, {z}, s);
  for (auto _ : state) benchmark::DoNotOptimize(bethe_trace(task));
}
BENCHMARK(BM_RouteTrace)->Arg(3)->Arg(4);

void BM_RouteWHat(benchmark::State& state) {
  Sampler s(23);
  const int n = static_cast<int>(state.range(0));
  BetheTask task;
  task.comp.N = n;
  task.comp.n.assign(static_cast<size_t>(n - 1), 1);
  task.q = s.generic_q();
  const Rational z = s.positive_rational();
  task.module = make_evaluation_module(n, task.q, z);
  task.t = sample_assignment(task.comp, task.q, {z}, s);
  for (auto _ : state) benchmark::DoNotOptimize(weight_fn_w_hat(task));
}
BENCHMARK(BM_RouteWHat)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
