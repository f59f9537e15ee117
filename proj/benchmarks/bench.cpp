#include <benchmark/benchmark.h>

#include "limitcheeger/cheeger.hpp"
#include "limitcheeger/coarea.hpp"
#include "limitcheeger/gallery.hpp"
#include "limitcheeger/graphing.hpp"
#include "limitcheeger/spectral.hpp"
#include "oracles.hpp"

using namespace limitcheeger;

namespace {

StepKernel random_kernel(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  StepKernel k;
  k.n = n;
  k.cuts.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    k.cuts[i] = static_cast<double>(i) / static_cast<double>(n);
  k.m.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = rng.uniform(-1.0, 1.0);
      k.m[i * n + j] = v;
      k.m[j * n + i] = v;
    }
  return k;
}

void BM_CutNormExact(benchmark::State& state) {
  const StepKernel k = random_kernel(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(cut_norm(k));
}

void BM_FractionalCheeger(benchmark::State& state) {
  Rng rng(7);
  const WeightedGraph g =
      oracles::random_connected_graph(rng, static_cast<std::size_t>(state.range(0)));
  CheegerOptions opt;
  opt.starts = 32;
  for (auto _ : state) benchmark::DoNotOptimize(fractional_cheeger(g, opt));
}

void BM_IntegralCheeger(benchmark::State& state) {
  const WeightedGraph g = oracles::cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integral_cheeger(g));
}

void BM_LambdaGraph(benchmark::State& state) {
  Rng rng(11);
  const WeightedGraph g =
      oracles::random_regular_graph(rng, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_graph(g));
}

void BM_CoareaGraphon(benchmark::State& state) {
  Rng rng(13);
  const StepGraphon w = oracles::random_graphon(rng, static_cast<std::size_t>(state.range(0)));
  const StepFunction f = oracles::random_step_function(rng, w.cuts);
  for (auto _ : state) benchmark::DoNotOptimize(coarea_graphon(w, f));
}

void BM_ConditionalStep(benchmark::State& state) {
  const AnalyticOracle oracle(vanishing_cheeger(10));
  for (auto _ : state)
    benchmark::DoNotOptimize(conditional_step(oracle, static_cast<int>(state.range(0))));
}

void BM_RotationCut(benchmark::State& state) {
  const double golden = 0.61803398874989484820;
  for (auto _ : state)
    benchmark::DoNotOptimize(rotation_cut(golden, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_CutNormExact)->Arg(12)->Arg(18)->Arg(22);
BENCHMARK(BM_FractionalCheeger)->Arg(4)->Arg(6);
BENCHMARK(BM_IntegralCheeger)->Arg(12)->Arg(18)->Arg(22);
BENCHMARK(BM_LambdaGraph)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_CoareaGraphon)->Arg(8);
BENCHMARK(BM_ConditionalStep)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_RotationCut)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
