#include <benchmark/benchmark.h>

#include "rdyn/rdyn.hpp"

using namespace rdyn;

namespace {

const UniPoly z = UniPoly::x();
UniPoly c(long k) { return UniPoly::constant(Q(k)); }

// Swinnerton-Dyer polynomial for sqrt 2, sqrt 3, sqrt 5: irreducible over Q but
// splits into factors of degree <= 2 modulo every prime.
UniPoly swinnerton_dyer() {
  return z.pow(8) - z.pow(6) * Q(40) + z.pow(4) * Q(352) - z * z * Q(960) + c(576);
}

}  // namespace

static void BM_FactorProductOfIterates(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RatMap A(z * z + c(1));
  const UniPoly p = iterate(A, n).num() - z;
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate(p));
}
BENCHMARK(BM_FactorProductOfIterates)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_FactorDense(benchmark::State& state) {
  const UniPoly p = swinnerton_dyer();
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate(p));
}
BENCHMARK(BM_FactorDense)->Unit(benchmark::kMillisecond);

static void BM_Conjugators(benchmark::State& state) {
  const RatMap B(z * z * (z - c(2)), c(1) - z * Q(2));
  const RatMap mu = RatMap::mobius(2, 1, 1, 3);
  const RatMap B2 = compose(compose(mu, B), mu.inverse());
  for (auto _ : state) benchmark::DoNotOptimize(conjugators(B, B2));
}
BENCHMARK(BM_Conjugators)->Unit(benchmark::kMillisecond);

static void BM_MaximalOrbifold(benchmark::State& state) {
  const RatMap th(z * z + c(1), z * Q(2));
  const RatMap B(z * z * (z - c(2)), c(1) - z * Q(2));
  const RatMap A = iterate(*right_divide(compose(th, B), th), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_orbifold(A));
}
BENCHMARK(BM_MaximalOrbifold)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_AllLeftFactors(benchmark::State& state) {
  const RatMap F = iterate(RatMap((z + c(1)).pow(2)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_left_factors(F, 2));
}
BENCHMARK(BM_AllLeftFactors)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_GenusSeparated(benchmark::State& state) {
  const RatMap Y1(z.pow(3) - z), Y2(z * z);
  for (auto _ : state) benchmark::DoNotOptimize(genus_separated(Y1, Y2));
}
BENCHMARK(BM_GenusSeparated)->Unit(benchmark::kMillisecond);

static void BM_InvariantCurveSearch(benchmark::State& state) {
  const RatMap A((z + c(1)).pow(2));
  SearchConfig cfg;
  cfg.d1 = 1;
  cfg.d2 = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_invariant_curves(A, A, cfg));
}
BENCHMARK(BM_InvariantCurveSearch)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
