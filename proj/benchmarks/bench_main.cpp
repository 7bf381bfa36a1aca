#include <benchmark/benchmark.h>

#include "qinv/catalog.hpp"
#include "qinv/hilbert.hpp"
#include "qinv/measures.hpp"
#include "qinv/random.hpp"
#include "qinv/series.hpp"
#include "qinv/unitary.hpp"

using namespace qinv;

static void BM_PolynomialProduct(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Polynomial f = ground_form(k).poly;
  const Polynomial f2 = f * f;
  for (auto _ : state) benchmark::DoNotOptimize(f2 * f2);
}
BENCHMARK(BM_PolynomialProduct)->DenseRange(2, 4);

static void BM_Transvect(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Covariant f = ground_form(k);
  const std::vector<int> eps(static_cast<std::size_t>(k), 1);
  for (auto _ : state) benchmark::DoNotOptimize(transvect(f, f, eps));
}
BENCHMARK(BM_Transvect)->DenseRange(2, 5);

static void BM_TransvectChain(benchmark::State& state) {
  const Covariant& t = catalog_3("T");
  const Covariant& f = catalog_3("f");
  const std::vector<int> eps{1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(transvect(t, f, eps));
}
BENCHMARK(BM_TransvectChain);

static void BM_PairingEvaluator(benchmark::State& state) {
  const Covariant& d = catalog_4("D_4000");
  const PairingEvaluator ev(d, d);
  Rng rng(1);
  const State s = random_state(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ev(s));
}
BENCHMARK(BM_PairingEvaluator);

static void BM_LutCharacter(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::hilbert_lut_coeffs(k, 10));
}
BENCHMARK(BM_LutCharacter)->DenseRange(2, 4);

static void BM_LutConstantTerm(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert::lut_coeffs_ct(k, 10));
}
BENCHMARK(BM_LutConstantTerm)->DenseRange(2, 3);

static void BM_Classify(benchmark::State& state) {
  Rng rng(2);
  const State s = random_state(3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(classify3(s));
}
BENCHMARK(BM_Classify);
BENCHMARK_MAIN();
