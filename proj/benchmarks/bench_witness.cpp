#include <benchmark/benchmark.h>

#include "sumprod/constructions.hpp"
#include "sumprod/harness.hpp"

namespace {

using namespace sumprod;

void BM_WitnessCase3(benchmark::State& state, SumsetBackend backend) {
  const auto a = ZpSet::interval(make_modulus(10007), 1, 200);
  WitnessOptions opts;
  opts.backend = backend;
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_construct(a, 2, 0.25, opts));
}
BENCHMARK_CAPTURE(BM_WitnessCase3, dense, SumsetBackend::DenseShift)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_WitnessCase3, ntt, SumsetBackend::NttConvolution)->Unit(benchmark::kMillisecond);

void BM_WitnessCase4(benchmark::State& state) {
  const auto a = ZpSet::interval(make_modulus(10007), 1, 100);
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_construct(a, 3, 0.5));
}
BENCHMARK(BM_WitnessCase4)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveL7(benchmark::State& state) {
  const auto p = make_modulus(5);
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_exhaustive(harness::LemmaId::L7, p));
}
BENCHMARK(BM_ExhaustiveL7)->Unit(benchmark::kMillisecond);

void BM_RandomL10(benchmark::State& state) {
  const auto p = make_modulus(10007);
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_random(harness::LemmaId::L10, p, 100, 1));
}
BENCHMARK(BM_RandomL10)->Unit(benchmark::kMillisecond);

}  // namespace
