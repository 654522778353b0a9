#include <benchmark/benchmark.h>

#include <random>

#include "sumprod/ntt.hpp"
#include "sumprod/set_ops.hpp"

namespace {

using namespace sumprod;

ZpSet random_set(PrimeModulus m, std::uint32_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> v(size);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % m.value());
  return ZpSet(m, v);
}

// Args: p, |X| = |Y|.
void BM_Sumset(benchmark::State& state, SumsetBackend backend) {
  const auto m = make_modulus(static_cast<std::uint64_t>(state.range(0)));
  const auto size = static_cast<std::uint32_t>(state.range(1));
  const auto x = random_set(m, size, 1), y = random_set(m, size, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(x, y, backend));
}
BENCHMARK_CAPTURE(BM_Sumset, dense, SumsetBackend::DenseShift)
    ->ArgsProduct({{1009, 65537, 1000003}, {16, 256, 4096}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Sumset, ntt, SumsetBackend::NttConvolution)
    ->ArgsProduct({{1009, 65537, 1000003}, {16, 256, 4096}})
    ->Unit(benchmark::kMicrosecond);

void BM_Productset(benchmark::State& state) {
  const auto m = make_modulus(static_cast<std::uint64_t>(state.range(0)));
  const auto size = static_cast<std::uint32_t>(state.range(1));
  const auto x = random_set(m, size, 3), y = random_set(m, size, 4);
  for (auto _ : state) benchmark::DoNotOptimize(productset(x, y));
}
BENCHMARK(BM_Productset)->ArgsProduct({{1009, 65537}, {16, 256, 4096}})->Unit(benchmark::kMicrosecond);

void BM_IteratedSum(benchmark::State& state) {
  const auto m = make_modulus(65537);
  const auto x = random_set(m, 8, 5);
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterated_sum(k, x));
}
BENCHMARK(BM_IteratedSum)->RangeMultiplier(8)->Range(8, 4096)->Unit(benchmark::kMicrosecond);

void BM_QSet(benchmark::State& state) {
  const auto m = make_modulus(10007);
  const auto size = static_cast<std::uint32_t>(state.range(0));
  const auto x = random_set(m, size, 6), y = random_set(m, size, 7);
  for (auto _ : state) benchmark::DoNotOptimize(q_set(x, y));
}
BENCHMARK(BM_QSet)->Arg(8)->Arg(32)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_ExpSum(benchmark::State& state) {
  const auto m = make_modulus(1009);
  const auto size = static_cast<std::uint32_t>(state.range(0));
  const auto x = random_set(m, size, 8), y = random_set(m, size, 9);
  for (auto _ : state) benchmark::DoNotOptimize(exp_sum_magnitude(x, y, ZpElement(m, 1)));
}
BENCHMARK(BM_ExpSum)->Arg(32)->Arg(256)->Arg(1009)->Unit(benchmark::kMicrosecond);

void BM_Transform(benchmark::State& state) {
  std::vector<std::uint64_t> v(std::size_t{1} << state.range(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  for (auto _ : state) {
    ntt::transform(v, false);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_Transform)->DenseRange(10, 18, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
