#include <benchmark/benchmark.h>

#include <random>

#include "polyspace/catalog.hpp"
#include "polyspace/cohomology.hpp"
#include "polyspace/gf2.hpp"
#include "polyspace/realize.hpp"

namespace {

using namespace polyspace;

void BM_Gf2Rank(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  Gf2Matrix m(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (rng() & 1U) m.set(r, c);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(m));
}
BENCHMARK(BM_Gf2Rank)->Arg(64)->Arg(256)->Arg(1024);

void BM_RealizeCode(benchmark::State& state) {
  const auto code = parse_code("9:[6321|542|61]");
  for (auto _ : state) benchmark::DoNotOptimize(is_realizable(code));
}
BENCHMARK(BM_RealizeCode);

void BM_TopPowerVanishing(benchmark::State& state) {
  const auto code = parse_code("9:[54321|6432|6521]");
  for (auto _ : state) benchmark::DoNotOptimize(r_power_is_zero(code, 6));
}
BENCHMARK(BM_TopPowerVanishing);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(n));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
