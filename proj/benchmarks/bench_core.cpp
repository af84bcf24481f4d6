#include <benchmark/benchmark.h>

#include "mcs/gm_action.hpp"
#include "mcs/toric.hpp"

using namespace mcs;

static void BM_RationalExpandColinear(benchmark::State& state) {
  auto ring = KRingSpec::standard();
  auto mc = assemble_mc(colinear_blowup_data(3, ring), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(rational_expand(mc, state.range(0)));
}
BENCHMARK(BM_RationalExpandColinear)->Arg(2)->Arg(4)->Arg(6);

static void BM_TruncatedMul(benchmark::State& state) {
  auto ring = KRingSpec::standard();
  auto f = rational_expand(curve_zeta(0, ring), state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(truncated_mul(f, f));
}
BENCHMARK(BM_TruncatedMul)->Arg(16)->Arg(32)->Arg(64);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  std::int64_t x = 7;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x = (x * 1103515245 + 12345) % 2147483648;
      m(i, j) = x % 19 - 9;
    }
  for (auto _ : state)
    benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_ChowPresentation(benchmark::State& state) {
  auto fan = projective_space_fan(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(chow_presentation(fan, 1));
}
BENCHMARK(BM_ChowPresentation)->Arg(2)->Arg(3)->Arg(4);

static void BM_FanValidateBlowup(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(three_point_blowup_fan());
}
BENCHMARK(BM_FanValidateBlowup);
BENCHMARK_MAIN();
