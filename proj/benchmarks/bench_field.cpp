#include <benchmark/benchmark.h>

#include "liftedrs/field.hpp"
#include "liftedrs/rng.hpp"

using namespace liftedrs;

static void BM_FieldMul(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  SplitMix64 rng(1);
  const auto a = static_cast<std::uint16_t>(1 + rng.next_below(f.q() - 1));
  std::uint16_t x = 1;
  for (auto _ : state) {
    x = f.mul(x, a);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

static void BM_FieldInv(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  std::uint16_t x = 1;
  for (auto _ : state) {
    x = f.inv(static_cast<std::uint16_t>((x % (f.q() - 1)) + 1));
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldInv)->Arg(4)->Arg(8);

static void BM_Interpolate(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  SplitMix64 rng(2);
  std::vector<std::pair<FieldElem, FieldElem>> pts;
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    pts.emplace_back(f.elem(x), f.elem(static_cast<std::uint32_t>(rng.next_below(f.q()))));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(interpolate(pts));
  }
}
BENCHMARK(BM_Interpolate)->Arg(3)->Arg(4);
