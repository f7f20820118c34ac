#include <benchmark/benchmark.h>

#include "liftedrs/monomial.hpp"

using namespace liftedrs;

static void BM_DstarFast(benchmark::State& state) {
  const unsigned ell = static_cast<unsigned>(state.range(0));
  const std::uint32_t q = 1u << ell;
  const ExponentVec d = {q - 2, q - 1, q - 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dstar_bad_fast(d, ell, q - 2));
  }
}
BENCHMARK(BM_DstarFast)->Arg(3)->Arg(4)->Arg(8);

static void BM_DstarOracle(benchmark::State& state) {
  const unsigned ell = static_cast<unsigned>(state.range(0));
  const std::uint32_t q = 1u << ell;
  const ExponentVec d = {q - 2, q - 1, q - 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dstar_bad_oracle(d, ell, q - 2));
  }
}
BENCHMARK(BM_DstarOracle)->Arg(3)->Arg(4);

static void BM_EnumerateSj(benchmark::State& state) {
  const unsigned ell = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_sj(ell, 2, 1));
  }
}
BENCHMARK(BM_EnumerateSj)->Arg(3)->Arg(4)->Arg(5);
