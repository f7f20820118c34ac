#include <benchmark/benchmark.h>

#include "liftedrs/lifted_code.hpp"
#include "liftedrs/rng.hpp"

using namespace liftedrs;

static void BM_BuildCode(benchmark::State& state) {
  const std::uint32_t q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(LiftedCode(2, q, q - 2));
  }
}
BENCHMARK(BM_BuildCode)->Arg(8)->Arg(16)->Arg(32);

static void BM_Encode(benchmark::State& state) {
  const std::uint32_t q = static_cast<std::uint32_t>(state.range(0));
  const LiftedCode code(2, q, q - 2);
  SplitMix64 rng(3);
  std::vector<std::uint16_t> coeffs(code.dimension());
  for (auto& c : coeffs) c = static_cast<std::uint16_t>(rng.next_below(q));
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(code, coeffs));
  }
}
BENCHMARK(BM_Encode)->Arg(8)->Arg(16);

static void BM_BruteforceLineTest(benchmark::State& state) {
  const std::uint32_t q = static_cast<std::uint32_t>(state.range(0));
  const LiftedCode code(2, q, q - 2);
  const Codeword w = encode(code, std::vector<std::uint16_t>(code.dimension(), 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_codeword_bruteforce(w, 2, q, q - 2));
  }
}
BENCHMARK(BM_BruteforceLineTest)->Arg(4)->Arg(8);
