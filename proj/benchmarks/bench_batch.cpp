#include <benchmark/benchmark.h>

#include "liftedrs/batch.hpp"
#include "liftedrs/rng.hpp"

using namespace liftedrs;

static void BM_PlanBatch(benchmark::State& state) {
  const unsigned m = 3;
  const std::uint32_t q = 8;
  const std::uint32_t r = static_cast<std::uint32_t>(state.range(0));
  const LiftedCode code(m, q, q - r);
  SplitMix64 rng(4);
  BatchRequest request;
  for (std::uint64_t t = 0; t < capacity(m, q, r); ++t) {
    request.targets.push_back(index_point(rng.next_below(code.length()), m, q));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan_batch(code, r, request));
  }
}
BENCHMARK(BM_PlanBatch)->Arg(1)->Arg(2);

static void BM_ExecuteBatch(benchmark::State& state) {
  const unsigned m = 3;
  const std::uint32_t q = 8;
  const std::uint32_t r = 2;
  const LiftedCode code(m, q, q - r);
  SplitMix64 rng(5);
  std::vector<std::uint16_t> message(code.dimension());
  for (auto& c : message) c = static_cast<std::uint16_t>(rng.next_below(q));
  const Codeword w = encode(code, message);
  BatchRequest request;
  for (std::uint64_t t = 0; t < capacity(m, q, r); ++t) {
    request.targets.push_back(index_point(rng.next_below(code.length()), m, q));
  }
  const BatchPlan plan = plan_batch(code, r, request);
  for (auto _ : state) {
    benchmark::DoNotOptimize(execute_batch(code, w, plan));
  }
}
BENCHMARK(BM_ExecuteBatch);
