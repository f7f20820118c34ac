#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <set>
#include <vector>

#include "liftedrs/batch.hpp"
#include "liftedrs/rng.hpp"

using namespace liftedrs;

TEST_CASE("capacity") {
  CHECK(capacity(2, 16, 2) == 2);
  CHECK(capacity(3, 8, 2) == 16);
  CHECK(capacity(4, 4, 1) == 16);
  CHECK_THROWS_AS(capacity(1, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(capacity(2, 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(capacity(2, 8, 0), std::invalid_argument);
}

TEST_CASE("single-target plan uses one line around the target") {
  const LiftedCode code(2, 4, 3);  // r = 1
  BatchRequest request;
  request.targets.push_back({0, 0});
  const BatchPlan plan = plan_batch(code, 1, request);
  REQUIRE(plan.sets.size() == 1);
  const RecoveringSet& set = plan.sets[0];
  CHECK(set.read_params.size() == 3);
  CHECK(plan.max_overlap == 0);
  // First canonical direction through (0,0) is (0,1) with zero offset, so
  // the reads are the other three parameters on that line.
  CHECK(plan_to_string(plan) == "target=0,0 dir=0,1 offset=0,0 reads=1,2,3\n");
}

TEST_CASE("repeated targets get disjoint lines") {
  const LiftedCode code(2, 16, 14);  // r = 2, capacity 2
  BatchRequest request;
  request.targets = {{3, 7}, {3, 7}};
  const BatchPlan plan = plan_batch(code, 2, request);
  REQUIRE(plan.sets.size() == 2);
  std::set<std::size_t> reads;
  for (const RecoveringSet& set : plan.sets) {
    CHECK(set.read_params.size() == 14);
    for (std::uint16_t t : set.read_params) {
      const std::size_t pi = point_index(read_point(code.field(), set, t), 16);
      CHECK(pi != point_index(set.target, 16));
      CHECK(reads.insert(pi).second);
    }
  }
  CHECK(plan.sets[0].line.direction != plan.sets[1].line.direction);
}

TEST_CASE("planner guards") {
  const LiftedCode code(2, 16, 14);
  BatchRequest request;
  request.targets = {{0, 0}, {0, 1}, {0, 2}};
  CHECK_THROWS_AS(plan_batch(code, 2, request), std::invalid_argument);  // k > capacity
  const LiftedCode wrong(2, 16, 13);
  request.targets = {{0, 0}};
  CHECK_THROWS_AS(plan_batch(wrong, 2, request), std::invalid_argument);  // d != q - r
}

TEST_CASE("execution recovers exactly") {
  SUBCASE("zero codeword") {
    const LiftedCode code(2, 8, 6);  // r = 2
    BatchRequest request;
    request.targets = {{1, 2}, {1, 2}};
    const BatchPlan plan = plan_batch(code, 2, request);
    const std::vector<std::uint16_t> rec = execute_batch(code, Codeword(64, 0), plan);
    for (std::uint16_t v : rec) CHECK(v == 0);
  }

  SUBCASE("basis monomial codeword of the r = 2 code over GF(16)") {
    const LiftedCode code(2, 16, 14);
    std::vector<std::uint16_t> coeffs(code.dimension(), 0);
    coeffs[code.dimension() - 1] = 1;
    const Codeword w = encode(code, coeffs);
    BatchRequest request;
    request.targets = {{5, 9}, {5, 9}};
    const BatchPlan plan = plan_batch(code, 2, request);
    const auto rec = execute_batch(code, w, plan);
    for (std::size_t t = 0; t < rec.size(); ++t) {
      CHECK(rec[t] == w[point_index(plan.sets[t].target, 16)]);
    }
  }

  SUBCASE("randomized round trips") {
    for (std::uint32_t r : {1u, 2u}) {
      const LiftedCode code(2, 8, 8 - r);
      const std::uint64_t k = capacity(2, 8, r);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SplitMix64 rng(seed);
        std::vector<std::uint16_t> message(code.dimension());
        for (auto& c : message) c = static_cast<std::uint16_t>(rng.next_below(8));
        const Codeword w = encode(code, message);
        BatchRequest request;
        if (seed % 5 == 0) {
          request.targets.assign(k, index_point(rng.next_below(64), 2, 8));
        } else {
          for (std::uint64_t t = 0; t < k; ++t) {
            request.targets.push_back(index_point(rng.next_below(64), 2, 8));
          }
        }
        const BatchPlan plan = plan_batch(code, r, request);
        CHECK(plan.max_overlap < r);
        std::set<std::size_t> seen;
        for (const RecoveringSet& set : plan.sets) {
          for (std::uint16_t t : set.read_params) {
            CHECK(seen.insert(point_index(read_point(code.field(), set, t), 8)).second);
          }
        }
        const auto rec = execute_batch(code, w, plan);
        for (std::size_t t = 0; t < rec.size(); ++t) {
          CHECK(rec[t] == w[point_index(plan.sets[t].target, 8)]);
        }
      }
    }
  }

  SUBCASE("mismatched word length is rejected") {
    const LiftedCode code(2, 8, 6);
    BatchRequest request;
    request.targets = {{0, 0}};
    const BatchPlan plan = plan_batch(code, 2, request);
    CHECK_THROWS_AS(execute_batch(code, Codeword(63, 0), plan), std::invalid_argument);
  }
}

TEST_CASE("binary expansion accounting") {
  const LiftedCode code(2, 4, 3);
  const BinaryExpansion bits = binary_expand(code);
  CHECK(bits.bits_per_symbol == 2);
  CHECK(bits.length_bits == 32);
  CHECK(bits.dimension_bits == 2 * code.dimension());
  CHECK(bits.redundancy_bits == 2 * (16 - code.dimension()));

  const LiftedCode binary(2, 2, 1);  // ell = 1: one bit per symbol
  const BinaryExpansion flat = binary_expand(binary);
  CHECK(flat.length_bits == binary.length());
  CHECK(flat.redundancy_bits == flat.length_bits - flat.dimension_bits);
}
