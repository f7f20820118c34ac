#ifndef LIFTEDRS_BATCH_HPP
#define LIFTEDRS_BATCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liftedrs/lifted_code.hpp"

namespace liftedrs {

// Largest supported batch size of the [m, q-r, q] code: r * q^(m-2).
// Needs m >= 2 and r < q.
std::uint64_t capacity(unsigned m, std::uint32_t q, std::uint32_t r);

// Requested symbols; repetition is allowed.
struct BatchRequest {
  std::vector<Point> targets;
};

// One recovery: read the q-r line points at the given parameters,
// interpolate, evaluate at the target's parameter. The target itself is
// never read.
struct RecoveringSet {
  Point target;
  Line line;
  std::vector<std::uint16_t> read_params;  // ascending t values, size q-r
};

struct BatchPlan {
  std::vector<RecoveringSet> sets;
  std::uint32_t r = 0;
  // Largest |line ∩ previously consumed points \ {target}| over the
  // accepted lines; the greedy argument keeps this below r.
  std::uint32_t max_overlap = 0;
};

// Greedy planner from the inductive recovery argument: targets are
// processed in request order; for each one the canonical lines through it
// are scanned in lexicographic direction order and the first line that
// still has q-r unused non-target points is taken. Whole lines count as
// consumed for later conflict tests, read points stay minimal.
BatchPlan plan_batch(const LiftedCode& code, std::uint32_t r, const BatchRequest& request);

// Recovered value per recovering set; equals w at each target for valid
// codewords of the matching code.
std::vector<std::uint16_t> execute_batch(const LiftedCode& code, const Codeword& w,
                                         const BatchPlan& plan);

Point read_point(const Field& field, const RecoveringSet& set, std::uint16_t t);

// Bit-level accounting of the code with symbols split into ell bits. A bit
// is recovered by recovering its whole symbol through the symbol's
// recovering set and extracting the bit.
struct BinaryExpansion {
  std::uint64_t length_bits = 0;     // ell * q^m
  std::uint64_t dimension_bits = 0;  // ell * dimension
  std::uint64_t redundancy_bits = 0;
  unsigned bits_per_symbol = 0;
};

BinaryExpansion binary_expand(const LiftedCode& code);

// One line per recovering set:
// "target=<coords> dir=<coords> offset=<coords> reads=<t-params csv>".
std::string plan_to_string(const BatchPlan& plan);

}  // namespace liftedrs

#endif  // LIFTEDRS_BATCH_HPP
