#ifndef LIFTEDRS_RNG_HPP
#define LIFTEDRS_RNG_HPP

#include <cstdint>

namespace liftedrs {

// splitmix64: the 64-bit mixer with increment 0x9E3779B97F4A7C15. Demos and
// tests use it so runs replay bit-for-bit from a seed on any platform;
// bounded draws are next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); the modulo bias is irrelevant at the small
  // ranges used here and keeps the sequence specification one line long.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace liftedrs

#endif  // LIFTEDRS_RNG_HPP
