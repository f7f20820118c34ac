#ifndef LIFTEDRS_MONOMIAL_HPP
#define LIFTEDRS_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace liftedrs {

// Exponent tuple d in Z_q^m of an m-variate monomial X^d.
using ExponentVec = std::vector<std::uint32_t>;

// Sum of components deg(d) and number of nonzero components |d|.
std::uint64_t degree(const ExponentVec& d);
std::size_t support_size(const ExponentVec& d);

// Binary containment order: a <=_2 b iff every set bit of a is set in b.
bool le2(std::uint64_t a, std::uint64_t b);
bool le2(const ExponentVec& a, const ExponentVec& b);

// Reduction of an exponent into Z_q respecting T^q = T: 0 -> 0, otherwise
// into [1, q-1] modulo q-1. Requires q to be a power of two.
std::uint32_t mods_q(std::uint64_t a, std::uint32_t q);

// binom(d, i) mod 2; equals le2(i, d) by Lucas's theorem.
int lucas_subset(std::uint64_t d, std::uint64_t i);

struct BadnessVerdict {
  bool is_bad = false;
  // A concrete submask i <=_2 d meeting the degree condition when bad.
  std::optional<ExponentVec> witness;
};

// d*-bad: some i <=_2 d has deg(i) mod* q in {deg_bound, ..., q-1}.
// Two engines with identical contracts: the oracle enumerates all submask
// tuples, the fast engine runs a digit DP over bit positions. The oracle is
// kept permanently as the reference the fast path is tested against.
BadnessVerdict dstar_bad_oracle(const ExponentVec& d, unsigned ell, std::uint32_t deg_bound);
BadnessVerdict dstar_bad_fast(const ExponentVec& d, unsigned ell, std::uint32_t deg_bound);
BadnessVerdict is_dstar_bad(const ExponentVec& d, unsigned ell, std::uint32_t deg_bound);

// (q-r)-bad: some i <=_2 d has deg(i) = q-r (mod q). Same dual-engine setup.
BadnessVerdict qr_bad_oracle(const ExponentVec& d, unsigned ell, std::uint32_t r);
BadnessVerdict qr_bad_fast(const ExponentVec& d, unsigned ell, std::uint32_t r);
BadnessVerdict is_qr_bad(const ExponentVec& d, unsigned ell, std::uint32_t r);

// s_j(ell) = #{d in Z_q^m : some i <=_2 d has deg(i) = (q-r) + j*q},
// j = 0..m-1. Counted by direct enumeration over all q^m tuples.
struct CountVector {
  unsigned ell = 0;
  unsigned m = 0;
  std::uint32_t r = 0;
  std::vector<std::uint64_t> s;
};

CountVector enumerate_sj(unsigned ell, unsigned m, std::uint32_t r);

// Members of each S_j(ell) in lexicographic order; bucket j holds S_j.
std::vector<std::vector<ExponentVec>> collect_sj(unsigned ell, unsigned m, std::uint32_t r);

// Per-component removal/extraction of bit ell-1; a vector is uniquely
// reconstructible from the (lead, drop) pair.
ExponentVec f_drop(const ExponentVec& a, unsigned ell);
ExponentVec f_lead(const ExponentVec& a, unsigned ell);

// Returns a <=_2 i with deg(a) = deg(i) - (j-l)*2^ell by zeroing set bits
// from the most significant position downward. Requires deg(i) >= j*2^ell
// and 0 <= l < j.
ExponentVec reduce_degree(const ExponentVec& i, unsigned j, unsigned l, unsigned ell);

}  // namespace liftedrs

#endif  // LIFTEDRS_MONOMIAL_HPP
