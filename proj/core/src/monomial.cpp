#include "liftedrs/monomial.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace liftedrs {

namespace {

void check_components(const ExponentVec& d, unsigned ell) {
  if (ell < 1 || ell > 16) throw std::invalid_argument("ell must be in 1..16");
  const std::uint32_t q = 1u << ell;
  for (std::uint32_t c : d) {
    if (c >= q) throw std::invalid_argument("exponent component out of Z_q");
  }
}

// Submasks of every value in [0, q), ascending. comp_submasks[v] lists all
// x with x <=_2 v.
std::vector<std::vector<std::uint16_t>> submask_table(std::uint32_t q) {
  std::vector<std::vector<std::uint16_t>> table(q);
  for (std::uint32_t v = 0; v < q; ++v) {
    std::uint32_t s = 0;
    table[v].push_back(0);
    while (s != v) {
      s = (s - v) & v;  // next submask in increasing order
      table[v].push_back(static_cast<std::uint16_t>(s));
    }
  }
  return table;
}

// Walks every tuple i with i <=_2 d, calling visit(i, deg(i)); stops early
// when visit returns true.
template <typename Visit>
void for_each_submask_tuple(const ExponentVec& d, Visit&& visit) {
  const std::size_t m = d.size();
  std::vector<std::vector<std::uint16_t>> choices(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::uint32_t v = d[k];
    std::uint32_t s = 0;
    choices[k].push_back(0);
    while (s != v) {
      s = (s - v) & v;
      choices[k].push_back(static_cast<std::uint16_t>(s));
    }
  }
  std::vector<std::size_t> pos(m, 0);
  ExponentVec i(m, 0);
  std::uint64_t deg_i = 0;
  for (;;) {
    if (visit(i, deg_i)) return;
    std::size_t k = 0;
    for (; k < m; ++k) {
      deg_i -= i[k];
      if (++pos[k] < choices[k].size()) {
        i[k] = choices[k][pos[k]];
        deg_i += i[k];
        break;
      }
      pos[k] = 0;
      i[k] = 0;
    }
    if (k == m) return;
  }
}

struct DigitCounts {
  // ones[xi] = number of components of d with bit xi set.
  std::vector<unsigned> ones;
};

DigitCounts digit_counts(const ExponentVec& d, unsigned ell) {
  DigitCounts dc;
  dc.ones.assign(ell, 0);
  for (std::uint32_t c : d) {
    for (unsigned xi = 0; xi < ell; ++xi) {
      if (c & (1u << xi)) ++dc.ones[xi];
    }
  }
  return dc;
}

// Turns per-bit-position counts back into a concrete submask of d: bit xi
// is set in the first take[xi] components whose d-bit xi is set.
ExponentVec assemble_witness(const ExponentVec& d, const std::vector<unsigned>& take) {
  ExponentVec i(d.size(), 0);
  for (unsigned xi = 0; xi < take.size(); ++xi) {
    unsigned remaining = take[xi];
    for (std::size_t k = 0; k < d.size() && remaining > 0; ++k) {
      if (d[k] & (1u << xi)) {
        i[k] |= 1u << xi;
        --remaining;
      }
    }
  }
  return i;
}

}  // namespace

std::uint64_t degree(const ExponentVec& d) {
  std::uint64_t sum = 0;
  for (std::uint32_t c : d) sum += c;
  return sum;
}

std::size_t support_size(const ExponentVec& d) {
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [](std::uint32_t c) { return c != 0; }));
}

bool le2(std::uint64_t a, std::uint64_t b) { return (a & b) == a; }

bool le2(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("exponent vectors of different lengths");
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!le2(a[k], b[k])) return false;
  }
  return true;
}

std::uint32_t mods_q(std::uint64_t a, std::uint32_t q) {
  if (q < 2 || (q & (q - 1)) != 0) {
    throw std::invalid_argument("mods_q needs q = 2^ell");
  }
  if (a == 0) return 0;
  const std::uint32_t b = static_cast<std::uint32_t>(a % (q - 1));
  return b == 0 ? q - 1 : b;
}

int lucas_subset(std::uint64_t d, std::uint64_t i) {
  // Lucas over GF(2): binom(d, i) is odd iff every binary digit of i is at
  // most the matching digit of d.
  while (d != 0 || i != 0) {
    if ((i & 1) > (d & 1)) return 0;
    d >>= 1;
    i >>= 1;
  }
  return 1;
}

BadnessVerdict dstar_bad_oracle(const ExponentVec& d, unsigned ell, std::uint32_t deg_bound) {
  check_components(d, ell);
  const std::uint32_t q = 1u << ell;
  if (deg_bound < 1 || deg_bound >= q) {
    throw std::invalid_argument("degree bound must be in 1..q-1");
  }
  BadnessVerdict verdict;
  for_each_submask_tuple(d, [&](const ExponentVec& i, std::uint64_t deg_i) {
    if (deg_i == 0) return false;
    const std::uint32_t reduced = mods_q(deg_i, q);
    if (reduced >= deg_bound) {
      verdict.is_bad = true;
      verdict.witness = i;
      return true;
    }
    return false;
  });
  return verdict;
}

BadnessVerdict dstar_bad_fast(const ExponentVec& d, unsigned ell, std::uint32_t deg_bound) {
  check_components(d, ell);
  const std::uint32_t q = 1u << ell;
  if (deg_bound < 1 || deg_bound >= q) {
    throw std::invalid_argument("degree bound must be in 1..q-1");
  }
  const std::uint32_t mod = q - 1;
  const DigitCounts dc = digit_counts(d, ell);

  // reach[xi][rho][nz]: after choosing bits below position xi, the partial
  // degree has residue rho mod (q-1); nz records whether anything was taken.
  std::vector<std::vector<std::array<bool, 2>>> reach(
      ell + 1, std::vector<std::array<bool, 2>>(mod, {false, false}));
  reach[0][0][0] = true;
  for (unsigned xi = 0; xi < ell; ++xi) {
    const std::uint32_t w = (1u << xi) % mod;
    for (std::uint32_t rho = 0; rho < mod; ++rho) {
      for (int nz = 0; nz < 2; ++nz) {
        if (!reach[xi][rho][nz]) continue;
        for (unsigned s = 0; s <= dc.ones[xi]; ++s) {
          const std::uint32_t rho2 =
              (rho + static_cast<std::uint32_t>(s) * w % mod) % mod;
          reach[xi + 1][rho2][nz || s > 0] = true;
        }
      }
    }
  }

  // mods_q of a nonzero degree with residue rho is rho, except rho = 0
  // which stands for q-1. q-1 >= deg_bound always holds here.
  std::uint32_t final_rho = mod;  // sentinel
  for (std::uint32_t rho = 0; rho < mod && final_rho == mod; ++rho) {
    if (reach[ell][rho][1] && (rho == 0 || rho >= deg_bound)) final_rho = rho;
  }
  if (final_rho == mod) return {};

  // Backtrack one accepting path into per-position take counts.
  std::vector<unsigned> take(ell, 0);
  std::uint32_t rho = final_rho;
  int nz = 1;
  for (unsigned xi = ell; xi-- > 0;) {
    const std::uint32_t w = (1u << xi) % mod;
    bool found = false;
    for (unsigned s = 0; s <= dc.ones[xi] && !found; ++s) {
      const std::uint32_t contrib = static_cast<std::uint32_t>(s) * w % mod;
      const std::uint32_t prev = (rho + mod - contrib) % mod;
      if (s == 0) {
        if (reach[xi][prev][nz]) {
          take[xi] = 0;
          rho = prev;
          found = true;
        }
      } else if (nz == 1) {
        for (int pnz = 0; pnz < 2 && !found; ++pnz) {
          if (reach[xi][prev][pnz]) {
            take[xi] = s;
            rho = prev;
            nz = pnz;
            found = true;
          }
        }
      }
    }
    if (!found) throw std::logic_error("badness DP backtrack lost its path");
  }
  return {true, assemble_witness(d, take)};
}

BadnessVerdict is_dstar_bad(const ExponentVec& d, unsigned ell, std::uint32_t deg_bound) {
  return dstar_bad_fast(d, ell, deg_bound);
}

BadnessVerdict qr_bad_oracle(const ExponentVec& d, unsigned ell, std::uint32_t r) {
  check_components(d, ell);
  const std::uint32_t q = 1u << ell;
  if (r < 1 || r > q) throw std::invalid_argument("r must be in 1..q");
  const std::uint32_t target = q - r;
  BadnessVerdict verdict;
  for_each_submask_tuple(d, [&](const ExponentVec& i, std::uint64_t deg_i) {
    if (deg_i % q == target) {
      verdict.is_bad = true;
      verdict.witness = i;
      return true;
    }
    return false;
  });
  return verdict;
}

BadnessVerdict qr_bad_fast(const ExponentVec& d, unsigned ell, std::uint32_t r) {
  check_components(d, ell);
  const std::uint32_t q = 1u << ell;
  if (r < 1 || r > q) throw std::invalid_argument("r must be in 1..q");
  const std::uint32_t target = q - r;
  const unsigned m = static_cast<unsigned>(d.size());
  const DigitCounts dc = digit_counts(d, ell);

  // reach[xi][c]: the low xi bits of some achievable deg(i) agree with the
  // target and c carries into bit xi. The carry never exceeds m.
  std::vector<std::vector<bool>> reach(ell + 1, std::vector<bool>(m + 1, false));
  reach[0][0] = true;
  for (unsigned xi = 0; xi < ell; ++xi) {
    const unsigned bit = (target >> xi) & 1;
    for (unsigned c = 0; c <= m; ++c) {
      if (!reach[xi][c]) continue;
      for (unsigned s = 0; s <= dc.ones[xi]; ++s) {
        const unsigned total = c + s;
        if ((total & 1) == bit) reach[xi + 1][total >> 1] = true;
      }
    }
  }

  unsigned final_c = m + 1;
  for (unsigned c = 0; c <= m && final_c > m; ++c) {
    if (reach[ell][c]) final_c = c;  // leftover carry adds multiples of q
  }
  if (final_c > m) return {};

  std::vector<unsigned> take(ell, 0);
  unsigned carry = final_c;
  for (unsigned xi = ell; xi-- > 0;) {
    const unsigned bit = (target >> xi) & 1;
    bool found = false;
    for (unsigned s = 0; s <= dc.ones[xi] && !found; ++s) {
      const unsigned total = 2 * carry + bit;
      if (total < s) break;
      const unsigned prev = total - s;
      if (prev <= m && reach[xi][prev]) {
        take[xi] = s;
        carry = prev;
        found = true;
      }
    }
    if (!found) throw std::logic_error("badness DP backtrack lost its path");
  }
  return {true, assemble_witness(d, take)};
}

BadnessVerdict is_qr_bad(const ExponentVec& d, unsigned ell, std::uint32_t r) {
  return qr_bad_fast(d, ell, r);
}

namespace {

constexpr std::uint64_t kEnumerationCap = 1ull << 24;

void check_enumeration_scale(unsigned ell, unsigned m, std::uint32_t r) {
  if (ell < 1 || ell > 16) throw std::invalid_argument("ell must be in 1..16");
  if (m < 1) throw std::invalid_argument("m must be positive");
  const std::uint32_t q = 1u << ell;
  if (r < 1 || r > std::min<std::uint32_t>(m, q)) {
    throw std::invalid_argument("r must satisfy 1 <= r <= min(m, q)");
  }
  const std::uint64_t bits = static_cast<std::uint64_t>(m) * ell;
  if (bits > 24 || (1ull << bits) > kEnumerationCap) {
    throw std::invalid_argument("q^m exceeds the enumeration bound 2^24");
  }
}

// Bitset of achievable submask degrees of d: bit t set iff some i <=_2 d
// has deg(i) = t.
class DegreeSet {
 public:
  explicit DegreeSet(std::size_t max_degree) : words_((max_degree >> 6) + 1, 0) {
    words_[0] = 1;  // empty submask
  }

  void shift_or_into(const std::vector<std::uint16_t>& shifts, DegreeSet& out) const {
    std::fill(out.words_.begin(), out.words_.end(), 0);
    for (std::uint16_t sh : shifts) {
      const std::size_t word = sh >> 6;
      const unsigned bit = sh & 63;
      for (std::size_t w = 0; w + word < out.words_.size(); ++w) {
        std::uint64_t v = words_[w] << bit;
        if (bit != 0 && w > 0) v |= words_[w - 1] >> (64 - bit);
        out.words_[w + word] |= v;
      }
    }
  }

  bool test(std::uint64_t t) const {
    const std::size_t word = t >> 6;
    return word < words_.size() && ((words_[word] >> (t & 63)) & 1) != 0;
  }

  void swap(DegreeSet& other) { words_.swap(other.words_); }

 private:
  std::vector<std::uint64_t> words_;
};

template <typename PerMember>
void enumerate_impl(unsigned ell, unsigned m, std::uint32_t r, PerMember&& on_member) {
  check_enumeration_scale(ell, m, r);
  const std::uint32_t q = 1u << ell;
  const auto submasks = submask_table(q);
  const std::size_t max_degree = static_cast<std::size_t>(m) * (q - 1);

  ExponentVec d(m, 0);
  DegreeSet acc(max_degree), next(max_degree);
  for (;;) {
    // Achievable degrees: fold the component submask value sets together.
    DegreeSet degs(max_degree);
    for (unsigned k = 0; k < m; ++k) {
      degs.shift_or_into(submasks[d[k]], next);
      degs.swap(next);
    }
    for (unsigned j = 0; j < m; ++j) {
      const std::uint64_t t = static_cast<std::uint64_t>(q - r) + static_cast<std::uint64_t>(j) * q;
      if (t <= max_degree && degs.test(t)) on_member(d, j);
    }
    // Advance d in lexicographic order (last component fastest).
    unsigned k = m;
    while (k-- > 0) {
      if (++d[k] < q) break;
      d[k] = 0;
      if (k == 0) return;
    }
  }
}

}  // namespace

CountVector enumerate_sj(unsigned ell, unsigned m, std::uint32_t r) {
  CountVector cv;
  cv.ell = ell;
  cv.m = m;
  cv.r = r;
  cv.s.assign(m, 0);
  enumerate_impl(ell, m, r, [&](const ExponentVec&, unsigned j) { ++cv.s[j]; });
  return cv;
}

std::vector<std::vector<ExponentVec>> collect_sj(unsigned ell, unsigned m, std::uint32_t r) {
  std::vector<std::vector<ExponentVec>> buckets(m);
  enumerate_impl(ell, m, r,
                 [&](const ExponentVec& d, unsigned j) { buckets[j].push_back(d); });
  return buckets;
}

ExponentVec f_drop(const ExponentVec& a, unsigned ell) {
  check_components(a, ell);
  const std::uint32_t lead = 1u << (ell - 1);
  ExponentVec out(a);
  for (std::uint32_t& c : out) c &= ~lead;
  return out;
}

ExponentVec f_lead(const ExponentVec& a, unsigned ell) {
  check_components(a, ell);
  const std::uint32_t lead = 1u << (ell - 1);
  ExponentVec out(a.size(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (a[k] & lead) ? 1 : 0;
  return out;
}

ExponentVec reduce_degree(const ExponentVec& i, unsigned j, unsigned l, unsigned ell) {
  check_components(i, ell);
  if (l > j) throw std::invalid_argument("need l <= j");
  const std::uint64_t q = 1ull << ell;
  if (degree(i) < static_cast<std::uint64_t>(j) * q) {
    throw std::invalid_argument("need deg(i) >= j * 2^ell");
  }
  ExponentVec a(i);
  std::uint64_t delta_units = j - l;  // in units of 2^h for the current h
  if (delta_units == 0) return a;
  for (unsigned h = ell; h-- > 0;) {
    delta_units *= 2;
    const std::uint32_t bit = 1u << h;
    std::uint64_t level_sum = 0;
    for (std::uint32_t c : a) level_sum += (c & bit) ? 1 : 0;
    if (delta_units > level_sum) {
      // Zero the whole level and carry the shortfall down one position.
      for (std::uint32_t& c : a) c &= ~bit;
      delta_units -= level_sum;
    } else {
      // Zero the shortest prefix of set bits summing to delta.
      std::uint64_t removed = 0;
      for (std::uint32_t& c : a) {
        if (removed == delta_units) break;
        if (c & bit) {
          c &= ~bit;
          ++removed;
        }
      }
      return a;
    }
  }
  throw std::logic_error("degree reduction ran out of bits");
}

}  // namespace liftedrs
