#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "liftedrs/field.hpp"
#include "liftedrs/monomial.hpp"
#include "liftedrs/rng.hpp"

using namespace liftedrs;

namespace {

// Exact binomials via Pascal's triangle; values for n <= 64 fit in 64 bits.
std::vector<std::vector<std::uint64_t>> pascal(unsigned n_max) {
  std::vector<std::vector<std::uint64_t>> c(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    c[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

ExponentVec next_tuple(ExponentVec d, std::uint32_t q, bool& done) {
  unsigned k = static_cast<unsigned>(d.size());
  done = true;
  while (k-- > 0) {
    if (++d[k] < q) {
      done = false;
      break;
    }
    d[k] = 0;
  }
  return d;
}

}  // namespace

TEST_CASE("binary containment order") {
  CHECK(le2(5, 7));
  CHECK_FALSE(le2(2, 5));
  for (std::uint32_t a = 0; a < 256; ++a) CHECK(le2(a, a));
  CHECK(le2(ExponentVec{1, 2}, ExponentVec{3, 2}));
  CHECK_FALSE(le2(ExponentVec{1, 2}, ExponentVec{3, 1}));
  CHECK_THROWS_AS(le2(ExponentVec{1}, ExponentVec{1, 2}), std::invalid_argument);
}

TEST_CASE("mods_q") {
  CHECK(mods_q(0, 4) == 0);
  CHECK(mods_q(3, 4) == 3);
  CHECK(mods_q(6, 4) == 3);
  CHECK(mods_q(3, 2) == 1);
  CHECK_THROWS_AS(mods_q(1, 6), std::invalid_argument);
  CHECK_THROWS_AS(mods_q(1, 0), std::invalid_argument);
  // T^a and T^(a mod* q) are the same function on GF(q).
  for (unsigned ell : {2u, 3u, 4u}) {
    const Field f(ell);
    const std::uint32_t q = f.q();
    for (std::uint64_t a = 0; a <= 3ull * (q - 1); ++a) {
      const std::uint32_t b = mods_q(a, q);
      for (std::uint32_t x = 0; x < q; ++x) {
        CHECK(f.pow(static_cast<std::uint16_t>(x), a) ==
              f.pow(static_cast<std::uint16_t>(x), b));
      }
    }
  }
}

TEST_CASE("lucas parity equals binary containment") {
  CHECK(lucas_subset(3, 2) == 1);  // binom(3,2) = 3
  CHECK(lucas_subset(4, 2) == 0);  // binom(4,2) = 6
  for (std::uint32_t d = 0; d < 100; ++d) CHECK(lucas_subset(d, 0) == 1);
  const auto binom = pascal(32);
  for (std::uint32_t d = 0; d <= 32; ++d) {
    for (std::uint32_t i = 0; i <= d; ++i) {
      CHECK(lucas_subset(d, i) == static_cast<int>(binom[d][i] & 1));
      CHECK((lucas_subset(d, i) == 1) == le2(i, d));
    }
  }
}

TEST_CASE("d*-badness golden cases") {
  SUBCASE("(2,2) is 3*-good over GF(4)") {
    const auto v = is_dstar_bad({2, 2}, 2, 3);
    CHECK_FALSE(v.is_bad);
    CHECK_FALSE(v.witness.has_value());
  }
  SUBCASE("(3,3) is 3*-bad over GF(4)") {
    const auto v = is_dstar_bad({3, 3}, 2, 3);
    REQUIRE(v.is_bad);
    REQUIRE(v.witness.has_value());
    CHECK(le2(*v.witness, ExponentVec{3, 3}));
    CHECK(mods_q(degree(*v.witness), 4) >= 3);
  }
  SUBCASE("the zero tuple is always good") {
    for (std::uint32_t bound = 1; bound < 8; ++bound) {
      CHECK_FALSE(is_dstar_bad({0, 0, 0}, 3, bound).is_bad);
    }
  }
  CHECK_THROWS_AS(is_dstar_bad({0, 0}, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_dstar_bad({0, 0}, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(is_dstar_bad({4, 0}, 2, 1), std::invalid_argument);
}

TEST_CASE("(q-r)-badness golden cases") {
  CHECK(is_qr_bad({3, 0}, 2, 1).is_bad);
  CHECK_FALSE(is_qr_bad({2, 2}, 2, 1).is_bad);
  const auto v = is_qr_bad({3, 3}, 2, 2);
  REQUIRE(v.is_bad);
  const std::uint64_t wdeg = degree(*v.witness);
  CHECK((wdeg == 2 || wdeg == 6));
  CHECK_THROWS_AS(is_qr_bad({0, 0}, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_qr_bad({0, 0}, 2, 5), std::invalid_argument);
}

TEST_CASE("fast classifiers agree with the submask oracle everywhere") {
  struct Case {
    unsigned ell;
    unsigned m;
  };
  for (const Case& c : {Case{2, 2}, Case{3, 2}, Case{2, 3}, Case{3, 3}}) {
    const std::uint32_t q = 1u << c.ell;
    ExponentVec d(c.m, 0);
    bool done = false;
    while (!done) {
      for (std::uint32_t bound = 1; bound < q; ++bound) {
        const auto fast = dstar_bad_fast(d, c.ell, bound);
        const auto slow = dstar_bad_oracle(d, c.ell, bound);
        REQUIRE(fast.is_bad == slow.is_bad);
        if (fast.is_bad) {
          REQUIRE(le2(*fast.witness, d));
          REQUIRE(mods_q(degree(*fast.witness), q) >= bound);
          REQUIRE(le2(*slow.witness, d));
          REQUIRE(mods_q(degree(*slow.witness), q) >= bound);
        }
      }
      for (std::uint32_t r = 1; r <= q; ++r) {
        const auto fast = qr_bad_fast(d, c.ell, r);
        const auto slow = qr_bad_oracle(d, c.ell, r);
        REQUIRE(fast.is_bad == slow.is_bad);
        if (fast.is_bad) {
          REQUIRE(le2(*fast.witness, d));
          REQUIRE(degree(*fast.witness) % q == q - r);
        }
      }
      d = next_tuple(std::move(d), q, done);
    }
  }
}

TEST_CASE("enumerated witness classes reproduce the worked example") {
  // q = 4, r = 1, m = 2.
  const auto counts = enumerate_sj(2, 2, 1);
  CHECK(counts.s[0] == 9);
  CHECK(counts.s[1] == 0);  // target degree 7 exceeds 2(q-1) = 6

  const auto buckets = collect_sj(2, 2, 1);
  const std::set<ExponentVec> expected = {{3, 0}, {2, 1}, {3, 1}, {1, 2}, {3, 2},
                                          {0, 3}, {1, 3}, {2, 3}, {3, 3}};
  CHECK(std::set<ExponentVec>(buckets[0].begin(), buckets[0].end()) == expected);

  // (2,2) is the only tuple of degree >= 3 that is not (q-r)-bad.
  ExponentVec d(2, 0);
  bool done = false;
  while (!done) {
    if (degree(d) >= 3) {
      CHECK(is_qr_bad(d, 2, 1).is_bad == (d != ExponentVec{2, 2}));
    }
    d = next_tuple(std::move(d), 4, done);
  }
}

TEST_CASE("witness classes are nested") {
  for (unsigned ell : {2u, 3u}) {
    const std::uint32_t q = 1u << ell;
    for (std::uint32_t r = 1; r <= 2; ++r) {
      const auto buckets = collect_sj(ell, 3, r);
      for (unsigned j = 1; j < 3; ++j) {
        for (const ExponentVec& d : buckets[j]) {
          for (unsigned l = 0; l < j; ++l) {
            CHECK(std::find(buckets[l].begin(), buckets[l].end(), d) != buckets[l].end());
          }
        }
      }
      (void)q;
    }
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_sj(16, 2, 1), std::invalid_argument);  // 2^32 tuples
  CHECK_THROWS_AS(enumerate_sj(2, 2, 3), std::invalid_argument);   // r > m
  CHECK_THROWS_AS(enumerate_sj(2, 2, 0), std::invalid_argument);
}

TEST_CASE("leading-bit split") {
  CHECK(f_drop({3, 3}, 2) == ExponentVec{1, 1});
  CHECK(f_lead({3, 3}, 2) == ExponentVec{1, 1});
  CHECK(f_drop({0, 0, 0}, 4) == ExponentVec{0, 0, 0});
  CHECK(f_lead({0, 0, 0}, 4) == ExponentVec{0, 0, 0});
  CHECK(f_drop({6, 14}, 4) == ExponentVec{6, 6});
  CHECK(f_lead({6, 14}, 4) == ExponentVec{0, 1});

  // The pair determines the vector.
  SplitMix64 rng(5);
  for (int round = 0; round < 500; ++round) {
    const unsigned ell = 1 + static_cast<unsigned>(rng.next_below(8));
    ExponentVec a(1 + rng.next_below(4));
    for (auto& c : a) c = static_cast<std::uint32_t>(rng.next_below(1u << ell));
    const ExponentVec drop = f_drop(a, ell);
    const ExponentVec lead = f_lead(a, ell);
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k] == drop[k] + (lead[k] << (ell - 1)));
    }
  }
}

TEST_CASE("degree reduction follows the leading-bit procedure") {
  CHECK(reduce_degree({3, 3}, 1, 0, 2) == ExponentVec{1, 1});
  CHECK(reduce_degree({3, 3}, 1, 1, 2) == ExponentVec{3, 3});  // nothing to remove
  // A top level with no set bits must carry the full deficit downward.
  CHECK(reduce_degree({1, 1, 1, 1}, 1, 0, 2) == ExponentVec{0, 0, 0, 0});
  CHECK_THROWS_AS(reduce_degree({1, 0}, 1, 0, 2), std::invalid_argument);

  SplitMix64 rng(17);
  int accepted = 0;
  while (accepted < 1000) {
    const unsigned ell = 1 + static_cast<unsigned>(rng.next_below(6));
    const unsigned m = 1 + static_cast<unsigned>(rng.next_below(4));
    ExponentVec i(m);
    for (auto& c : i) c = static_cast<std::uint32_t>(rng.next_below(1u << ell));
    const std::uint64_t q = 1ull << ell;
    const std::uint64_t deg = degree(i);
    if (deg < q) continue;
    const unsigned j = 1 + static_cast<unsigned>(rng.next_below(deg / q));
    const unsigned l = static_cast<unsigned>(rng.next_below(j));
    const ExponentVec a = reduce_degree(i, j, l, ell);
    CHECK(le2(a, i));
    CHECK(degree(a) == deg - static_cast<std::uint64_t>(j - l) * q);
    ++accepted;
  }
}
