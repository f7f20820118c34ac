#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdint>

#include "liftedrs/rng.hpp"
#include "liftedrs/spectral.hpp"

using namespace liftedrs;

namespace {

bool close_rel(double value, double expected, double rel) {
  return std::abs(value - expected) <= rel * std::abs(expected);
}

}  // namespace

TEST_CASE("recurrence matrices for small m") {
  const RecurrenceMatrix a2 = build_recurrence_matrix(2);
  CHECK(a2.entries == std::vector<std::vector<std::uint64_t>>{{3, 1}, {0, 1}});
  const RecurrenceMatrix a3 = build_recurrence_matrix(3);
  CHECK(a3.entries ==
        std::vector<std::vector<std::uint64_t>>{{7, 1, 0}, {1, 3, 3}, {0, 0, 1}});
  for (unsigned m = 2; m <= 12; ++m) {
    const RecurrenceMatrix a = build_recurrence_matrix(m);
    CHECK(a.entries[m - 1][m - 1] == 1);  // binom(m, m)
    for (unsigned j = 0; j < m; ++j) {
      std::uint64_t row = 0;
      for (unsigned c = 0; c < m; ++c) row += a.entries[j][c];
      CHECK(row <= (1ull << m));
    }
  }
  CHECK_THROWS_AS(build_recurrence_matrix(1), std::invalid_argument);
  CHECK_THROWS_AS(build_recurrence_matrix(13), std::invalid_argument);
}

TEST_CASE("dominant eigenvalues") {
  CHECK(std::abs(dominant_eigenvalue(build_recurrence_matrix(2)) - 3.0) < 1e-6);
  CHECK(std::abs(dominant_eigenvalue(build_recurrence_matrix(3)) - (5.0 + std::sqrt(5.0))) <
        1e-9);
  CHECK(close_rel(dominant_eigenvalue(build_recurrence_matrix(3)), 7.2361, 1e-3));
  CHECK(std::abs(dominant_eigenvalue(build_recurrence_matrix(4)) - 15.543647468751944) <
        1e-9);
  CHECK(close_rel(dominant_eigenvalue(build_recurrence_matrix(9)), 511.9986, 1e-3));
  for (unsigned m = 2; m <= 12; ++m) {
    const double lambda = dominant_eigenvalue(build_recurrence_matrix(m));
    CHECK(lambda >= std::exp2(m - 1.0) - 1e-9);
    CHECK(lambda <= std::exp2(static_cast<double>(m)) + 1e-9);
  }
  CHECK_THROWS_AS(dominant_eigenvalue(build_recurrence_matrix(2), 0.0),
                  std::invalid_argument);
}

TEST_CASE("recurrence matches enumeration exactly") {
  CHECK(verify_recurrence(2, 1, 2, 4));
  CHECK(verify_recurrence(2, 2, 2, 4));
  CHECK(verify_recurrence(3, 1, 2, 3));
  CHECK_THROWS_AS(verify_recurrence(2, 1, 3, 3), std::invalid_argument);
}

TEST_CASE("propagated counts equal enumerated counts") {
  for (unsigned ell = 2; ell <= 5; ++ell) {
    CHECK(recurrence_sj(ell, 2, 1).s == enumerate_sj(ell, 2, 1).s);
    CHECK(recurrence_sj(ell, 2, 2).s == enumerate_sj(ell, 2, 2).s);
  }
  CHECK(recurrence_sj(4, 3, 2).s == enumerate_sj(4, 3, 2).s);
}

TEST_CASE("redundancy exponent formula") {
  // Left end of the m = 2 interval: value log4(3) up to the eigenvalue
  // iteration tolerance; right end: exactly 1, the lambda terms cancel.
  CHECK(std::abs(redundancy_exponent(2, 0.0) - std::log2(3.0) / 2) < 1e-8);
  CHECK(std::abs(redundancy_exponent(2, 0.5) - 1.0) < 1e-12);
  CHECK_THROWS_AS(redundancy_exponent(3, 0.1), std::domain_error);
  CHECK_THROWS_AS(redundancy_exponent(2, 0.6), std::domain_error);

  SplitMix64 rng(3141);
  for (int round = 0; round < 100; ++round) {
    const unsigned m = 2 + static_cast<unsigned>(rng.next_below(11));
    const double lo = (m - 2.0) / m;
    const double hi = (m - 1.0) / m;
    const double eps = lo + (hi - lo) * ((rng.next() >> 11) * 0x1.0p-53);
    CHECK(std::abs(redundancy_exponent(m, eps) - figure_curve_exponent(m, eps)) < 1e-12);
  }
  for (unsigned m = 2; m <= 12; ++m) {
    CHECK(std::abs(redundancy_exponent(m, (m - 1.0) / m) - 1.0) < 1e-12);
  }
}

TEST_CASE("competitor exponents") {
  const CompetitorExponents at0 = competitor_exponents(0.0);
  CHECK(at0.projective == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(at0.reed_muller == doctest::Approx(std::log2(3.0) / 2).epsilon(1e-12));
  CHECK(at0.multiplicity == doctest::Approx(23.0 / 24).epsilon(1e-12));
  // The two line bounds cross the lifted m=2 curve's formula shape.
  const CompetitorExponents mid = competitor_exponents(0.4);
  CHECK(mid.projective == doctest::Approx(1.1).epsilon(1e-12));
  CHECK_THROWS_AS(competitor_exponents(1.0), std::domain_error);
  CHECK_THROWS_AS(competitor_exponents(-0.1), std::domain_error);
}

TEST_CASE("prior convergence rates reproduce the reference column") {
  CHECK(close_rel(prior_convergence_rate(2), 4.1504e-1, 1e-3));
  CHECK(close_rel(prior_convergence_rate(4), 2.8233e-3, 1e-3));
  CHECK(close_rel(prior_convergence_rate(5), 4.6986e-4, 1e-3));
  CHECK(close_rel(prior_convergence_rate(8), 2.8664e-8, 1e-3));
  CHECK(close_rel(prior_convergence_rate(9), 2.6872e-9, 1e-3));
  // The spectral gap beats the earlier rate for every tabulated m >= 3.
  for (unsigned m = 3; m <= 9; ++m) {
    const SpectralReport rep = spectral_report(m);
    CHECK(rep.gap_exponent > rep.pm);
  }
  CHECK(spectral_report(2).gap_exponent ==
        doctest::Approx(spectral_report(2).pm).epsilon(1e-9));
}

TEST_CASE("witness class growth settles at the dominant eigenvalue") {
  // m = 2, r = 1: the count ratio is the eigenvalue from the start.
  double prev_error = 1e9;
  for (unsigned ell = 2; ell <= 5; ++ell) {
    const double ratio = static_cast<double>(enumerate_sj(ell + 1, 2, 1).s[0]) /
                         static_cast<double>(enumerate_sj(ell, 2, 1).s[0]);
    const double error = std::abs(ratio - 3.0);
    CHECK(error <= prev_error + 1e-12);
    prev_error = error;
    if (ell == 5) CHECK(error / 3.0 <= 0.05);
  }
}
