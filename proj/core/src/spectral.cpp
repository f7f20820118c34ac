#include "liftedrs/spectral.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace liftedrs {

namespace {

std::uint64_t binom(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return 0;
  std::uint64_t result = 1;
  for (long long t = 1; t <= k; ++t) {
    result = result * (n - k + t) / t;
  }
  return result;
}

std::uint64_t binom_at_least(unsigned n, long long k) {
  std::uint64_t sum = 0;
  for (long long t = std::max(k, 0ll); t <= n; ++t) sum += binom(n, t);
  return sum;
}

std::vector<double> mat_vec(const RecurrenceMatrix& a, const std::vector<double>& x) {
  std::vector<double> y(a.m, 0.0);
  for (unsigned j = 0; j < a.m; ++j) {
    double acc = 0;
    for (unsigned c = 0; c < a.m; ++c) acc += static_cast<double>(a.entries[j][c]) * x[c];
    y[j] = acc;
  }
  return y;
}

}  // namespace

RecurrenceMatrix build_recurrence_matrix(unsigned m) {
  if (m < 2 || m > 12) throw std::invalid_argument("recurrence matrix needs 2 <= m <= 12");
  RecurrenceMatrix a;
  a.m = m;
  a.entries.assign(m, std::vector<std::uint64_t>(m, 0));
  for (unsigned j = 0; j < m; ++j) {
    a.entries[j][0] = binom_at_least(m, 2ll * j + 1);
    for (unsigned c = 1; c < m; ++c) {
      a.entries[j][c] = binom(m, 2ll * j + 1 - c);
    }
  }
  return a;
}

double dominant_eigenvalue(const RecurrenceMatrix& a, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  constexpr int kMaxIterations = 100000;
  std::vector<double> x(a.m, 1.0);
  double lambda_prev = 0;
  for (int it = 0; it < kMaxIterations; ++it) {
    std::vector<double> y = mat_vec(a, x);
    double num = 0, den = 0, norm2 = 0;
    for (unsigned k = 0; k < a.m; ++k) {
      num += x[k] * y[k];
      den += x[k] * x[k];
      norm2 += y[k] * y[k];
    }
    const double lambda = num / den;
    const double scale = 1.0 / std::sqrt(norm2);
    for (unsigned k = 0; k < a.m; ++k) x[k] = y[k] * scale;
    if (it > 0 && std::abs(lambda - lambda_prev) < tol) return lambda;
    lambda_prev = lambda;
  }
  throw std::runtime_error("power iteration did not converge");
}

bool verify_recurrence(unsigned m, std::uint32_t r, unsigned ell_from, unsigned ell_to) {
  if (ell_to <= ell_from) throw std::invalid_argument("empty ell range");
  const RecurrenceMatrix a = build_recurrence_matrix(m);
  CountVector prev = enumerate_sj(ell_from, m, r);
  for (unsigned ell = ell_from; ell + 1 <= ell_to; ++ell) {
    const CountVector next = enumerate_sj(ell + 1, m, r);
    for (unsigned j = 0; j < m; ++j) {
      std::uint64_t acc = 0;
      for (unsigned c = 0; c < m; ++c) acc += a.entries[j][c] * prev.s[c];
      if (acc != next.s[j]) return false;
    }
    prev = next;
  }
  return true;
}

CountVector recurrence_sj(unsigned ell, unsigned m, std::uint32_t r) {
  // Seed by enumeration at the smallest level where q >= max(4, r), then
  // propagate upward; the counts stay exact in 64 bits for m*ell <= 62.
  unsigned base = 2;
  while ((1u << base) < r) ++base;
  if (ell <= base) return enumerate_sj(ell, m, r);
  if (static_cast<std::uint64_t>(m) * ell > 62) {
    throw std::invalid_argument("counts would overflow 64-bit integers");
  }
  const RecurrenceMatrix a = build_recurrence_matrix(m);
  CountVector cv = enumerate_sj(base, m, r);
  for (unsigned level = base; level < ell; ++level) {
    std::vector<std::uint64_t> next(m, 0);
    for (unsigned j = 0; j < m; ++j) {
      std::uint64_t acc = 0;
      for (unsigned c = 0; c < m; ++c) acc += a.entries[j][c] * cv.s[c];
      next[j] = acc;
    }
    cv.s = std::move(next);
    cv.ell = level + 1;
  }
  return cv;
}

SpectralReport spectral_report(unsigned m, double tol) {
  SpectralReport rep;
  rep.m = m;
  rep.lambda = dominant_eigenvalue(build_recurrence_matrix(m), tol);
  rep.gap_exponent = m - std::log2(rep.lambda);
  rep.pm = prior_convergence_rate(m);
  return rep;
}

double redundancy_exponent(unsigned m, double eps) {
  if (m < 2 || m > 12) throw std::invalid_argument("need 2 <= m <= 12");
  const double lo = (static_cast<double>(m) - 2) / m;
  const double hi = (static_cast<double>(m) - 1) / m;
  if (eps < lo - 1e-12 || eps > hi + 1e-12) {
    throw std::domain_error("eps outside [(m-2)/m, (m-1)/m]");
  }
  const double log_lambda = std::log2(dominant_eigenvalue(build_recurrence_matrix(m)));
  return (m - log_lambda) * eps + ((m - 1) * log_lambda / m - m + 2);
}

double figure_curve_exponent(unsigned m, double eps) {
  const double lambda = dominant_eigenvalue(build_recurrence_matrix(m));
  return std::log(lambda) / std::log(std::exp2(static_cast<double>(m))) *
             (m - 1 - m * eps) +
         m * eps - (m - 2);
}

CompetitorExponents competitor_exponents(double eps) {
  if (eps < 0 || eps >= 1) throw std::domain_error("eps must be in [0, 1)");
  CompetitorExponents out;
  out.projective = (3 * eps + 1) / 2;
  out.reed_muller = std::log2(3.0) / 2 + (2 - std::log2(3.0)) * eps;

  // Scan the integer minimization from the first admissible b; the minimand
  // tends to 1 from below as b grows, so stop after a long increasing run.
  const double first = 2.0 / (1.0 - eps);
  std::uint64_t b = static_cast<std::uint64_t>(std::floor(first)) + 1;
  if (static_cast<double>(b) <= first) ++b;
  double best = 2.0;
  int increases = 0;
  for (std::uint64_t steps = 0; steps < 2000000 && increases < 64; ++b, ++steps) {
    const double bd = static_cast<double>(b);
    const double value = 1.0 - (bd * (1.0 - eps) - 2.0) / (4.0 * bd * (bd - 1.0));
    if (value < best) {
      best = value;
      increases = 0;
    } else {
      ++increases;
    }
  }
  if (increases < 64) throw std::runtime_error("minimand never settled into an increase");
  out.multiplicity = best;
  return out;
}

double prior_convergence_rate(unsigned m) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  const unsigned floor_log = std::bit_width(m) - 1;
  const unsigned ceil_log = floor_log + (std::has_single_bit(m) ? 0 : 1);
  const double x = std::exp2(-static_cast<double>(m) * floor_log);
  return -std::log1p(-x) / std::log(2.0) / ceil_log;
}

}  // namespace liftedrs
