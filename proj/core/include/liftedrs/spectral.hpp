#ifndef LIFTEDRS_SPECTRAL_HPP
#define LIFTEDRS_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "liftedrs/monomial.hpp"

namespace liftedrs {

// The m x m integer matrix driving s(ell+1) = A_m s(ell):
//   entries[j][0] = #subsets of [m] with at least 2j+1 elements,
//   entries[j][c] = binom(m, 2j+1-c) for c >= 1.
struct RecurrenceMatrix {
  unsigned m = 0;
  std::vector<std::vector<std::uint64_t>> entries;
};

RecurrenceMatrix build_recurrence_matrix(unsigned m);  // 2 <= m <= 12

// Unique dominant eigenvalue of the (non-negative, primitive up to its last
// row) recurrence matrix, by power iteration from the all-ones vector until
// successive Rayleigh quotients differ by less than tol.
double dominant_eigenvalue(const RecurrenceMatrix& a, double tol = 1e-9);

// Exact integer check of the recurrence against enumeration:
// s(ell+1) == A_m s(ell) for every ell in [ell_from, ell_to).
bool verify_recurrence(unsigned m, std::uint32_t r, unsigned ell_from, unsigned ell_to);

// Counts propagated by the recurrence from an enumerated base level; must
// agree with enumerate_sj wherever both are defined.
CountVector recurrence_sj(unsigned ell, unsigned m, std::uint32_t r);

struct SpectralReport {
  unsigned m = 0;
  double lambda = 0;        // dominant eigenvalue of A_m
  double gap_exponent = 0;  // m - log2(lambda)
  double pm = 0;            // convergence rate of the earlier approach
};

SpectralReport spectral_report(unsigned m, double tol = 1e-9);

// Redundancy growth exponent (m - log2 lambda_m) eps + ((m-1) log2(lambda_m)/m - m + 2)
// for eps in [(m-2)/m, (m-1)/m].
double redundancy_exponent(unsigned m, double eps);

// The same exponent written the way the comparison plot parameterizes it;
// algebraically identical to redundancy_exponent.
double figure_curve_exponent(unsigned m, double eps);

// Earlier constructions' redundancy exponents at k = n^eps.
struct CompetitorExponents {
  double projective = 0;    // (3 eps + 1) / 2
  double reed_muller = 0;   // log4(3) + (2 - log2(3)) eps
  double multiplicity = 0;  // min over integer b > 2/(1-eps)
};

CompetitorExponents competitor_exponents(double eps);

// Rate convergence exponent p_m of the earlier recursive estimate. The bit
// group size uses floor(log2 m), the normalization ceil(log2 m).
double prior_convergence_rate(unsigned m);

}  // namespace liftedrs

#endif  // LIFTEDRS_SPECTRAL_HPP
