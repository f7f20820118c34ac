#include "liftedrs/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>

#include "liftedrs/batch.hpp"
#include "liftedrs/field.hpp"
#include "liftedrs/lifted_code.hpp"
#include "liftedrs/monomial.hpp"
#include "liftedrs/rng.hpp"
#include "liftedrs/spectral.hpp"

namespace liftedrs {

namespace {

struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

std::string fmt(const ExponentVec& d) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) out << ',';
    out << d[k];
  }
  out << ')';
  return out.str();
}

// All degrees achievable by submasks of d; independent of the counting
// code's internals.
std::vector<bool> achievable_degrees(const ExponentVec& d, std::uint32_t q) {
  const std::size_t max_degree = d.size() * (q - 1);
  std::vector<bool> reach(max_degree + 1, false);
  reach[0] = true;
  for (std::uint32_t c : d) {
    std::vector<bool> next(reach.size(), false);
    std::uint32_t s = 0;
    for (;;) {
      for (std::size_t t = 0; t + s < next.size(); ++t) {
        if (reach[t]) next[t + s] = true;
      }
      if (s == c) break;
      s = (s - c) & c;
    }
    reach.swap(next);
  }
  return reach;
}

void field_axioms(Checker& ck, const Field& f) {
  const std::uint32_t q = f.q();
  for (std::uint32_t a = 0; a < q; ++a) {
    ck.expect(f.add(a, a) == 0, "a+a != 0");
    ck.expect(f.mul(a, 1) == a, "1 is not neutral");
    ck.expect(f.pow(a, q) == a, "a^q != a");
    if (a != 0) {
      ck.expect(f.pow(a, q - 1) == 1, "a^(q-1) != 1");
      ck.expect(f.mul(a, f.inv(a)) == 1, "a * inv(a) != 1");
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      ck.expect(f.mul(a, b) == f.mul(b, a), "multiplication not commutative");
      for (std::uint32_t c = 0; c < q; ++c) {
        ck.expect(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)),
                  "multiplication not associative");
        ck.expect(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
                  "multiplication not distributive");
      }
    }
    if (!ck.ok) return;
  }
}

void suite_field(Checker& ck, VerifyLevel level, const VerifyOptions& options) {
  const unsigned max_ell = level == VerifyLevel::full ? 4 : 3;
  for (unsigned ell = 1; ell <= max_ell; ++ell) {
    if (options.corrupt_modulus && ell == 2) {
      // x^2 + 1 = (x + 1)^2 is reducible; the axioms must catch it.
      field_axioms(ck, Field::with_unchecked_modulus(2, 0b101));
    } else {
      field_axioms(ck, Field(ell));
    }
    if (!ck.ok) {
      ck.detail += " (ell=" + std::to_string(ell) + ")";
      return;
    }
  }
}

void suite_interpolation(Checker& ck, VerifyLevel level, const VerifyOptions&) {
  const unsigned max_ell = level == VerifyLevel::full ? 4 : 3;
  SplitMix64 rng(41);
  for (unsigned ell = 1; ell <= max_ell; ++ell) {
    const Field f(ell);
    const std::uint32_t q = f.q();
    for (unsigned round = 0; round < 25; ++round) {
      const std::size_t n = 1 + rng.next_below(q);
      std::vector<std::uint16_t> coeffs(n);
      for (auto& c : coeffs) c = static_cast<std::uint16_t>(rng.next_below(q));
      const UniPoly p = UniPoly::from_values(f, coeffs);
      std::vector<std::pair<FieldElem, FieldElem>> samples;
      for (std::uint32_t x = 0; x < n; ++x) {
        samples.emplace_back(f.elem(x), p.eval(f.elem(x)));
      }
      const UniPoly back = interpolate(samples);
      ck.expect(back == p, "interpolate(eval(p)) != p at ell=" + std::to_string(ell));
      if (!ck.ok) return;
    }
  }
}

void suite_order_lucas(Checker& ck, VerifyLevel, const VerifyOptions&) {
  for (std::uint32_t a = 0; a < 64; ++a) {
    ck.expect(le2(a, a), "le2 not reflexive");
    for (std::uint32_t b = 0; b < 64; ++b) {
      if (le2(a, b) && le2(b, a)) ck.expect(a == b, "le2 not antisymmetric");
      for (std::uint32_t c = 0; c < 64 && le2(a, b) && le2(b, c); ++c) {
        ck.expect(le2(a, c), "le2 not transitive");
      }
    }
  }
  // Pascal triangle mod 2 as the binomial reference.
  std::vector<std::vector<std::uint8_t>> parity(65, std::vector<std::uint8_t>(65, 0));
  for (unsigned n = 0; n <= 64; ++n) {
    parity[n][0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
      parity[n][k] = parity[n - 1][k - 1] ^ (k <= n - 1 ? parity[n - 1][k] : 0);
    }
  }
  for (std::uint32_t d = 0; d <= 64; ++d) {
    for (std::uint32_t i = 0; i <= 64; ++i) {
      const int expected = i <= d ? parity[d][i] : 0;
      ck.expect(lucas_subset(d, i) == expected, "lucas_subset mismatch");
      ck.expect((lucas_subset(d, i) == 1) == le2(i, d), "lucas != le2");
    }
  }
}

void suite_mods(Checker& ck, VerifyLevel level, const VerifyOptions&) {
  std::vector<unsigned> ells = {2, 3};
  if (level == VerifyLevel::full) ells.push_back(4);
  for (unsigned ell : ells) {
    const Field f(ell);
    const std::uint32_t q = f.q();
    for (std::uint64_t a = 0; a <= 3ull * (q - 1); ++a) {
      const std::uint32_t b = mods_q(a, q);
      for (std::uint32_t x = 0; x < q; ++x) {
        ck.expect(f.pow(static_cast<std::uint16_t>(x), a) ==
                      f.pow(static_cast<std::uint16_t>(x), b),
                  "T^a != T^(a mod* q) at q=" + std::to_string(q));
      }
    }
  }
}

void suite_badness_engines(Checker& ck, VerifyLevel level, const VerifyOptions&) {
  struct Case {
    unsigned ell;
    unsigned m;
  };
  std::vector<Case> cases = {{2, 2}, {3, 2}};
  if (level == VerifyLevel::full) {
    cases.push_back({2, 3});
    cases.push_back({3, 3});
    cases.push_back({4, 2});
  }
  for (const Case& c : cases) {
    const std::uint32_t q = 1u << c.ell;
    ExponentVec d(c.m, 0);
    for (;;) {
      for (std::uint32_t bound = 1; bound < q; ++bound) {
        const BadnessVerdict fast = dstar_bad_fast(d, c.ell, bound);
        const BadnessVerdict slow = dstar_bad_oracle(d, c.ell, bound);
        ck.expect(fast.is_bad == slow.is_bad,
                  "dstar engines disagree at d=" + fmt(d) + " bound=" + std::to_string(bound));
        if (fast.is_bad) {
          ck.expect(le2(*fast.witness, d), "dstar witness not a submask");
          ck.expect(mods_q(degree(*fast.witness), q) >= bound, "dstar witness misses the bound");
        }
      }
      for (std::uint32_t r = 1; r <= q; ++r) {
        const BadnessVerdict fast = qr_bad_fast(d, c.ell, r);
        const BadnessVerdict slow = qr_bad_oracle(d, c.ell, r);
        ck.expect(fast.is_bad == slow.is_bad,
                  "qr engines disagree at d=" + fmt(d) + " r=" + std::to_string(r));
        if (fast.is_bad) {
          ck.expect(le2(*fast.witness, d), "qr witness not a submask");
          ck.expect(degree(*fast.witness) % q == q - r, "qr witness misses the residue");
        }
      }
      if (!ck.ok) return;
      unsigned k = c.m;
      bool done = true;
      while (k-- > 0) {
        if (++d[k] < q) {
          done = false;
          break;
        }
        d[k] = 0;
      }
      if (done) break;
    }
  }
}

void suite_counting(Checker& ck, VerifyLevel level, const VerifyOptions&) {
  struct Case {
    unsigned ell;
    unsigned m;
  };
  std::vector<Case> cases = {{2, 2}, {3, 2}};
  if (level == VerifyLevel::full) {
    cases.push_back({2, 3});
    cases.push_back({3, 3});
  }
  for (const Case& c : cases) {
    const std::uint32_t q = 1u << c.ell;
    const std::uint32_t max_r = std::min<std::uint32_t>(c.m, q - 1);
    for (std::uint32_t r = 1; r <= max_r; ++r) {
      const auto buckets = collect_sj(c.ell, c.m, r);
      const CountVector counts = enumerate_sj(c.ell, c.m, r);
      for (unsigned j = 0; j < c.m; ++j) {
        ck.expect(counts.s[j] == buckets[j].size(), "counts disagree with member lists");
      }
      for (unsigned j = 1; j < c.m; ++j) {
        ck.expect(counts.s[j] <= counts.s[j - 1], "s_j increased in j");
        // Nesting: every member of S_j lies in every S_l below it.
        for (const ExponentVec& d : buckets[j]) {
          for (unsigned l = 0; l < j; ++l) {
            const bool in_l = std::find(buckets[l].begin(), buckets[l].end(), d) !=
                              buckets[l].end();
            ck.expect(in_l, "S_j not nested inside S_l at d=" + fmt(d));
          }
        }
      }
      // Membership consistency: (q-r)*-bad iff some submask degree equals
      // (q - r0 - j) + q j for r0 in [r], j in Z_m.
      ExponentVec d(c.m, 0);
      for (;;) {
        const bool star_bad = is_dstar_bad(d, c.ell, q - r).is_bad;
        const std::vector<bool> reach = achievable_degrees(d, q);
        bool expanded = false;
        for (std::uint32_t r0 = 1; r0 <= r && !expanded; ++r0) {
          for (unsigned j = 0; j < c.m && !expanded; ++j) {
            const std::int64_t t = static_cast<std::int64_t>(q) - r0 - j +
                                   static_cast<std::int64_t>(q) * j;
            if (t >= 0 && t < static_cast<std::int64_t>(reach.size()) && reach[t]) {
              expanded = true;
            }
          }
        }
        ck.expect(star_bad == expanded, "badness expansion mismatch at d=" + fmt(d));
        if (!ck.ok) return;
        unsigned k = c.m;
        bool done = true;
        while (k-- > 0) {
          if (++d[k] < q) {
            done = false;
            break;
          }
          d[k] = 0;
        }
        if (done) break;
      }
    }
  }
}

void suite_recurrence(Checker& ck, VerifyLevel level, const VerifyOptions&) {
  ck.expect(verify_recurrence(2, 1, 2, 4), "recurrence fails at m=2 r=1");
  ck.expect(verify_recurrence(2, 2, 2, 4), "recurrence fails at m=2 r=2");
  if (level == VerifyLevel::full) {
    ck.expect(verify_recurrence(2, 1, 2, 5), "recurrence fails at m=2 r=1 ell<=5");
    ck.expect(verify_recurrence(2, 2, 2, 5), "recurrence fails at m=2 r=2 ell<=5");
    for (std::uint32_t r = 1; r <= 3; ++r) {
      ck.expect(verify_recurrence(3, r, 2, 4),
                "recurrence fails at m=3 r=" + std::to_string(r));
    }
  }
  // Propagated counts must agree with enumeration wherever both run.
  for (unsigned ell = 2; ell <= (level == VerifyLevel::full ? 6u : 4u); ++ell) {
    const CountVector a = recurrence_sj(ell, 2, 1);
    const CountVector b = enumerate_sj(ell, 2, 1);
    ck.expect(a.s == b.s, "propagated counts diverge at ell=" + std::to_string(ell));
  }
}

void suite_code_equivalence(Checker& ck, VerifyLevel level, const VerifyOptions&) {
  struct Case {
    unsigned m;
    std::uint32_t q;
  };
  std::vector<Case> cases = {{2, 4}};
  if (level == VerifyLevel::full) {
    cases.push_back({2, 8});
    cases.push_back({3, 4});
  }
  for (const Case& c : cases) {
    for (std::uint32_t d = 1; d < c.q; ++d) {
      const LiftedCode code(c.m, c.q, d);
      ck.expect(code.dimension() == bruteforce_dimension(c.m, c.q, d),
                "span dimension != constraint null space at d=" + std::to_string(d));
      for (const ExponentVec& e : code.basis()) {
        std::vector<std::uint16_t> coeffs(code.dimension(), 0);
        coeffs[&e - code.basis().data()] = 1;
        ck.expect(is_codeword_bruteforce(encode(code, coeffs), c.m, c.q, d),
                  "basis monomial fails the line test: " + fmt(e));
        if (!ck.ok) return;
      }
      // Everything of total degree < d belongs to the basis.
      ExponentVec e(c.m, 0);
      for (;;) {
        if (degree(e) <= d - 1) {
          const bool in_basis =
              std::find(code.basis().begin(), code.basis().end(), e) != code.basis().end();
          ck.expect(in_basis, "low-degree monomial missing from basis: " + fmt(e));
        }
        unsigned k = c.m;
        bool done = true;
        while (k-- > 0) {
          if (++e[k] < c.q) {
            done = false;
            break;
          }
          e[k] = 0;
        }
        if (done) break;
      }
    }
  }
}

void suite_spectral(Checker& ck, VerifyLevel, const VerifyOptions&) {
  for (unsigned m = 2; m <= 12; ++m) {
    const double lambda = dominant_eigenvalue(build_recurrence_matrix(m));
    ck.expect(lambda >= std::exp2(m - 1.0) - 1e-6 && lambda <= std::exp2(double(m)) + 1e-6,
              "lambda outside [2^(m-1), 2^m] at m=" + std::to_string(m));
  }
  ck.expect(std::abs(dominant_eigenvalue(build_recurrence_matrix(2)) - 3.0) < 1e-9,
            "lambda_2 != 3");
  ck.expect(std::abs(dominant_eigenvalue(build_recurrence_matrix(3)) - (5.0 + std::sqrt(5.0))) <
                1e-9,
            "lambda_3 != 5 + sqrt(5)");
  for (unsigned m = 3; m <= 9; ++m) {
    const SpectralReport rep = spectral_report(m);
    ck.expect(rep.gap_exponent > rep.pm, "no improvement over the earlier rate at m=" +
                                             std::to_string(m));
  }
}

void suite_exponents(Checker& ck, VerifyLevel, const VerifyOptions&) {
  SplitMix64 rng(271828);
  for (unsigned round = 0; round < 100; ++round) {
    const unsigned m = 2 + static_cast<unsigned>(rng.next_below(11));
    const double lo = (m - 2.0) / m;
    const double hi = (m - 1.0) / m;
    const double eps = lo + (hi - lo) * (rng.next() >> 11) * 0x1.0p-53;
    const double direct = redundancy_exponent(m, eps);
    const double figure = figure_curve_exponent(m, eps);
    ck.expect(std::abs(direct - figure) < 1e-12, "exponent parameterizations disagree");
  }
  for (unsigned m = 2; m <= 12; ++m) {
    ck.expect(std::abs(redundancy_exponent(m, (m - 1.0) / m) - 1.0) < 1e-12,
              "curve does not end at exponent 1");
  }
  const CompetitorExponents at0 = competitor_exponents(0.0);
  ck.expect(std::abs(at0.projective - 0.5) < 1e-15, "projective bound at 0 is not 1/2");
  ck.expect(std::abs(at0.reed_muller - std::log2(3.0) / 2) < 1e-15,
            "reed-muller bound at 0 is not log4(3)");
  ck.expect(std::abs(at0.multiplicity - (1.0 - 1.0 / 24)) < 1e-12,
            "multiplicity bound at 0 is not 23/24");
  // The lifted curves never decrease: slope m - log2(lambda_m) >= 0.
  for (unsigned m = 2; m <= 4; ++m) {
    const double slope = redundancy_exponent(m, (m - 1.0) / m) -
                         redundancy_exponent(m, (m - 2.0) / m);
    ck.expect(slope >= 0, "lifted curve decreases at m=" + std::to_string(m));
  }
}

void run_batch_case(Checker& ck, unsigned m, std::uint32_t q, std::uint32_t r,
                    unsigned seeds) {
  const LiftedCode code(m, q, q - r);
  const std::uint64_t k = capacity(m, q, r);
  for (unsigned seed = 0; seed < seeds && ck.ok; ++seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint16_t> message(code.dimension());
    for (auto& c : message) c = static_cast<std::uint16_t>(rng.next_below(q));
    const Codeword w = encode(code, message);

    BatchRequest request;
    if (seed % 5 == 0) {
      // Adversarial case: the whole batch asks for one symbol.
      const Point p = index_point(rng.next_below(code.length()), m, q);
      request.targets.assign(k, p);
    } else {
      for (std::uint64_t t = 0; t < k; ++t) {
        request.targets.push_back(index_point(rng.next_below(code.length()), m, q));
      }
    }

    const BatchPlan plan = plan_batch(code, r, request);
    ck.expect(plan.sets.size() == request.targets.size(), "plan is missing sets");
    ck.expect(plan.max_overlap < r, "accepted line overlap reached r");
    std::vector<char> seen(code.length(), 0);
    for (const RecoveringSet& set : plan.sets) {
      ck.expect(set.read_params.size() == q - r, "read set of wrong size");
      const std::size_t target_index = point_index(set.target, q);
      for (std::uint16_t t : set.read_params) {
        const std::size_t pi = point_index(read_point(code.field(), set, t), q);
        ck.expect(pi != target_index, "read set contains its target");
        ck.expect(!seen[pi], "read sets intersect");
        seen[pi] = 1;
      }
    }
    const std::vector<std::uint16_t> recovered = execute_batch(code, w, plan);
    for (std::size_t t = 0; t < plan.sets.size(); ++t) {
      ck.expect(recovered[t] == w[point_index(plan.sets[t].target, q)],
                "recovered value differs from the stored symbol");
    }
  }
}

void suite_batch(Checker& ck, VerifyLevel level, const VerifyOptions&) {
  run_batch_case(ck, 2, 8, 1, 25);
  run_batch_case(ck, 2, 8, 2, 25);
  if (level == VerifyLevel::full) {
    for (std::uint32_t r : {1u, 2u, 4u}) run_batch_case(ck, 2, 16, r, 50);
    for (std::uint32_t r : {1u, 2u}) run_batch_case(ck, 3, 8, r, 50);
  }
}

void suite_serialization(Checker& ck, VerifyLevel level, const VerifyOptions&) {
  std::vector<std::pair<unsigned, std::uint32_t>> params = {{2, 4}};
  if (level == VerifyLevel::full) params.push_back({2, 8});
  for (const auto& [m, q] : params) {
    const LiftedCode code(m, q, q - 1);
    const std::string text = code_to_string(code);
    const LiftedCode back = code_from_string(text);
    ck.expect(back.basis() == code.basis() && back.d() == code.d(),
              "code did not survive the text round trip");

    SplitMix64 rng(9);
    std::vector<std::uint16_t> message(code.dimension());
    for (auto& c : message) c = static_cast<std::uint16_t>(rng.next_below(q));
    const Codeword w = encode(code, message);
    ck.expect(codeword_from_string(codeword_to_string(w), code) == w,
              "codeword did not survive the text round trip");
  }
}

using SuiteFn = std::function<void(Checker&, VerifyLevel, const VerifyOptions&)>;

}  // namespace

std::vector<SuiteResult> run_verification(VerifyLevel level, const VerifyOptions& options) {
  const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"field-axioms", suite_field},
      {"interpolation-roundtrip", suite_interpolation},
      {"binary-order-lucas", suite_order_lucas},
      {"mods-reduction", suite_mods},
      {"badness-engines", suite_badness_engines},
      {"counting-nesting", suite_counting},
      {"recurrence-exactness", suite_recurrence},
      {"code-equivalence", suite_code_equivalence},
      {"spectral-table", suite_spectral},
      {"exponent-curves", suite_exponents},
      {"batch-recovery", suite_batch},
      {"serialization-roundtrip", suite_serialization},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : suites) {
    SuiteResult result;
    result.name = name;
    Checker ck;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(ck, level, options);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    result.seconds = std::chrono::duration<double>(stop - start).count();
    result.passed = ck.ok;
    result.detail = ck.detail;
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace liftedrs
