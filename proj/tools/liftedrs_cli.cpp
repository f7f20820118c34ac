// Command line front end: eigenvalue table, monomial counts, exponent curve
// data, a batch recovery demo, and the cross-module verification suites.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liftedrs/batch.hpp"
#include "liftedrs/lifted_code.hpp"
#include "liftedrs/monomial.hpp"
#include "liftedrs/rng.hpp"
#include "liftedrs/selftest.hpp"
#include "liftedrs/spectral.hpp"

namespace {

using namespace liftedrs;

int cmd_lambda_table(unsigned m_max, const std::string& out_path) {
  if (m_max < 2 || m_max > 12) {
    std::cerr << "lambda-table: --m must be in 2..12\n";
    return 2;
  }
  std::vector<SpectralReport> rows;
  for (unsigned m = 2; m <= m_max; ++m) rows.push_back(spectral_report(m));

  std::printf("%3s  %12s  %14s  %14s\n", "m", "lambda_m", "m-log2(lambda)", "p_m");
  for (const SpectralReport& rep : rows) {
    std::printf("%3u  %12.6f  %14.6e  %14.6e\n", rep.m, rep.lambda, rep.gap_exponent,
                rep.pm);
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "lambda-table: cannot write " << out_path << "\n";
      return 2;
    }
    out << "m,lambda,gap,pm\n";
    char buffer[128];
    for (const SpectralReport& rep : rows) {
      std::snprintf(buffer, sizeof buffer, "%u,%.12g,%.12g,%.12g\n", rep.m, rep.lambda,
                    rep.gap_exponent, rep.pm);
      out << buffer;
    }
  }
  return 0;
}

int cmd_count(unsigned m, unsigned ell, std::uint32_t r, bool use_oracle) {
  const CountVector counts = use_oracle ? enumerate_sj(ell, m, r) : recurrence_sj(ell, m, r);
  std::printf("s_j(%u) for m=%u r=%u (%s)\n", ell, m, r,
              use_oracle ? "enumeration" : "recurrence from enumerated base");
  for (unsigned j = 0; j < m; ++j) {
    std::printf("s[%u] = %" PRIu64 "\n", j, counts.s[j]);
  }
  return 0;
}

int cmd_figure_data(const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "figure-data: cannot write " << out_path << "\n";
    return 2;
  }
  out << "series,eps,exponent\n";
  char buffer[160];
  const auto emit = [&](const std::string& series, double eps, double value) {
    std::snprintf(buffer, sizeof buffer, "%s,%.3f,%.12g\n", series.c_str(), eps, value);
    out << buffer;
  };
  for (unsigned m = 2; m <= 4; ++m) {
    const std::string series = "m=" + std::to_string(m);
    const int lo = static_cast<int>(std::ceil((m - 2.0) / m * 1000 - 1e-9));
    const int hi = static_cast<int>(std::floor((m - 1.0) / m * 1000 + 1e-9));
    for (int i = lo; i <= hi; ++i) {
      const double eps = i / 1000.0;
      emit(series, eps, redundancy_exponent(m, eps));
    }
  }
  for (int i = 0; i <= 269; ++i) {
    emit("(3eps+1)/2", i / 1000.0, competitor_exponents(i / 1000.0).projective);
  }
  for (int i = 269; i <= 476; ++i) {
    emit("log4(3)+(2-log2(3))eps", i / 1000.0, competitor_exponents(i / 1000.0).reed_muller);
  }
  for (int i = 0; i <= 999; ++i) {
    emit("g(eps)", i / 1000.0, competitor_exponents(i / 1000.0).multiplicity);
  }
  return 0;
}

int cmd_batch_demo(unsigned m, unsigned ell, std::uint32_t r, std::uint64_t k,
                   std::uint64_t seed) {
  const std::uint32_t q = 1u << ell;
  if (m < 2) {
    std::cerr << "batch-demo: needs m >= 2\n";
    return 2;
  }
  if (r < 1 || r >= q) {
    std::cerr << "batch-demo: needs 1 <= r < q\n";
    return 2;
  }
  const std::uint64_t cap = capacity(m, q, r);
  if (k > cap) {
    std::cerr << "batch-demo: request of size " << k << " exceeds the capacity " << cap
              << " = r q^(m-2)\n";
    return 2;
  }

  const LiftedCode code(m, q, q - r);
  std::printf("code: m=%u q=%u d=%u length=%zu dimension=%zu\n", m, q, q - r,
              code.length(), code.dimension());
  std::printf("capacity: %" PRIu64 " (r=%u)\n", cap, r);

  SplitMix64 rng(seed);
  std::vector<std::uint16_t> message(code.dimension());
  for (auto& c : message) c = static_cast<std::uint16_t>(rng.next_below(q));
  const Codeword w = encode(code, message);

  BatchRequest request;
  for (std::uint64_t t = 0; t < k; ++t) {
    request.targets.push_back(index_point(rng.next_below(code.length()), m, q));
  }

  const BatchPlan plan = plan_batch(code, r, request);
  std::fputs(plan_to_string(plan).c_str(), stdout);
  std::printf("max-overlap: %u (bound r=%u)\n", plan.max_overlap, r);

  const std::vector<std::uint16_t> recovered = execute_batch(code, w, plan);
  bool exact = true;
  for (std::size_t t = 0; t < plan.sets.size(); ++t) {
    exact = exact && recovered[t] == w[point_index(plan.sets[t].target, q)];
  }
  std::printf("recovery: %s\n", exact ? "PASS" : "FAIL");
  return exact ? 0 : 1;
}

int cmd_verify(const std::string& level_name, bool corrupt_modulus) {
  VerifyLevel level;
  if (level_name == "quick") {
    level = VerifyLevel::quick;
  } else if (level_name == "full") {
    level = VerifyLevel::full;
  } else {
    std::cerr << "verify: --level must be quick or full\n";
    return 2;
  }
  VerifyOptions options;
  options.corrupt_modulus = corrupt_modulus;
  const std::vector<SuiteResult> results = run_verification(level, options);
  double total = 0;
  for (const SuiteResult& r : results) {
    total += r.seconds;
    std::printf("%-26s %-4s %8.3fs%s%s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.seconds, r.detail.empty() ? "" : "  ", r.detail.c_str());
  }
  const bool ok = all_passed(results);
  std::printf("verify: %s (%zu suites, %.3f s)\n", ok ? "PASS" : "FAIL", results.size(),
              total);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lifted Reed-Solomon codes, monomial counts, and batch recovery"};
  app.require_subcommand(1);

  unsigned m = 2;
  unsigned ell = 2;
  std::uint32_t r = 1;
  std::uint32_t d = 0;
  std::uint64_t k = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  bool use_oracle = false;
  std::string level = "quick";
  bool corrupt_modulus = false;

  CLI::App* lambda = app.add_subcommand("lambda-table", "growth rates of the counting matrix");
  lambda->add_option("--m", m, "largest m to tabulate")->default_val(9);
  lambda->add_option("--out", out_path, "also write the table as CSV");

  CLI::App* count = app.add_subcommand("count", "sizes s_j of the witness degree classes");
  count->add_option("--m", m, "number of variables")->required();
  count->add_option("--ell", ell, "field exponent, q = 2^ell")->required();
  count->add_option("--r", r, "co-degree parameter")->required();
  count->add_flag("--oracle", use_oracle, "force direct enumeration");

  CLI::App* figure = app.add_subcommand("figure-data", "redundancy exponent curve samples");
  figure->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* demo = app.add_subcommand("batch-demo", "plan and serve one random batch");
  demo->add_option("--m", m, "number of variables")->required();
  demo->add_option("--ell", ell, "field exponent, q = 2^ell")->required();
  CLI::Option* demo_r = demo->add_option("--r", r, "availability parameter, d = q - r");
  CLI::Option* demo_d = demo->add_option("--d", d, "degree bound, r = q - d");
  demo_r->excludes(demo_d);
  demo_d->excludes(demo_r);
  demo->add_option("--k", k, "batch size")->required();
  demo->add_option("--seed", seed, "seed for message and targets")->default_val(0);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--level", level, "quick or full")->default_val("quick");
  verify->add_flag("--corrupt-modulus", corrupt_modulus,
                   "fixture: feed a reducible modulus through the field suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (lambda->parsed()) return cmd_lambda_table(m, out_path);
    if (count->parsed()) return cmd_count(m, ell, r, use_oracle);
    if (figure->parsed()) return cmd_figure_data(out_path);
    if (demo->parsed()) {
      if (demo_d->count() > 0) {
        const std::uint32_t q = 1u << ell;
        if (d < 1 || d >= q) {
          std::cerr << "batch-demo: needs 1 <= d < q\n";
          return 2;
        }
        r = q - d;
      } else if (demo_r->count() == 0) {
        std::cerr << "batch-demo: give either --r or --d\n";
        return 2;
      }
      return cmd_batch_demo(m, ell, r, k, seed);
    }
    if (verify->parsed()) return cmd_verify(level, corrupt_modulus);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
