#ifndef LIFTEDRS_SELFTEST_HPP
#define LIFTEDRS_SELFTEST_HPP

#include <string>
#include <vector>

namespace liftedrs {

enum class VerifyLevel { quick, full };

struct SuiteResult {
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;  // first failure, empty when passed
};

struct VerifyOptions {
  // Feeds a reducible modulus into the field checks; the arithmetic suite
  // must then fail. Negative control for the verification pipeline.
  bool corrupt_modulus = false;
};

// Runs the cross-module invariant suites. quick covers q <= 8 and m <= 2;
// full adds m = 3 and q = 16. Results come back in a fixed order.
std::vector<SuiteResult> run_verification(VerifyLevel level, const VerifyOptions& options = {});

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace liftedrs

#endif  // LIFTEDRS_SELFTEST_HPP
