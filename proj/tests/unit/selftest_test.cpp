#include <doctest.h>

#include "liftedrs/selftest.hpp"

using namespace liftedrs;

TEST_CASE("quick verification passes on a healthy build") {
  const auto results = run_verification(VerifyLevel::quick);
  for (const SuiteResult& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
  CHECK(all_passed(results));
}

TEST_CASE("a corrupted modulus is caught by the field suite") {
  VerifyOptions options;
  options.corrupt_modulus = true;
  const auto results = run_verification(VerifyLevel::quick, options);
  CHECK_FALSE(all_passed(results));
  bool field_suite_failed = false;
  for (const SuiteResult& r : results) {
    if (r.name == "field-axioms") field_suite_failed = !r.passed;
  }
  CHECK(field_suite_failed);
}
