#include "doctest.h"

#include "fibquart/errors.hpp"
#include "fibquart/verify.hpp"

namespace {

using fibquart::ExactInt;
using fibquart::GridSpec;
using fibquart::Index;
using fibquart::SumFamily;
using fibquart::VerifyReport;

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("clean grid with identities: empty report, exact case count") {
  GridSpec spec;
  spec.m_min = -3;
  spec.m_max = 3;
  spec.n_max = 6;
  spec.include_identities = true;
  spec.identity_min = -8;
  spec.identity_max = 8;

  const VerifyReport report = fibquart::run_grid(spec);
  CHECK(report.success());
  CHECK(report.mismatches.empty());
  CHECK(report.divisibility_failures.empty());
  // Sums: two m!=0 families over 6 m-values, two all-m families over 7,
  // each with 7 n-values; identities: 3 two-arg over 17^2, 6 one-arg over 17.
  const std::uint64_t sum_cases = (6 + 6 + 7 + 7) * 7;
  const std::uint64_t identity_cases = 3 * 17 * 17 + 6 * 17;
  CHECK(report.cases_run == sum_cases + identity_cases);
}

TEST_CASE("single-point grid") {
  GridSpec spec;
  spec.families = {SumFamily::FibFourth};
  spec.m_min = 1;
  spec.m_max = 1;
  spec.n_max = 0;
  const VerifyReport report = fibquart::run_grid(spec);
  CHECK(report.cases_run == 1);
  CHECK(report.success());
}

TEST_CASE("deterministic apart from elapsed time") {
  GridSpec spec;
  spec.m_min = -2;
  spec.m_max = 2;
  spec.n_max = 4;
  spec.include_identities = true;
  spec.identity_min = -5;
  spec.identity_max = 5;
  const VerifyReport a = fibquart::run_grid(spec);
  const VerifyReport b = fibquart::run_grid(spec);
  CHECK(a.cases_run == b.cases_run);
  CHECK(a.mismatches == b.mismatches);
  CHECK(a.divisibility_failures == b.divisibility_failures);
}

TEST_CASE("corrupted closed form is detected on every case") {
  GridSpec spec;
  spec.families = {SumFamily::FibFourth};
  spec.m_min = 1;
  spec.m_max = 2;
  spec.n_max = 3;
  const VerifyReport report = fibquart::run_grid(
      spec, [](const ExactInt& value) { return value + ExactInt(1); });
  CHECK(!report.success());
  CHECK(report.cases_run == 8);
  CHECK(report.mismatches.size() == 8);
  const fibquart::Mismatch& first = report.mismatches.front();
  CHECK(first.label == "fib4");
  CHECK(first.args == std::vector<Index>{1, 0});
  CHECK(first.closed == "1");
  CHECK(first.oracle == "0");
}

TEST_CASE("malformed grids are parameter errors") {
  GridSpec inverted;
  inverted.m_min = 3;
  inverted.m_max = -3;
  CHECK_THROWS_AS((void)fibquart::run_grid(inverted), fibquart::domain_error);

  GridSpec negative_n;
  negative_n.n_min = -1;
  CHECK_THROWS_AS((void)fibquart::run_grid(negative_n), fibquart::domain_error);

  GridSpec bad_identity;
  bad_identity.include_identities = true;
  bad_identity.identity_min = 5;
  bad_identity.identity_max = -5;
  CHECK_THROWS_AS((void)fibquart::run_grid(bad_identity), fibquart::domain_error);
}

}  // TEST_SUITE
