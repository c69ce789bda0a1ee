#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibquart/exact_int.hpp"
#include "fibquart/identities.hpp"
#include "fibquart/index.hpp"
#include "fibquart/sum_family.hpp"

namespace fibquart {

/// Grid of closed-form-vs-oracle comparisons plus an optional identity sweep.
/// m = 0 is skipped automatically for families whose closed form needs m != 0.
struct GridSpec {
  std::vector<SumFamily> families = {kAllFamilies.begin(), kAllFamilies.end()};
  Index m_min = -6;
  Index m_max = 6;
  Index n_min = 0;
  Index n_max = 12;
  bool include_identities = false;
  Index identity_min = -30;
  Index identity_max = 30;

  void validate() const;  // nonempty ranges, n_min >= 0
};

/// One failed comparison. For sums, `label` is the family name and the values
/// are closed form vs oracle; for identities, `label` is the identity name
/// and the values are lhs vs rhs.
struct Mismatch {
  std::string label;
  std::vector<Index> args;
  std::string closed;
  std::string oracle;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// A checked exact division that left a remainder. `site` names the divisor.
struct DivisibilityFailure {
  std::string site;
  std::string label;
  std::vector<Index> args;

  friend bool operator==(const DivisibilityFailure&, const DivisibilityFailure&) = default;
};

struct VerifyReport {
  std::uint64_t cases_run = 0;
  std::vector<Mismatch> mismatches;
  std::vector<DivisibilityFailure> divisibility_failures;
  double elapsed_ms = 0.0;

  bool success() const {
    return mismatches.empty() && divisibility_failures.empty();
  }
};

/// Test instrumentation: transforms each closed-form sum value before the
/// comparison, so the detector itself can be exercised.
using ClosedValueHook = std::function<ExactInt(const ExactInt&)>;

/// Evaluates every in-range (family, m, n) both ways and, when enabled, every
/// identity on its argument grid. Collects all discrepancies instead of
/// stopping at the first; mismatch lists are sorted canonically so two runs
/// of the same spec differ only in elapsed time.
VerifyReport run_grid(const GridSpec& spec, const ClosedValueHook& closed_hook = {});

}  // namespace fibquart
