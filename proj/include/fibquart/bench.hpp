#pragma once

#include "fibquart/index.hpp"
#include "fibquart/sum_family.hpp"

namespace fibquart {

/// Median-of-repetitions timing of closed form vs direct summation for one
/// sum. values_equal must be true before the timings mean anything.
struct BenchResult {
  SumFamily family;
  Index m;
  Index n;
  double closed_ms;
  double oracle_ms;
  double speedup;  // oracle_ms / closed_ms
  bool values_equal;
};

/// Times both methods `repetitions` times on a monotonic clock and reports
/// medians. Requires n >= 1 and repetitions >= 1 (plus the family's own
/// domain constraints). Value equality is checked on every repetition.
BenchResult bench(SumFamily family, Index m, Index n, int repetitions);

}  // namespace fibquart
