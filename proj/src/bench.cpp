#include "fibquart/bench.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "fibquart/closed_form.hpp"
#include "fibquart/errors.hpp"
#include "fibquart/oracle.hpp"

namespace fibquart {

namespace {

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 != 0) return samples[mid];
  return (samples[mid - 1] + samples[mid]) / 2.0;
}

template <typename F>
double timed_ms(F&& run) {
  const auto t0 = std::chrono::steady_clock::now();
  run();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

BenchResult bench(SumFamily family, Index m, Index n, int repetitions) {
  if (n < 1) {
    throw domain_error("bench requires n >= 1, got " + std::to_string(n));
  }
  if (repetitions < 1) {
    throw domain_error("bench requires repetitions >= 1, got " +
                       std::to_string(repetitions));
  }
  const SumSpec spec{family, m, n};
  spec.validate();

  std::vector<double> closed_times, oracle_times;
  closed_times.reserve(repetitions);
  oracle_times.reserve(repetitions);
  bool values_equal = true;
  for (int rep = 0; rep < repetitions; ++rep) {
    ExactInt closed_value, oracle_value;
    closed_times.push_back(timed_ms([&] { closed_value = closed_form_sum(spec); }));
    oracle_times.push_back(
        timed_ms([&] { oracle_value = naive_power_sum(family, m, n); }));
    values_equal = values_equal && closed_value == oracle_value;
  }

  const double closed_ms = median(std::move(closed_times));
  const double oracle_ms = median(std::move(oracle_times));
  const double speedup = oracle_ms / std::max(closed_ms, 1e-9);
  return {family, m, n, closed_ms, oracle_ms, speedup, values_equal};
}

}  // namespace fibquart
