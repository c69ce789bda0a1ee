// Acceptance suite: one self-contained check per shipped guarantee, one
// PASS/FAIL line each. Exits nonzero if any check fails.
//
// Usage: fibquart_acceptance [criterion numbers...]
// The CLI binary is located via the FIBQUART_CLI environment variable when
// set, otherwise the build-time path of the fibquart target.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fibquart/bench.hpp"
#include "fibquart/closed_form.hpp"
#include "fibquart/errors.hpp"
#include "fibquart/identities.hpp"
#include "fibquart/kernel.hpp"
#include "fibquart/oracle.hpp"
#include "fibquart/verify.hpp"
#include "support/reference_sequences.hpp"
#include "support/run_command.hpp"

namespace {

using fibquart::ExactInt;
using fibquart::Index;
using fibquart::SumFamily;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& reason) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += reason;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string cli_path() {
  if (const char* env = std::getenv("FIBQUART_CLI")) return env;
  return FIBQUART_CLI_PATH;
}

// 1. fib/lucas match recurrence iteration with the sign rules on [-500, 500],
//    in under one second.
Outcome kernel_correctness() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto table = fibquart::testing::reference_table(500);
  for (Index n = -500; n <= 500; ++n) {
    if (!(fibquart::fib(n) == table.f.at(n)) ||
        !(fibquart::lucas(n) == table.l.at(n))) {
      out.fail("value mismatch at n = " + std::to_string(n));
      break;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) out.fail("took " + std::to_string(elapsed) + " s (budget 1 s)");
  out.detail += "2002 values, " + std::to_string(elapsed) + " s";
  return out;
}

// 2. All nine identities hold exactly for every argument in [-30, 30]
//    (two-argument identities over the full square), in under ten seconds.
Outcome identity_sweep() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t cases = 0;
  auto check = [&](fibquart::IdentityId id, const std::vector<Index>& args) {
    ++cases;
    if (out.pass && !fibquart::eval_identity(id, args).holds()) {
      std::ostringstream msg;
      msg << std::string(fibquart::identity_name(id)) << " fails at (";
      for (std::size_t i = 0; i < args.size(); ++i) {
        msg << (i ? ", " : "") << args[i];
      }
      msg << ")";
      out.fail(msg.str());
    }
  };
  for (fibquart::IdentityId id : fibquart::kAllIdentities) {
    if (fibquart::identity_arity(id) == 2) {
      for (Index u = -30; u <= 30; ++u) {
        for (Index v = -30; v <= 30; ++v) check(id, {u, v});
      }
    } else {
      for (Index u = -30; u <= 30; ++u) check(id, {u});
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) out.fail("took " + std::to_string(elapsed) + " s (budget 10 s)");
  out.detail += std::to_string(cases) + " instances, " + std::to_string(elapsed) + " s";
  return out;
}

// 3. Closed form equals naive summation for every family, m in [-6, 6]
//    (m != 0 where required), n in [0, 12]; zero mismatches, under 30 s.
Outcome theorem_oracle_equivalence() {
  Outcome out;
  fibquart::GridSpec spec;  // defaults are exactly this grid
  const fibquart::VerifyReport report = fibquart::run_grid(spec);
  const std::uint64_t expected_cases = (12 + 12 + 13 + 13) * 13;
  if (!report.mismatches.empty()) {
    out.fail(std::to_string(report.mismatches.size()) + " mismatches");
  }
  if (!report.divisibility_failures.empty()) {
    out.fail(std::to_string(report.divisibility_failures.size()) +
             " divisibility failures");
  }
  if (report.cases_run != expected_cases) {
    out.fail("expected " + std::to_string(expected_cases) + " cases, ran " +
             std::to_string(report.cases_run));
  }
  if (report.elapsed_ms >= 30000.0) {
    out.fail("took " + std::to_string(report.elapsed_ms) + " ms (budget 30 s)");
  }
  out.detail += std::to_string(report.cases_run) + " cases, " +
                std::to_string(report.elapsed_ms) + " ms";
  return out;
}

// 4. The factored m = 1 forms agree with the general evaluators for
//    n in [0, 200], and the hand-derived anchors hold.
Outcome factored_form_coherence() {
  Outcome out;
  for (SumFamily family : fibquart::kAllFamilies) {
    for (Index n = 0; n <= 200; ++n) {
      if (!(fibquart::fourth_sum_m1(family, n) ==
            fibquart::closed_form_sum({family, 1, n}))) {
        out.fail(std::string(fibquart::family_name(family)) +
                 " diverges from the general form at n = " + std::to_string(n));
        break;
      }
    }
  }

  const ExactInt fib4_3 = fibquart::fib_fourth_sum(1, 3);
  if (!(fib4_3 == ExactInt(18)) ||
      !(fib4_3 == fibquart::naive_power_sum(SumFamily::FibFourth, 1, 3))) {
    out.fail("sum of F_k^4, n = 3, is not 18");
  }
  // 25 * 18 = F_7 L_2 L_5 + 21 = 450
  const ExactInt factored = fibquart::fib(7) * fibquart::lucas(2) * fibquart::lucas(5) +
                            ExactInt(21);
  if (!(factored == ExactInt(450)) || !(fib4_3 * 25 == factored)) {
    out.fail("F_7 L_2 L_5 + 21 != 450");
  }
  const ExactInt lucas4_2 = fibquart::lucas_fourth_sum(1, 2);
  if (!(lucas4_2 == ExactInt(82)) ||
      !(lucas4_2 == fibquart::naive_power_sum(SumFamily::LucasFourth, 1, 2))) {
    out.fail("sum of L_k^4, n = 2, is not 82");
  }
  const ExactInt alt_fib = fibquart::alt_fib_fourth_sum(1, 3);
  const ExactInt alt_fib_factored =
      (fibquart::fib(3) * fibquart::fib(4) * fibquart::fib(1) * fibquart::fib(6))
          .div_exact(ExactInt(3), "3");
  if (!(alt_fib == ExactInt(16)) || !(alt_fib == alt_fib_factored) ||
      !(alt_fib == fibquart::naive_power_sum(SumFamily::AltFibFourth, 1, 3))) {
    out.fail("alternating F^4 at n = 3 is not 16 = F_3 F_4 F_1 F_6 / 3");
  }
  const ExactInt alt_lucas = fibquart::alt_lucas_fourth_sum(1, 1);
  if (!(alt_lucas == ExactInt(-15)) ||
      !(alt_lucas == fibquart::naive_power_sum(SumFamily::AltLucasFourth, 1, 1))) {
    out.fail("alternating L^4 at n = 1 is not -15");
  }
  out.detail += "4 families x n in [0, 200] plus anchors";
  return out;
}

// 5. Every checked exact division on the criterion-3 grid (and the factored
//    m = 1 forms, and the first-order sums) leaves zero remainder.
Outcome divisibility_suite() {
  Outcome out;
  std::uint64_t divisions_checked = 0;
  auto probe = [&](const std::function<ExactInt()>& eval, const std::string& where) {
    try {
      (void)eval();
      ++divisions_checked;
    } catch (const fibquart::inexact_division_error& e) {
      out.fail(where + ": " + e.what());
    }
  };
  for (SumFamily family : fibquart::kAllFamilies) {
    for (Index m = -6; m <= 6; ++m) {
      if (m == 0 && fibquart::family_requires_nonzero_m(family)) continue;
      for (Index n = 0; n <= 12; ++n) {
        probe([&] { return fibquart::closed_form_sum({family, m, n}); },
              std::string(fibquart::family_name(family)) + "(" + std::to_string(m) +
                  ", " + std::to_string(n) + ")");
      }
    }
  }
  for (SumFamily family : fibquart::kAllFamilies) {
    for (Index n = 0; n <= 200; ++n) {
      probe([&] { return fibquart::fourth_sum_m1(family, n); },
            "m1 form " + std::string(fibquart::family_name(family)) + " at n = " +
                std::to_string(n));
    }
  }
  for (Index m = -6; m <= 6; ++m) {
    for (Index n = 0; n <= 12; ++n) {
      if (m != 0) {
        probe([&] { return fibquart::lucas_even_sum_sign_mk(m, n); },
              "first-order mk sum");
      }
      probe([&] { return fibquart::lucas_even_sum_sign_km(m, n); },
            "first-order km sum");
    }
  }
  out.detail += std::to_string(divisions_checked) + " evaluations with exact divisions";
  return out;
}

// 6. Both telescoping assertions hold on the full stated grid.
Outcome telescoping_lemmas() {
  Outcome out;
  std::uint64_t cases = 0;
  for (int kind = 0; kind <= 1 && out.pass; ++kind) {
    for (Index stride = 1; stride <= 4; ++stride) {
      for (Index offset = -4; offset <= 4; ++offset) {
        const fibquart::SequenceSpec seq{
            kind == 0 ? fibquart::SequenceKind::FibShifted
                      : fibquart::SequenceKind::LucasShifted,
            stride, offset};
        for (Index m = 1; m <= 10; ++m) {
          for (Index n = 1; n <= 10; ++n) {
            for (bool alternating : {false, true}) {
              ++cases;
              try {
                (void)fibquart::telescoping_sum(seq, m, n, alternating);
              } catch (const fibquart::internal_error& e) {
                out.fail(std::string("collapse failed: ") + e.what());
              }
            }
          }
        }
      }
    }
  }
  out.detail += std::to_string(cases) + " telescoping cases";
  return out;
}

// 7. Speedup >= 20x at (fib4, m=3, n=10000); closed form at n = 10^6 under
//    one second; big-op count below 200 regardless of n up to 10^6.
Outcome performance() {
  Outcome out;
  const fibquart::BenchResult b = fibquart::bench(SumFamily::FibFourth, 3, 10000, 3);
  if (!b.values_equal) out.fail("bench values differ");
  if (b.speedup < 20.0) {
    out.fail("speedup " + std::to_string(b.speedup) + "x below 20x");
  }

  const auto start = std::chrono::steady_clock::now();
  const fibquart::EvalResult big =
      fibquart::evaluate({SumFamily::FibFourth, 3, 1000000}, fibquart::Method::ClosedForm);
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    out.fail("closed form at n = 10^6 took " + std::to_string(elapsed) + " s");
  }
  if (big.value.is_zero()) out.fail("implausible zero sum at n = 10^6");

  for (SumFamily family : fibquart::kAllFamilies) {
    for (Index n : {Index{10}, Index{12345}, Index{1000000}}) {
      const fibquart::EvalResult r =
          fibquart::evaluate({family, 3, n}, fibquart::Method::ClosedForm);
      if (r.big_op_count >= 200) {
        out.fail(std::string(fibquart::family_name(family)) + " at n = " +
                 std::to_string(n) + " used " + std::to_string(r.big_op_count) +
                 " big ops");
      }
    }
  }
  std::ostringstream detail;
  detail << "speedup " << b.speedup << "x, n=10^6 in " << elapsed << " s";
  out.detail += detail.str();
  return out;
}

// 8. The CLI contract: stated outputs and exit codes, bit-exact.
Outcome cli_contract() {
  Outcome out;
  const std::string cli = cli_path();
  using fibquart::testing::run_command;

  const auto first = run_command(cli + " eval --family fib4 --m 1 --n 3 2>/dev/null");
  if (first.exit_code != 0 || first.output != "18\n") {
    out.fail("eval fib4 1 3: got exit " + std::to_string(first.exit_code) +
             ", output '" + first.output + "'");
  }
  const auto second =
      run_command(cli + " eval --family altlucas4 --m 1 --n 1 2>/dev/null");
  if (second.exit_code != 0 || second.output != "-15\n") {
    out.fail("eval altlucas4 1 1: got exit " + std::to_string(second.exit_code) +
             ", output '" + second.output + "'");
  }
  const auto third =
      run_command(cli + " eval --family fib4 --m 0 --n 5 2>&1 1>/dev/null");
  if (third.exit_code != 2) {
    out.fail("eval fib4 m=0: expected exit 2, got " +
             std::to_string(third.exit_code));
  }
  if (third.output.find("nonzero m") == std::string::npos) {
    out.fail("m = 0 diagnostic does not name the nonzero-m requirement");
  }
  out.detail += "3 invocations against " + cli;
  return out;
}

struct Criterion {
  int number;
  std::string label;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "kernel correctness", kernel_correctness},
      {2, "identity sweep", identity_sweep},
      {3, "closed form vs oracle grid", theorem_oracle_equivalence},
      {4, "factored m=1 coherence", factored_form_coherence},
      {5, "divisibility suite", divisibility_suite},
      {6, "telescoping lemmas", telescoping_lemmas},
      {7, "performance", performance},
      {8, "CLI contract", cli_contract},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!selected.empty() && !selected.count(criterion.number)) continue;
    const Outcome outcome = criterion.run();
    std::cout << "criterion " << criterion.number << " (" << criterion.label
              << "): " << (outcome.pass ? "PASS" : "FAIL");
    if (!outcome.detail.empty()) std::cout << " - " << outcome.detail;
    std::cout << std::endl;
    if (!outcome.pass) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  return 0;
}
