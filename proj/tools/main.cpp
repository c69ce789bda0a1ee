#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibquart/bench.hpp"
#include "fibquart/closed_form.hpp"
#include "fibquart/errors.hpp"
#include "fibquart/identities.hpp"
#include "fibquart/oracle.hpp"
#include "fibquart/verify.hpp"

namespace {

using fibquart::Index;
using nlohmann::json;

// Exit codes: 0 success, 1 verification mismatch, 2 usage/domain error.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

fibquart::SumFamily parse_family(const std::string& name) {
  if (auto family = fibquart::family_from_name(name)) return *family;
  throw fibquart::domain_error(
      "unknown family '" + name + "' (expected fib4, lucas4, altfib4 or altlucas4)");
}

json report_to_json(const fibquart::VerifyReport& report) {
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back(
        {{"case", m.label}, {"args", m.args}, {"closed", m.closed}, {"oracle", m.oracle}});
  }
  json failures = json::array();
  for (const auto& f : report.divisibility_failures) {
    failures.push_back({{"site", f.site}, {"case", f.label}, {"args", f.args}});
  }
  return {{"cases_run", report.cases_run},
          {"mismatches", mismatches},
          {"divisibility_failures", failures},
          {"elapsed_ms", report.elapsed_ms},
          {"success", report.success()}};
}

struct EvalOptions {
  std::string family;
  Index m = 0;
  Index n = 0;
  std::string method = "closed";
  bool as_json = false;
  bool negative_n_experiment = false;
};

int run_eval(const EvalOptions& opt) {
  const fibquart::SumFamily family = parse_family(opt.family);

  if (opt.negative_n_experiment) {
    const fibquart::ExactInt closed =
        fibquart::closed_form_sum_formal(family, opt.m, opt.n);
    const fibquart::ExactInt convention =
        fibquart::convention_sum(family, opt.m, opt.n);
    const bool agree = closed == convention;
    if (opt.as_json) {
      json record = {{"family", opt.family}, {"m", opt.m},
                     {"n", opt.n},           {"closed", closed.str()},
                     {"convention", convention.str()}, {"agree", agree}};
      std::cout << record.dump() << "\n";
    } else {
      std::cout << "closed = " << closed << "\n"
                << "convention = " << convention << "\n"
                << "agree = " << (agree ? "yes" : "no") << "\n";
    }
    return kOk;  // experimental report, no correctness claim
  }

  fibquart::Method method = fibquart::Method::ClosedForm;
  if (opt.method == "oracle") {
    method = fibquart::Method::Oracle;
  } else if (opt.method != "closed") {
    throw fibquart::domain_error("unknown method '" + opt.method +
                                 "' (expected closed or oracle)");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const fibquart::EvalResult result =
      fibquart::evaluate({family, opt.m, opt.n}, method);
  const double elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
  if (opt.as_json) {
    json record = {{"family", opt.family},
                   {"m", opt.m},
                   {"n", opt.n},
                   {"value", result.value.str()},
                   {"method", std::string(fibquart::method_name(method))},
                   {"elapsed_ms", elapsed_ms}};
    std::cout << record.dump() << "\n";
  } else {
    std::cout << result.value << "\n";
  }
  return kOk;
}

struct IdentityOptions {
  std::string id;
  std::vector<Index> args;
  bool as_json = false;
};

int run_identity(const IdentityOptions& opt) {
  const auto id = fibquart::identity_from_name(opt.id);
  if (!id) {
    std::string names;
    for (fibquart::IdentityId candidate : fibquart::kAllIdentities) {
      names += names.empty() ? "" : ", ";
      names += fibquart::identity_name(candidate);
    }
    throw fibquart::domain_error("unknown identity '" + opt.id + "' (expected one of " +
                                 names + ")");
  }
  const fibquart::IdentityInstance inst = fibquart::eval_identity(*id, opt.args);
  if (opt.as_json) {
    json record = {{"id", opt.id},
                   {"args", inst.args},
                   {"lhs", inst.lhs.str()},
                   {"rhs", inst.rhs.str()},
                   {"holds", inst.holds()}};
    std::cout << record.dump() << "\n";
  } else {
    std::cout << opt.id << "(";
    for (std::size_t i = 0; i < inst.args.size(); ++i) {
      std::cout << (i ? ", " : "") << inst.args[i];
    }
    std::cout << "): lhs = " << inst.lhs << ", rhs = " << inst.rhs << ", "
              << (inst.holds() ? "equal" : "MISMATCH") << "\n";
  }
  return inst.holds() ? kOk : kMismatch;
}

struct VerifyOptions {
  Index m_min = -6;
  Index m_max = 6;
  Index n_max = 12;
  std::vector<std::string> families;
  bool with_identities = false;
  Index identity_bound = 30;
  bool as_json = false;
};

int run_verify(const VerifyOptions& opt) {
  fibquart::GridSpec spec;
  spec.m_min = opt.m_min;
  spec.m_max = opt.m_max;
  spec.n_max = opt.n_max;
  if (!opt.families.empty()) {
    spec.families.clear();
    for (const std::string& name : opt.families) {
      spec.families.push_back(parse_family(name));
    }
  }
  spec.include_identities = opt.with_identities;
  if (opt.identity_bound < 0) {
    throw fibquart::domain_error("identity bound must be >= 0");
  }
  spec.identity_min = -opt.identity_bound;
  spec.identity_max = opt.identity_bound;

  const fibquart::VerifyReport report = fibquart::run_grid(spec);
  if (opt.as_json) {
    std::cout << report_to_json(report).dump() << "\n";
  } else {
    std::cout << "cases run: " << report.cases_run << "\n";
    std::cout << "mismatches: " << report.mismatches.size() << "\n";
    for (const auto& m : report.mismatches) {
      std::cout << "  " << m.label << " args=[";
      for (std::size_t i = 0; i < m.args.size(); ++i) {
        std::cout << (i ? ", " : "") << m.args[i];
      }
      std::cout << "] closed=" << m.closed << " oracle=" << m.oracle << "\n";
    }
    std::cout << "divisibility failures: " << report.divisibility_failures.size()
              << "\n";
    for (const auto& f : report.divisibility_failures) {
      std::cout << "  " << f.label << " site=" << f.site << " args=[";
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        std::cout << (i ? ", " : "") << f.args[i];
      }
      std::cout << "]\n";
    }
    std::cout << "elapsed: " << report.elapsed_ms << " ms\n";
    std::cout << (report.success() ? "ok" : "FAILED") << "\n";
  }
  return report.success() ? kOk : kMismatch;
}

struct BenchOptions {
  std::string family;
  Index m = 0;
  Index n = 0;
  int reps = 3;
  bool as_json = false;
};

int run_bench(const BenchOptions& opt) {
  const fibquart::BenchResult result =
      fibquart::bench(parse_family(opt.family), opt.m, opt.n, opt.reps);
  if (!result.values_equal) {
    std::cerr << "error: closed form and oracle disagree for family "
              << opt.family << " m=" << opt.m << " n=" << opt.n
              << "; refusing to report timings\n";
    return kMismatch;
  }
  if (opt.as_json) {
    json record = {{"family", opt.family},
                   {"m", result.m},
                   {"n", result.n},
                   {"closed_ms", result.closed_ms},
                   {"oracle_ms", result.oracle_ms},
                   {"speedup", result.speedup},
                   {"values_equal", result.values_equal}};
    std::cout << record.dump() << "\n";
  } else {
    std::cout << "family=" << opt.family << " m=" << result.m << " n=" << result.n
              << " reps=" << opt.reps << "\n";
    std::cout << "closed median: " << result.closed_ms << " ms\n";
    std::cout << "oracle median: " << result.oracle_ms << " ms\n";
    std::cout << "speedup: " << result.speedup << "x\n";
    std::cout << "values equal: yes\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fourth-power sums of Fibonacci and Lucas numbers"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Evaluate one sum (closed form or oracle)");
  eval_cmd->add_option("--family", eval_opt.family, "fib4|lucas4|altfib4|altlucas4")
      ->required();
  eval_cmd->add_option("--m", eval_opt.m, "index multiplier m")->required();
  eval_cmd->add_option("--n", eval_opt.n, "number of terms n")->required();
  eval_cmd->add_option("--method", eval_opt.method, "closed|oracle (default closed)");
  eval_cmd->add_flag("--json", eval_opt.as_json, "emit one JSON record");
  eval_cmd->add_flag(
      "--experimental-negative-n", eval_opt.negative_n_experiment,
      "evaluate the closed form verbatim (n may be negative) and compare "
      "against the reversed-sum convention; reports agreement, no claim");

  IdentityOptions id_opt;
  CLI::App* id_cmd = app.add_subcommand("identity", "Evaluate both sides of an identity");
  id_cmd->add_option("--id", id_opt.id, "identity tag, e.g. FibAddSub")->required();
  id_cmd->add_option("--args", id_opt.args, "argument list, comma separated")
      ->required()
      ->delimiter(',');
  id_cmd->add_flag("--json", id_opt.as_json, "emit one JSON record");

  VerifyOptions verify_opt;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the closed-form vs oracle grid");
  verify_cmd->add_option("--m-min", verify_opt.m_min, "smallest m (default -6)");
  verify_cmd->add_option("--m-max", verify_opt.m_max, "largest m (default 6)");
  verify_cmd->add_option("--n-max", verify_opt.n_max, "largest n (default 12)");
  verify_cmd->add_option("--families", verify_opt.families,
                         "subset of fib4,lucas4,altfib4,altlucas4 (default all)")
      ->delimiter(',');
  verify_cmd->add_flag("--with-identities", verify_opt.with_identities,
                       "also sweep the identity inventory");
  verify_cmd->add_option("--identity-bound", verify_opt.identity_bound,
                         "identity arguments range over [-B, B] (default 30)");
  verify_cmd->add_flag("--json", verify_opt.as_json, "emit the report as JSON");

  BenchOptions bench_opt;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Time closed form vs oracle for one sum");
  bench_cmd->add_option("--family", bench_opt.family, "fib4|lucas4|altfib4|altlucas4")
      ->required();
  bench_cmd->add_option("--m", bench_opt.m, "index multiplier m")->required();
  bench_cmd->add_option("--n", bench_opt.n, "number of terms n")->required();
  bench_cmd->add_option("--reps", bench_opt.reps, "repetitions (default 3)");
  bench_cmd->add_flag("--json", bench_opt.as_json, "emit one JSON record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval_opt);
    if (*id_cmd) return run_identity(id_opt);
    if (*verify_cmd) return run_verify(verify_opt);
    if (*bench_cmd) return run_bench(bench_opt);
  } catch (const fibquart::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
