#include "fibquart/verify.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "fibquart/closed_form.hpp"
#include "fibquart/errors.hpp"
#include "fibquart/oracle.hpp"

namespace fibquart {

void GridSpec::validate() const {
  if (m_min > m_max) {
    throw domain_error("empty m range: [" + std::to_string(m_min) + ", " +
                       std::to_string(m_max) + "]");
  }
  if (n_min > n_max) {
    throw domain_error("empty n range: [" + std::to_string(n_min) + ", " +
                       std::to_string(n_max) + "]");
  }
  if (n_min < 0) {
    throw domain_error("n range must start at 0 or above, got " +
                       std::to_string(n_min));
  }
  if (include_identities && identity_min > identity_max) {
    throw domain_error("empty identity argument range");
  }
}

VerifyReport run_grid(const GridSpec& spec, const ClosedValueHook& closed_hook) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;

  for (SumFamily family : spec.families) {
    const std::string label(family_name(family));
    for (Index m = spec.m_min; m <= spec.m_max; ++m) {
      if (m == 0 && family_requires_nonzero_m(family)) continue;
      for (Index n = spec.n_min; n <= spec.n_max; ++n) {
        ++report.cases_run;
        try {
          ExactInt closed = closed_form_sum({family, m, n});
          if (closed_hook) closed = closed_hook(closed);
          const ExactInt truth = naive_power_sum(family, m, n);
          if (!(closed == truth)) {
            report.mismatches.push_back({label, {m, n}, closed.str(), truth.str()});
          }
        } catch (const inexact_division_error& e) {
          report.divisibility_failures.push_back({e.site(), label, {m, n}});
        }
      }
    }
  }

  if (spec.include_identities) {
    for (IdentityId id : kAllIdentities) {
      const std::string label(identity_name(id));
      auto check = [&](std::span<const Index> args) {
        ++report.cases_run;
        const IdentityInstance inst = eval_identity(id, args);
        if (!inst.holds()) {
          report.mismatches.push_back(
              {label, inst.args, inst.lhs.str(), inst.rhs.str()});
        }
      };
      if (identity_arity(id) == 2) {
        for (Index u = spec.identity_min; u <= spec.identity_max; ++u) {
          for (Index v = spec.identity_min; v <= spec.identity_max; ++v) {
            const Index args[] = {u, v};
            check(args);
          }
        }
      } else {
        for (Index u = spec.identity_min; u <= spec.identity_max; ++u) {
          const Index args[] = {u};
          check(args);
        }
      }
    }
  }

  auto key_less = [](const auto& a, const auto& b) {
    return std::tie(a.label, a.args) < std::tie(b.label, b.args);
  };
  std::sort(report.mismatches.begin(), report.mismatches.end(), key_less);
  std::sort(report.divisibility_failures.begin(),
            report.divisibility_failures.end(), key_less);

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return report;
}

}  // namespace fibquart
