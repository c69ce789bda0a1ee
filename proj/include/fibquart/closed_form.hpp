#pragma once

#include <cstdint>

#include "fibquart/exact_int.hpp"
#include "fibquart/index.hpp"
#include "fibquart/sum_family.hpp"

namespace fibquart {

enum class Method { ClosedForm, Oracle };

std::string_view method_name(Method method) noexcept;

/// One sum to evaluate: family plus the two subscript parameters.
struct SumSpec {
  SumFamily family;
  Index m;
  Index n;

  /// Throws domain_error if m = 0 where the family's closed form divides by
  /// F(2m), or if n < 0.
  void validate() const;
};

struct EvalResult {
  SumSpec spec;
  ExactInt value;
  Method method;
  std::uint64_t big_op_count;
};

// First-order sums over even-indexed Lucas numbers. Both collapse to one
// sequence value per boundary, so they evaluate in O(log(|m| n)) work.

/// Σ_{k=1..n} (-1)^{mk-1} L_{2mk}, via (-1)^{mn-1} F_{mn} L_{mn+m} / F_m.
/// Requires m != 0 (the division is by F_m) and n >= 0.
ExactInt lucas_even_sum_sign_mk(Index m, Index n);

/// Σ_{k=1..n} (-1)^{k(m-1)} L_{2mk}, via ((-1)^{n(m-1)} L_{2mn+m} - L_m) / L_m.
/// Requires n >= 0.
ExactInt lucas_even_sum_sign_km(Index m, Index n);

// The four fourth-power sums in closed form. Every division is checked to be
// exact; a nonzero remainder throws inexact_division_error (a bug signal,
// never expected on the valid domain).

/// Σ_{k=1..n} F_{mk}^4. Requires m != 0 and n >= 0.
ExactInt fib_fourth_sum(Index m, Index n);

/// Σ_{k=1..n} L_{mk}^4. Requires m != 0 and n >= 0.
ExactInt lucas_fourth_sum(Index m, Index n);

/// Σ_{k=1..n} (-1)^{k-1} F_{mk}^4. Any m (the divisor 5 L_m L_{2m} never
/// vanishes); requires n >= 0.
ExactInt alt_fib_fourth_sum(Index m, Index n);

/// Σ_{k=l(n)..n} (-1)^{k-1} L_{mk}^4 with l(n) = 1 for even n and 0 for odd n
/// (the k = 0 term is -L_0^4 = -16). Any m; requires n >= 0.
ExactInt alt_lucas_fourth_sum(Index m, Index n);

/// The factored m = 1 forms of the four sums. Must agree with the general
/// evaluators at m = 1. Requires n >= 0.
ExactInt fourth_sum_m1(SumFamily family, Index n);

/// Validated dispatch over the four families.
ExactInt closed_form_sum(const SumSpec& spec);

/// The closed-form expression evaluated verbatim without the n >= 0 check.
/// Experimental: for n < 0 the sums themselves are defined only by the
/// convention in oracle::convention_sum, and no equality is guaranteed.
ExactInt closed_form_sum_formal(SumFamily family, Index m, Index n);

/// Evaluates `spec` by either method with the big-op counter sampled around
/// the call.
EvalResult evaluate(const SumSpec& spec, Method method);

}  // namespace fibquart
