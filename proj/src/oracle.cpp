#include "fibquart/oracle.hpp"

#include <string>
#include <utility>

#include "fibquart/errors.hpp"
#include "fibquart/kernel.hpp"

namespace fibquart {

namespace {

ExactInt fourth_power(const ExactInt& x) {
  ExactInt sq = x * x;
  return sq * sq;
}

}  // namespace

void SequenceSpec::validate() const {
  if (stride == 0) {
    throw domain_error("sequence stride must be nonzero");
  }
}

ExactInt SequenceSpec::at(Index k) const {
  const Index idx = checked_add(checked_mul(stride, k), offset);
  return kind == SequenceKind::FibShifted ? fib(idx) : lucas(idx);
}

ExactInt naive_power_sum(SumFamily family, Index m, Index n) {
  if (n < 0) {
    throw domain_error("naive summation requires n >= 0, got " + std::to_string(n));
  }
  const bool use_lucas = family_uses_lucas(family);
  const bool alternating = family_alternating(family);

  ExactInt total(0);
  if (family_lower_limit(family, n) == 0) {
    total -= ExactInt(16);  // k = 0 term: (-1)^{0-1} L_0^4
  }
  if (n == 0) return total;

  auto [f_m, l_m] = fib_lucas(m);
  const int sm = parity_sign(m);
  // Window (F_{m(k-1)}, L_{m(k-1)}), (F_{mk}, L_{mk}); one step of the
  // addition identities per k:
  //   F_{mk+m} = F_m L_{mk} + (-1)^m F_{mk-m}
  //   L_{mk+m} = L_m L_{mk} - (-1)^m L_{mk-m}
  ExactInt f_prev(0), l_prev(2);
  ExactInt f_cur = f_m, l_cur = l_m;
  for (Index k = 1; k <= n; ++k) {
    ExactInt term = fourth_power(use_lucas ? l_cur : f_cur);
    if (alternating && k % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
    if (k < n) {
      ExactInt f_next = f_m * l_cur + sm * f_prev;
      ExactInt l_next = l_m * l_cur - sm * l_prev;
      f_prev = std::move(f_cur);
      f_cur = std::move(f_next);
      l_prev = std::move(l_cur);
      l_cur = std::move(l_next);
    }
  }
  return total;
}

ExactInt telescoping_sum(const SequenceSpec& seq, Index m, Index n, bool alternating) {
  seq.validate();
  if (m < 1 || n < 1) {
    throw domain_error("telescoping sums require m >= 1 and n >= 1");
  }

  ExactInt total(0);
  for (Index k = 1; k <= n; ++k) {
    const Index a = checked_mul(m, k);
    const ExactInt f_a = seq.at(a);
    const ExactInt f_b = seq.at(checked_add(a, m));
    if (!alternating) {
      total += f_b - f_a;
    } else if (k % 2 != 0) {
      total += f_b + f_a;
    } else {
      total -= f_b + f_a;
    }
  }

  const ExactInt boundary = seq.at(checked_add(checked_mul(m, n), m));
  const ExactInt collapsed =
      alternating ? ExactInt(-parity_sign(n)) * boundary + seq.at(m)
                  : boundary - seq.at(m);
  if (!(total == collapsed)) {
    throw internal_error("telescoping collapse mismatch: sum " + total.str() +
                         " vs " + collapsed.str());
  }
  return total;
}

ExactInt convention_sum(SumFamily family, Index m, Index n) {
  const Index lower = family_lower_limit(family, n);
  if (n >= lower) return naive_power_sum(family, m, n);

  // Σ_{k=l}^{n} := -Σ_{k=n+1}^{l-1}. Small by construction; evaluates terms
  // through the kernel directly.
  const bool use_lucas = family_uses_lucas(family);
  const bool alternating = family_alternating(family);
  ExactInt total(0);
  for (Index k = checked_add(n, 1); k <= lower - 1; ++k) {
    const Index idx = checked_mul(m, k);
    ExactInt term = fourth_power(use_lucas ? lucas(idx) : fib(idx));
    if (alternating && k % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return -total;
}

}  // namespace fibquart
