#pragma once

#include "fibquart/exact_int.hpp"
#include "fibquart/index.hpp"
#include "fibquart/sum_family.hpp"

namespace fibquart {

enum class SequenceKind { FibShifted, LucasShifted };

/// f(k) = F_{stride*k + offset} or L_{stride*k + offset}.
struct SequenceSpec {
  SequenceKind kind;
  Index stride;
  Index offset;

  void validate() const;  // stride != 0
  ExactInt at(Index k) const;
};

/// Ground truth by direct summation: iterates k from the family's lower limit
/// to n, advancing (F_{mk}, L_{mk}) incrementally from a single precomputed
/// (F_m, L_m) pair, O(n) big-integer operations. Requires n >= 0.
ExactInt naive_power_sum(SumFamily family, Index m, Index n);

/// Direct evaluation of the two telescoping identities for m, n >= 1:
///   non-alternating: Σ_{k=1..n} [f(mk+m) - f(mk)]        = f(mn+m) - f(m)
///   alternating:     Σ_{k=1..n} (-1)^{k-1}[f(mk+m)+f(mk)] = (-1)^{n-1}f(mn+m) + f(m)
/// Returns the left side and throws internal_error if the collapsed right
/// side disagrees.
ExactInt telescoping_sum(const SequenceSpec& seq, Index m, Index n, bool alternating);

/// The family sum extended to all integer n by the reversed-sum convention
/// Σ_{k=l}^{n} := -Σ_{k=n+1}^{l-1} when n < l. Equals naive_power_sum on
/// n >= 0. Backs the negative-n experiment; carries no correctness claim for
/// the closed forms there.
ExactInt convention_sum(SumFamily family, Index m, Index n);

}  // namespace fibquart
