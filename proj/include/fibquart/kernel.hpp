#pragma once

#include <utility>

#include "fibquart/exact_int.hpp"
#include "fibquart/index.hpp"

namespace fibquart {

/// Adjacent Fibonacci pair (F_n, F_{n+1}), the carrier of the doubling step.
/// Satisfies f_n1^2 - f_n1*f_n - f_n^2 = (-1)^n for the pair's index n.
struct FibPair {
  ExactInt f_n;
  ExactInt f_n1;
};

/// (F_n, F_{n+1}) for any signed n, in O(log|n|) multiplications.
FibPair fib_pair(Index n);

/// F_n for any signed n; negative subscripts via F_{-n} = (-1)^{n-1} F_n.
ExactInt fib(Index n);

/// L_n for any signed n; negative subscripts via L_{-n} = (-1)^n L_n.
ExactInt lucas(Index n);

/// (F_n, L_n) from a single doubling chain; L_n = 2 F_{n+1} - F_n.
std::pair<ExactInt, ExactInt> fib_lucas(Index n);

}  // namespace fibquart
