#include "fibquart/kernel.hpp"

#include <bit>
#include <cstdint>

#include "fibquart/errors.hpp"

namespace fibquart {
namespace {

std::uint64_t magnitude(Index n) {
  if (n > kIndexBound || n < -kIndexBound) {
    throw index_overflow_error("subscript out of range: " + std::to_string(n));
  }
  return n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

// Doubling step, three multiplications per bit of n:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
FibPair pair_at(std::uint64_t n) {
  ExactInt a(0), b(1);  // (F_0, F_1)
  if (n == 0) return {std::move(a), std::move(b)};
  for (int i = std::bit_width(n) - 1; i >= 0; --i) {
    ExactInt even = a * (b * 2 - a);
    ExactInt odd = a * a + b * b;
    if ((n >> i) & 1u) {
      a = std::move(odd);
      b = even + a;
    } else {
      a = std::move(even);
      b = std::move(odd);
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

FibPair fib_pair(Index n) {
  const std::uint64_t p = magnitude(n);
  FibPair pos = pair_at(p);
  if (n >= 0) return pos;
  // F_{-p} = (-1)^{p-1} F_p and F_{-p+1} = (-1)^p F_{p-1} with F_{p-1} = F_{p+1} - F_p.
  const bool p_odd = (p & 1u) != 0;
  ExactInt f_prev = pos.f_n1 - pos.f_n;
  return {p_odd ? std::move(pos.f_n) : -pos.f_n,
          p_odd ? -f_prev : std::move(f_prev)};
}

ExactInt fib(Index n) { return fib_pair(n).f_n; }

ExactInt lucas(Index n) { return fib_lucas(n).second; }

std::pair<ExactInt, ExactInt> fib_lucas(Index n) {
  FibPair pair = fib_pair(n);
  ExactInt l = pair.f_n1 * 2 - pair.f_n;
  return {std::move(pair.f_n), std::move(l)};
}

}  // namespace fibquart
