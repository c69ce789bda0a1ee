#pragma once

#include <cstdint>
#include <string>

#include "fibquart/errors.hpp"

namespace fibquart {

// Sequence subscript. Bounded to |i| <= 2^62 so composite subscripts such as
// 4mn+2m survive checked arithmetic without wrapping.
using Index = std::int64_t;

inline constexpr Index kIndexBound = Index{1} << 62;

inline Index checked_add(Index a, Index b) {
  Index r = 0;
  if (__builtin_add_overflow(a, b, &r) || r > kIndexBound || r < -kIndexBound) {
    throw index_overflow_error("subscript overflow: " + std::to_string(a) +
                               " + " + std::to_string(b));
  }
  return r;
}

inline Index checked_sub(Index a, Index b) {
  Index r = 0;
  if (__builtin_sub_overflow(a, b, &r) || r > kIndexBound || r < -kIndexBound) {
    throw index_overflow_error("subscript overflow: " + std::to_string(a) +
                               " - " + std::to_string(b));
  }
  return r;
}

inline Index checked_mul(Index a, Index b) {
  Index r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > kIndexBound || r < -kIndexBound) {
    throw index_overflow_error("subscript overflow: " + std::to_string(a) +
                               " * " + std::to_string(b));
  }
  return r;
}

// (-1)^i from the parity of i. Exponents such as m*n are reduced through the
// parities of the factors, never materialized as integers.
inline int parity_sign(Index i) noexcept { return i % 2 == 0 ? 1 : -1; }

inline int parity_sign_product(Index a, Index b) noexcept {
  return (a % 2 != 0 && b % 2 != 0) ? -1 : 1;
}

}  // namespace fibquart
