#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "fibquart/index.hpp"

namespace fibquart {

// The four target sums: Σ F_{mk}^4, Σ L_{mk}^4 and their alternating
// versions with term sign (-1)^{k-1}.
enum class SumFamily {
  FibFourth,       // Σ_{k=1..n} F_{mk}^4
  LucasFourth,     // Σ_{k=1..n} L_{mk}^4
  AltFibFourth,    // Σ_{k=1..n} (-1)^{k-1} F_{mk}^4
  AltLucasFourth,  // Σ_{k=l(n)..n} (-1)^{k-1} L_{mk}^4, l(n) = (1+(-1)^n)/2
};

inline constexpr std::array<SumFamily, 4> kAllFamilies = {
    SumFamily::FibFourth,
    SumFamily::LucasFourth,
    SumFamily::AltFibFourth,
    SumFamily::AltLucasFourth,
};

std::string_view family_name(SumFamily family) noexcept;
std::optional<SumFamily> family_from_name(std::string_view name) noexcept;

inline bool family_alternating(SumFamily family) noexcept {
  return family == SumFamily::AltFibFourth || family == SumFamily::AltLucasFourth;
}

inline bool family_uses_lucas(SumFamily family) noexcept {
  return family == SumFamily::LucasFourth || family == SumFamily::AltLucasFourth;
}

// The non-alternating closed forms divide by F_{2m}, which vanishes at m = 0.
inline bool family_requires_nonzero_m(SumFamily family) noexcept {
  return family == SumFamily::FibFourth || family == SumFamily::LucasFourth;
}

// Lower summation limit: 1 for every family except the alternating Lucas sum,
// which starts at k = 0 when n is odd (contributing -L_0^4 = -16).
inline Index family_lower_limit(SumFamily family, Index n) noexcept {
  if (family == SumFamily::AltLucasFourth && n % 2 != 0) return 0;
  return 1;
}

}  // namespace fibquart
