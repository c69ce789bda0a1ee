#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fibquart/exact_int.hpp"
#include "fibquart/index.hpp"

namespace fibquart {

// The two-variable and single-variable identities the closed forms rest on.
// Two-argument tags take (u, v); single-argument tags take one subscript.
enum class IdentityId {
  FibAddSub,             // F_{u+v} - (-1)^v F_{u-v} = F_v L_u
  LucasAddAdd,           // L_{u+v} + (-1)^v L_{u-v} = L_v L_u
  LucasAddSub5F,         // L_{u+v} - (-1)^v L_{u-v} = 5 F_v F_u
  FibSquare,             // 5 F_u^2 = L_{2u} - (-1)^u 2
  LucasSquare,           // L_v^2 = L_{2v} + (-1)^v 2
  FibDouble,             // F_{2u} = F_u L_u
  FibFourthExpansion,    // 25 F_w^4 = L_{4w} + (-1)^{w-1} 4 L_{2w} + 6
  LucasFourthExpansion,  // L_w^4 = L_{4w} - (-1)^{w-1} 4 L_{2w} + 6
  LucasProductShift,     // L_n L_{n+1} = L_{2n+1} - (-1)^{n-1}
};

inline constexpr std::array<IdentityId, 9> kAllIdentities = {
    IdentityId::FibAddSub,          IdentityId::LucasAddAdd,
    IdentityId::LucasAddSub5F,      IdentityId::FibSquare,
    IdentityId::LucasSquare,        IdentityId::FibDouble,
    IdentityId::FibFourthExpansion, IdentityId::LucasFourthExpansion,
    IdentityId::LucasProductShift,
};

int identity_arity(IdentityId id) noexcept;
std::string_view identity_name(IdentityId id) noexcept;
std::optional<IdentityId> identity_from_name(std::string_view name) noexcept;

/// Both sides of one identity instance, evaluated exactly.
struct IdentityInstance {
  IdentityId id;
  std::vector<Index> args;
  ExactInt lhs;
  ExactInt rhs;

  bool holds() const { return lhs == rhs; }
};

/// Evaluates both sides of `id` at `args`. Arity mismatch throws domain_error.
IdentityInstance eval_identity(IdentityId id, std::span<const Index> args);

}  // namespace fibquart
