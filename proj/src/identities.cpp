#include "fibquart/identities.hpp"

#include <string>

#include "fibquart/errors.hpp"
#include "fibquart/kernel.hpp"

namespace fibquart {

int identity_arity(IdentityId id) noexcept {
  switch (id) {
    case IdentityId::FibAddSub:
    case IdentityId::LucasAddAdd:
    case IdentityId::LucasAddSub5F:
      return 2;
    default:
      return 1;
  }
}

std::string_view identity_name(IdentityId id) noexcept {
  switch (id) {
    case IdentityId::FibAddSub: return "FibAddSub";
    case IdentityId::LucasAddAdd: return "LucasAddAdd";
    case IdentityId::LucasAddSub5F: return "LucasAddSub5F";
    case IdentityId::FibSquare: return "FibSquare";
    case IdentityId::LucasSquare: return "LucasSquare";
    case IdentityId::FibDouble: return "FibDouble";
    case IdentityId::FibFourthExpansion: return "FibFourthExpansion";
    case IdentityId::LucasFourthExpansion: return "LucasFourthExpansion";
    case IdentityId::LucasProductShift: return "LucasProductShift";
  }
  return "?";
}

std::optional<IdentityId> identity_from_name(std::string_view name) noexcept {
  for (IdentityId id : kAllIdentities) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

IdentityInstance eval_identity(IdentityId id, std::span<const Index> args) {
  const int arity = identity_arity(id);
  if (static_cast<int>(args.size()) != arity) {
    throw domain_error("identity " + std::string(identity_name(id)) + " takes " +
                       std::to_string(arity) + " argument(s), got " +
                       std::to_string(args.size()));
  }

  IdentityInstance inst{id, {args.begin(), args.end()}, ExactInt(0), ExactInt(0)};
  switch (id) {
    case IdentityId::FibAddSub: {
      const Index u = args[0], v = args[1];
      inst.lhs = fib(checked_add(u, v)) - parity_sign(v) * fib(checked_sub(u, v));
      inst.rhs = fib(v) * lucas(u);
      break;
    }
    case IdentityId::LucasAddAdd: {
      const Index u = args[0], v = args[1];
      inst.lhs = lucas(checked_add(u, v)) + parity_sign(v) * lucas(checked_sub(u, v));
      inst.rhs = lucas(v) * lucas(u);
      break;
    }
    case IdentityId::LucasAddSub5F: {
      const Index u = args[0], v = args[1];
      inst.lhs = lucas(checked_add(u, v)) - parity_sign(v) * lucas(checked_sub(u, v));
      inst.rhs = 5 * (fib(v) * fib(u));
      break;
    }
    case IdentityId::FibSquare: {
      const Index u = args[0];
      const ExactInt f = fib(u);
      inst.lhs = 5 * (f * f);
      inst.rhs = lucas(checked_mul(2, u)) - ExactInt(2 * parity_sign(u));
      break;
    }
    case IdentityId::LucasSquare: {
      const Index v = args[0];
      const ExactInt l = lucas(v);
      inst.lhs = l * l;
      inst.rhs = lucas(checked_mul(2, v)) + ExactInt(2 * parity_sign(v));
      break;
    }
    case IdentityId::FibDouble: {
      const Index u = args[0];
      inst.lhs = fib(checked_mul(2, u));
      inst.rhs = fib(u) * lucas(u);
      break;
    }
    case IdentityId::FibFourthExpansion: {
      const Index w = args[0];
      const ExactInt f = fib(w);
      const ExactInt f2 = f * f;
      inst.lhs = 25 * (f2 * f2);
      // (-1)^{w-1} = -(-1)^w
      inst.rhs = lucas(checked_mul(4, w)) +
                 (-parity_sign(w) * 4) * lucas(checked_mul(2, w)) + ExactInt(6);
      break;
    }
    case IdentityId::LucasFourthExpansion: {
      const Index w = args[0];
      const ExactInt l = lucas(w);
      const ExactInt l2 = l * l;
      inst.lhs = l2 * l2;
      inst.rhs = lucas(checked_mul(4, w)) -
                 (-parity_sign(w) * 4) * lucas(checked_mul(2, w)) + ExactInt(6);
      break;
    }
    case IdentityId::LucasProductShift: {
      const Index n = args[0];
      inst.lhs = lucas(n) * lucas(checked_add(n, 1));
      inst.rhs = lucas(checked_add(checked_mul(2, n), 1)) + ExactInt(parity_sign(n));
      break;
    }
  }
  return inst;
}

}  // namespace fibquart
