#include "fibquart/closed_form.hpp"

#include <string>

#include "fibquart/errors.hpp"
#include "fibquart/kernel.hpp"
#include "fibquart/oracle.hpp"

namespace fibquart {

namespace {

void require_nonneg_n(Index n) {
  if (n < 0) {
    throw domain_error("n must be >= 0, got " + std::to_string(n));
  }
}

void require_nonzero_m(SumFamily family, Index m) {
  if (m == 0) {
    throw domain_error("family '" + std::string(family_name(family)) +
                       "' requires nonzero m: the closed form divides by F(2m), "
                       "which vanishes at m = 0");
  }
}

// (-1)^{n(m-1)}
int sign_n_m_minus_1(Index m, Index n) noexcept {
  return (n % 2 != 0 && m % 2 == 0) ? -1 : 1;
}

// Unvalidated cores, shared by the checked evaluators and the formal
// (negative-n) path.

ExactInt fib_fourth_core(Index m, Index n) {
  const Index t = checked_add(checked_mul(2, checked_mul(m, n)), m);  // 2mn+m
  auto [f_t, l_t] = fib_lucas(t);
  const ExactInt l_m = lucas(m);
  const ExactInt f_2m = fib(checked_mul(2, m));
  const int s = -parity_sign_product(m, n);  // (-1)^{mn-1}
  ExactInt scaled = (f_t * (l_t + (4 * s) * l_m)).div_exact(f_2m, "F(2m)");
  scaled += ExactInt(n) * 6 + ExactInt(3);
  return scaled.div_exact(ExactInt(25), "25");
}

ExactInt lucas_fourth_core(Index m, Index n) {
  const Index t = checked_add(checked_mul(2, checked_mul(m, n)), m);
  auto [f_t, l_t] = fib_lucas(t);
  const ExactInt l_m = lucas(m);
  const ExactInt f_2m = fib(checked_mul(2, m));
  const int s = parity_sign_product(m, n);  // (-1)^{mn}
  ExactInt sum = (f_t * (l_t + (4 * s) * l_m)).div_exact(f_2m, "F(2m)");
  sum += ExactInt(n) * 6 - ExactInt(5);
  return sum;
}

ExactInt alt_fib_fourth_core(Index m, Index n) {
  const Index mn = checked_mul(m, n);
  const Index mn_m = checked_add(mn, m);
  const auto [f_mn, l_mn] = fib_lucas(mn);
  const auto [f_mn_m, l_mn_m] = fib_lucas(mn_m);
  const ExactInt l_m = lucas(m);
  const ExactInt l_2m = lucas(checked_mul(2, m));
  const int s_a = -parity_sign(n);           // (-1)^{n-1}
  const int s_b = sign_n_m_minus_1(m, n);    // (-1)^{n(m-1)}
  const ExactInt brace = s_a * (l_m * l_mn * l_mn_m) + (4 * s_b) * l_2m;
  return (f_mn * f_mn_m * brace).div_exact(5 * (l_m * l_2m), "5*L(m)*L(2m)");
}

ExactInt alt_lucas_fourth_core(Index m, Index n) {
  const Index mn = checked_mul(m, n);
  const Index mn_m = checked_add(mn, m);
  const auto [f_mn, l_mn] = fib_lucas(mn);
  const auto [f_mn_m, l_mn_m] = fib_lucas(mn_m);
  const ExactInt l_m = lucas(m);
  const ExactInt l_2m = lucas(checked_mul(2, m));
  const int s_a = -parity_sign(n);              // (-1)^{n-1}
  const int s_b = parity_sign_product(n, m);    // (-1)^{nm}
  const ExactInt brace = l_m * l_mn * l_mn_m + (4 * s_b) * l_2m;
  return ((5 * s_a) * (f_mn * f_mn_m) * brace).div_exact(l_m * l_2m, "L(m)*L(2m)");
}

}  // namespace

std::string_view method_name(Method method) noexcept {
  return method == Method::ClosedForm ? "closed" : "oracle";
}

std::string_view family_name(SumFamily family) noexcept {
  switch (family) {
    case SumFamily::FibFourth: return "fib4";
    case SumFamily::LucasFourth: return "lucas4";
    case SumFamily::AltFibFourth: return "altfib4";
    case SumFamily::AltLucasFourth: return "altlucas4";
  }
  return "?";
}

std::optional<SumFamily> family_from_name(std::string_view name) noexcept {
  for (SumFamily family : kAllFamilies) {
    if (family_name(family) == name) return family;
  }
  return std::nullopt;
}

void SumSpec::validate() const {
  if (family_requires_nonzero_m(family)) require_nonzero_m(family, m);
  require_nonneg_n(n);
}

ExactInt lucas_even_sum_sign_mk(Index m, Index n) {
  if (m == 0) {
    throw domain_error("m must be nonzero: the collapsed form divides by F(m), "
                       "and F(0) = 0");
  }
  require_nonneg_n(n);
  const Index mn = checked_mul(m, n);
  const int s = -parity_sign_product(m, n);  // (-1)^{mn-1}
  const ExactInt num = s * (fib(mn) * lucas(checked_add(mn, m)));
  return num.div_exact(fib(m), "F(m)");
}

ExactInt lucas_even_sum_sign_km(Index m, Index n) {
  require_nonneg_n(n);
  const Index t = checked_add(checked_mul(2, checked_mul(m, n)), m);
  const ExactInt l_m = lucas(m);
  const ExactInt num = sign_n_m_minus_1(m, n) * lucas(t) - l_m;
  return num.div_exact(l_m, "L(m)");
}

ExactInt fib_fourth_sum(Index m, Index n) {
  require_nonzero_m(SumFamily::FibFourth, m);
  require_nonneg_n(n);
  return fib_fourth_core(m, n);
}

ExactInt lucas_fourth_sum(Index m, Index n) {
  require_nonzero_m(SumFamily::LucasFourth, m);
  require_nonneg_n(n);
  return lucas_fourth_core(m, n);
}

ExactInt alt_fib_fourth_sum(Index m, Index n) {
  require_nonneg_n(n);
  return alt_fib_fourth_core(m, n);
}

ExactInt alt_lucas_fourth_sum(Index m, Index n) {
  require_nonneg_n(n);
  return alt_lucas_fourth_core(m, n);
}

ExactInt fourth_sum_m1(SumFamily family, Index n) {
  require_nonneg_n(n);
  const int s_n = parity_sign(n);
  switch (family) {
    case SumFamily::FibFourth: {
      // (F_{2n+1} L_{n-1} L_{n+2} + 6n + 3) / 25
      ExactInt v = fib(checked_add(checked_mul(2, n), 1)) *
                   lucas(checked_sub(n, 1)) * lucas(checked_add(n, 2));
      v += ExactInt(n) * 6 + ExactInt(3);
      return v.div_exact(ExactInt(25), "25");
    }
    case SumFamily::LucasFourth: {
      // 5 F_{2n+1} F_{n-1} F_{n+2} + 6n - 5
      ExactInt v = 5 * (fib(checked_add(checked_mul(2, n), 1)) *
                        fib(checked_sub(n, 1)) * fib(checked_add(n, 2)));
      v += ExactInt(n) * 6 - ExactInt(5);
      return v;
    }
    case SumFamily::AltFibFourth: {
      // (-1)^{n-1} F_n F_{n+1} F_{n-2} F_{n+3} / 3
      ExactInt v = fib(n) * fib(checked_add(n, 1)) * fib(checked_sub(n, 2)) *
                   fib(checked_add(n, 3));
      return ((-s_n) * v).div_exact(ExactInt(3), "3");
    }
    case SumFamily::AltLucasFourth: {
      // (-1)^{n-1} (5/3) F_n F_{n+1} (L_{n-2} L_{n+3} + (-1)^n 2)
      ExactInt brace = lucas(checked_sub(n, 2)) * lucas(checked_add(n, 3)) +
                       ExactInt(2 * s_n);
      ExactInt v = fib(n) * fib(checked_add(n, 1)) * brace;
      return ((-s_n) * 5 * v).div_exact(ExactInt(3), "3");
    }
  }
  throw domain_error("unknown sum family");
}

ExactInt closed_form_sum(const SumSpec& spec) {
  spec.validate();
  return closed_form_sum_formal(spec.family, spec.m, spec.n);
}

ExactInt closed_form_sum_formal(SumFamily family, Index m, Index n) {
  if (family_requires_nonzero_m(family)) require_nonzero_m(family, m);
  switch (family) {
    case SumFamily::FibFourth: return fib_fourth_core(m, n);
    case SumFamily::LucasFourth: return lucas_fourth_core(m, n);
    case SumFamily::AltFibFourth: return alt_fib_fourth_core(m, n);
    case SumFamily::AltLucasFourth: return alt_lucas_fourth_core(m, n);
  }
  throw domain_error("unknown sum family");
}

EvalResult evaluate(const SumSpec& spec, Method method) {
  spec.validate();
  reset_big_op_count();
  ExactInt value = method == Method::ClosedForm
                       ? closed_form_sum(spec)
                       : naive_power_sum(spec.family, spec.m, spec.n);
  return {spec, std::move(value), method, big_op_count()};
}

}  // namespace fibquart
