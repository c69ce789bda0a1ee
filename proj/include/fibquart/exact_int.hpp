#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace fibquart {

/// Arbitrary-precision signed integer: exact, no rounding, no modulus.
///
/// Multiplications and checked divisions between two ExactInt values bump a
/// thread-local operation counter (big_op_count) so logarithmic-work claims
/// are measurable. Additions and small-scalar scaling are linear-time and
/// deliberately uncounted.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(long value) : v_(value) {}
  explicit ExactInt(const std::string& decimal);

  ExactInt& operator+=(const ExactInt& rhs);
  ExactInt& operator-=(const ExactInt& rhs);
  ExactInt& operator*=(const ExactInt& rhs);  // counted
  ExactInt operator-() const;

  friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ExactInt operator*(const ExactInt& lhs, const ExactInt& rhs);  // counted

  // Small-scalar scaling, not counted.
  friend ExactInt operator*(const ExactInt& lhs, long rhs);
  friend ExactInt operator*(long lhs, const ExactInt& rhs) { return rhs * lhs; }

  /// Quotient of an exactly divisible pair; a nonzero remainder throws
  /// inexact_division_error naming `site`. Counted.
  ExactInt div_exact(const ExactInt& divisor, std::string_view site) const;

  bool is_zero() const noexcept { return mpz_sgn(v_.get_mpz_t()) == 0; }
  int sign() const noexcept { return mpz_sgn(v_.get_mpz_t()); }

  friend bool operator==(const ExactInt& lhs, const ExactInt& rhs) {
    return mpz_cmp(lhs.v_.get_mpz_t(), rhs.v_.get_mpz_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactInt& lhs, const ExactInt& rhs) {
    const int c = mpz_cmp(lhs.v_.get_mpz_t(), rhs.v_.get_mpz_t());
    return c <=> 0;
  }

  /// Exact decimal representation with optional leading minus.
  std::string str() const { return v_.get_str(); }

  const mpz_class& raw() const noexcept { return v_; }

 private:
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& value);

/// Thread-local count of counted big-integer operations since the last reset.
std::uint64_t big_op_count() noexcept;
void reset_big_op_count() noexcept;

}  // namespace fibquart
