#include "fibquart/exact_int.hpp"

#include <ostream>

#include "fibquart/errors.hpp"

namespace fibquart {

namespace {
thread_local std::uint64_t g_big_ops = 0;
}  // namespace

std::uint64_t big_op_count() noexcept { return g_big_ops; }
void reset_big_op_count() noexcept { g_big_ops = 0; }

ExactInt::ExactInt(const std::string& decimal) : v_(0) {
  if (mpz_set_str(v_.get_mpz_t(), decimal.c_str(), 10) != 0) {
    throw domain_error("not a decimal integer: '" + decimal + "'");
  }
}

ExactInt& ExactInt::operator+=(const ExactInt& rhs) {
  v_ += rhs.v_;
  return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& rhs) {
  v_ -= rhs.v_;
  return *this;
}

ExactInt& ExactInt::operator*=(const ExactInt& rhs) {
  ++g_big_ops;
  v_ *= rhs.v_;
  return *this;
}

ExactInt ExactInt::operator-() const { return ExactInt(mpz_class(-v_)); }

ExactInt operator*(const ExactInt& lhs, const ExactInt& rhs) {
  ++g_big_ops;
  return ExactInt(mpz_class(lhs.v_ * rhs.v_));
}

ExactInt operator*(const ExactInt& lhs, long rhs) {
  return ExactInt(mpz_class(lhs.v_ * rhs));
}

ExactInt ExactInt::div_exact(const ExactInt& divisor, std::string_view site) const {
  if (divisor.is_zero()) {
    throw inexact_division_error(std::string(site), "division by zero");
  }
  ++g_big_ops;
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_mpz_t(), divisor.v_.get_mpz_t());
  if (mpz_sgn(r.get_mpz_t()) != 0) {
    throw inexact_division_error(std::string(site),
                                 "remainder " + r.get_str() + " for " +
                                     v_.get_str() + " / " + divisor.v_.get_str());
  }
  return ExactInt(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const ExactInt& value) {
  return os << value.str();
}

}  // namespace fibquart
