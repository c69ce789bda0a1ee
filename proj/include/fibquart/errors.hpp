#pragma once

#include <stdexcept>
#include <string>

namespace fibquart {

// Argument outside an operation's mathematical domain (m = 0 where a closed
// form divides by F(2m), n < 0, bad identity arity, ...). CLI exit code 2.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Subscript arithmetic (m*k, 2mn+m, 4mn+2m) left the |i| <= 2^62 window.
class index_overflow_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// An internal exactness assertion failed. Never expected on valid input;
// signals a bug in sign or divisibility handling. CLI exit code 1.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A division the closed forms guarantee exact left a nonzero remainder.
// `site` names the divisor, e.g. "F(2m)" or "25".
class inexact_division_error : public internal_error {
 public:
  inexact_division_error(std::string site, const std::string& detail)
      : internal_error("inexact division at " + site + ": " + detail),
        site_(std::move(site)) {}

  const std::string& site() const noexcept { return site_; }

 private:
  std::string site_;
};

}  // namespace fibquart
