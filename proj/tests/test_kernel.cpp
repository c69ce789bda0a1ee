#include "doctest.h"

#include "fibquart/errors.hpp"
#include "fibquart/kernel.hpp"
#include "support/reference_sequences.hpp"

namespace {

using fibquart::ExactInt;
using fibquart::Index;

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("base values and spot checks") {
  CHECK(fibquart::fib(0) == ExactInt(0));
  CHECK(fibquart::fib(1) == ExactInt(1));
  CHECK(fibquart::fib(10) == ExactInt(55));
  CHECK(fibquart::fib(-3) == ExactInt(2));
  CHECK(fibquart::lucas(0) == ExactInt(2));
  CHECK(fibquart::lucas(1) == ExactInt(1));
  CHECK(fibquart::lucas(6) == ExactInt(18));
  CHECK(fibquart::lucas(-1) == ExactInt(-1));

  auto [f1, l1] = fibquart::fib_lucas(1);
  CHECK(f1 == ExactInt(1));
  CHECK(l1 == ExactInt(1));
  auto [f7, l7] = fibquart::fib_lucas(7);
  CHECK(f7 == ExactInt(13));
  CHECK(l7 == ExactInt(29));
  auto [fm4, lm4] = fibquart::fib_lucas(-4);
  CHECK(fm4 == ExactInt(-3));
  CHECK(lm4 == ExactInt(7));
}

TEST_CASE("matches recurrence iteration on [-500, 500]") {
  const auto table = fibquart::testing::reference_table(500);
  for (Index n = -500; n <= 500; ++n) {
    CAPTURE(n);
    REQUIRE(fibquart::fib(n) == table.f.at(n));
    REQUIRE(fibquart::lucas(n) == table.l.at(n));
  }
}

TEST_CASE("recurrence, joint retrieval and bridge on [-64, 64]") {
  for (Index n = -64; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(fibquart::fib(n + 1) == fibquart::fib(n) + fibquart::fib(n - 1));
    CHECK(fibquart::lucas(n + 1) == fibquart::lucas(n) + fibquart::lucas(n - 1));
    auto [f, l] = fibquart::fib_lucas(n);
    CHECK(f == fibquart::fib(n));
    CHECK(l == fibquart::lucas(n));
    CHECK(l == fibquart::fib(n - 1) + fibquart::fib(n + 1));
  }
}

TEST_CASE("pair invariant F_{n+1}^2 - F_{n+1} F_n - F_n^2 = (-1)^n") {
  for (Index n = -32; n <= 32; ++n) {
    CAPTURE(n);
    const fibquart::FibPair p = fibquart::fib_pair(n);
    const ExactInt cassini = p.f_n1 * p.f_n1 - p.f_n1 * p.f_n - p.f_n * p.f_n;
    CHECK(cassini == ExactInt(fibquart::parity_sign(n)));
  }
}

TEST_CASE("doubling keeps the multiplication count logarithmic") {
  fibquart::reset_big_op_count();
  const ExactInt f = fibquart::fib(1000000);
  const std::uint64_t ops = fibquart::big_op_count();
  CHECK(!f.is_zero());
  CHECK(ops > 0);
  CHECK(ops < 100);
}

TEST_CASE("subscripts beyond the index bound are rejected") {
  CHECK_THROWS_AS((void)fibquart::fib(fibquart::kIndexBound + 1),
                  fibquart::index_overflow_error);
  CHECK_THROWS_AS((void)fibquart::lucas(-(fibquart::kIndexBound + 1)),
                  fibquart::index_overflow_error);
  CHECK_THROWS_AS(fibquart::checked_mul(fibquart::kIndexBound, 4),
                  fibquart::index_overflow_error);
}

}  // TEST_SUITE
