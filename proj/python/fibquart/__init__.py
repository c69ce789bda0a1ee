"""Exact fourth-power sums of Fibonacci and Lucas numbers.

Closed-form evaluation in logarithmic time, a direct-summation oracle, the
identity inventory behind the closed forms, and a grid-based equivalence
checker. All values are exact Python ints.
"""

from ._core import (
    DomainError,
    IdentityId,
    IdentityInstance,
    InternalError,
    SumFamily,
    __version__,
    alt_fib_fourth_sum,
    alt_lucas_fourth_sum,
    convention_sum,
    eval_identity,
    fib,
    fib_fourth_sum,
    fib_lucas,
    fourth_sum_m1,
    lucas,
    lucas_even_sum_sign_km,
    lucas_even_sum_sign_mk,
    lucas_fourth_sum,
    naive_power_sum,
    run_grid,
)

__all__ = [
    "DomainError",
    "IdentityId",
    "IdentityInstance",
    "InternalError",
    "SumFamily",
    "__version__",
    "alt_fib_fourth_sum",
    "alt_lucas_fourth_sum",
    "convention_sum",
    "eval_identity",
    "fib",
    "fib_fourth_sum",
    "fib_lucas",
    "fourth_sum_m1",
    "lucas",
    "lucas_even_sum_sign_km",
    "lucas_even_sum_sign_mk",
    "lucas_fourth_sum",
    "naive_power_sum",
    "run_grid",
]
