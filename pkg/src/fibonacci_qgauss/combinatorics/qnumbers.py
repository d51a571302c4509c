"""q-integers, q-factorials, q-falling factorials and the product-formula q-binomial."""

from functools import reduce
from operator import mul

from fibonacci_qgauss.arith import LaurentPoly
from fibonacci_qgauss.errors import DomainError


def q_integer(n: int) -> LaurentPoly:
    """Return n_q = 1 + q + ... + q^(n-1); zero for n = 0."""
    if n < 0:
        raise DomainError(f"q_integer needs n >= 0, got {n}")
    return LaurentPoly.from_coefficients([1] * n)


def q_factorial(n: int) -> LaurentPoly:
    """Return n_q! = 1_q 2_q ... n_q, with 0_q! = 1_q! = 1."""
    if n < 0:
        raise DomainError(f"q_factorial needs n >= 0, got {n}")
    return reduce(mul, (q_integer(i) for i in range(1, n + 1)), LaurentPoly.one())


def q_falling(n: int, k: int) -> LaurentPoly:
    """Return n_q (n-1)_q ... (n-k+1)_q; the empty product (k = 0) is 1."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"q_falling needs 0 <= k <= n, got n={n}, k={k}")
    return reduce(mul, (q_integer(n - i) for i in range(k)), LaurentPoly.one())


def qbinom_product(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial as the exact quotient q_falling(n, k) / q_factorial(k).

    Zero for k outside [0, n]. Independent of the recurrence tables, so it
    serves as their oracle.
    """
    if n < 0:
        raise DomainError(f"qbinom_product needs n >= 0, got {n}")
    if k < 0 or k > n:
        return LaurentPoly.zero()
    return q_falling(n, k).exact_div(q_factorial(k))
