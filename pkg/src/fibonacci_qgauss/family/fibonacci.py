"""The Fibonacci q-Gauss family F_n^[q^j] as weighted diagonal sums of the q-triangle.

F_0 = 0 and F_(n+1) = sum_(k=0..n/2) binom(n-k, k)_q * w(j, k), where the weight
w(j, k) is q^(jk) under SHIFTED and q^(j(k-1)) under LITERAL.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache

from fibonacci_qgauss.arith import LaurentPoly
from fibonacci_qgauss.combinatorics import qbinom_rec
from fibonacci_qgauss.errors import DomainError


class Convention(StrEnum):
    """Reading of the family weight (q^j)^(k-1)."""

    SHIFTED = "shifted"  # q^(jk), nonnegative exponents
    LITERAL = "literal"  # q^(j(k-1)), carries q^-j at k = 0


def _check_indices(n: int, j: int) -> None:
    if n < 0 or j < 0:
        raise DomainError(f"Family index and level must be >= 0, got n={n}, j={j}")


@lru_cache(maxsize=None)
def fib_q(n: int, j: int, conv: Convention = Convention.SHIFTED) -> LaurentPoly:
    """F_n^[q^j] under the given convention; F_0 = 0."""
    _check_indices(n, j)
    conv = Convention(conv)
    if n == 0:
        return LaurentPoly.zero()
    m = n - 1
    offset = 0 if conv is Convention.SHIFTED else -j
    return sum(
        (qbinom_rec(m - k, k).shift(j * k + offset) for k in range(m // 2 + 1)),
        LaurentPoly.zero(),
    )


def fib_q_tail(n: int, j: int) -> LaurentPoly:
    """sum_(k=1..n) binom(n-k, k-1)_q (q^j)^(k-1), the second summation form.

    Its weight exponent runs from 0, so it reproduces the SHIFTED family.
    """
    _check_indices(n, j)
    return sum(
        (qbinom_rec(n - k, k - 1).shift(j * (k - 1)) for k in range(1, n + 1)),
        LaurentPoly.zero(),
    )


def fib_q_eval(
    n: int, j: int, q0: int, conv: Convention = Convention.SHIFTED
) -> Fraction:
    """Exact value of F_n^[q^j] at an integer q0 >= 1."""
    if q0 < 1:
        raise DomainError(f"Family evaluation needs q >= 1, got {q0}")
    return fib_q(n, j, conv).evaluate(q0)


@dataclass(frozen=True)
class FamilyTable:
    """F_n^[q^j] for n <= n_max, j <= j_max under one convention."""

    convention: Convention
    n_max: int
    j_max: int
    entries: Mapping[tuple[int, int], LaurentPoly]

    def entry(self, n: int, j: int) -> LaurentPoly:
        return self.entries[n, j]

    def column(self, j: int) -> list[LaurentPoly]:
        """The sequence F_0..F_n_max at level j."""
        return [self.entries[n, j] for n in range(self.n_max + 1)]


def family_table(
    n_max: int, j_max: int, conv: Convention = Convention.SHIFTED
) -> FamilyTable:
    """All F_n^[q^j] with n <= n_max and j <= j_max, computed once."""
    _check_indices(n_max, j_max)
    conv = Convention(conv)
    entries = {
        (n, j): fib_q(n, j, conv) for n in range(n_max + 1) for j in range(j_max + 1)
    }
    return FamilyTable(convention=conv, n_max=n_max, j_max=j_max, entries=entries)
