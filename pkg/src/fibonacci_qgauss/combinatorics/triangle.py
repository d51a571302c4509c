"""The q-Gauss Pascal triangle built from the Pascal-type recurrence.

binom(n+1, k)_q = binom(n, k-1)_q + q^k binom(n, k)_q
"""

import logging
import threading
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from fibonacci_qgauss.arith import LaurentPoly
from fibonacci_qgauss.errors import DomainError

logger = logging.getLogger(__name__)


class Boundary(StrEnum):
    """Left boundary of the recurrence.

    STANDARD: binom(n, 0) = 1 for every n.
    LITERAL: binom(0, 0) = 1 but binom(k, 0) = 0 for k > 0. Under it the
    expansion x^n = sum binom(n,k) phi_k already fails at n = 1.
    """

    STANDARD = "standard"
    LITERAL = "literal"


class QBinomialTable:
    """Memoized rows of the recurrence for one boundary.

    Rows are grown on demand under a lock, so one table can be shared between
    threads; cache size is bounded by the largest row requested.
    """

    def __init__(self, boundary: Boundary = Boundary.STANDARD) -> None:
        self.boundary = boundary
        self._rows: list[tuple[LaurentPoly, ...]] = [(LaurentPoly.one(),)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[LaurentPoly, ...]:
        if n < 0:
            raise DomainError(f"Row index must be >= 0, got {n}")
        with self._lock:
            if len(self._rows) <= n:
                logger.debug("Growing %s table to row %d", self.boundary, n)
            while len(self._rows) <= n:
                self._rows.append(self._next_row(self._rows[-1]))
            return self._rows[n]

    def entry(self, n: int, k: int) -> LaurentPoly:
        """binom(n, k)_q; zero for k outside [0, n]."""
        if k < 0 or k > n:
            if n < 0:
                raise DomainError(f"Row index must be >= 0, got {n}")
            return LaurentPoly.zero()
        return self.row(n)[k]

    def _next_row(self, prev: tuple[LaurentPoly, ...]) -> tuple[LaurentPoly, ...]:
        size = len(prev)
        if self.boundary is Boundary.STANDARD:
            entries = [LaurentPoly.one()]
        else:
            entries = [LaurentPoly.zero()]
        for k in range(1, size + 1):
            right = prev[k] if k < size else LaurentPoly.zero()
            entries.append(prev[k - 1] + right.shift(k))
        return tuple(entries)


_tables = {boundary: QBinomialTable(boundary) for boundary in Boundary}


def get_table(boundary: Boundary = Boundary.STANDARD) -> QBinomialTable:
    """Shared memo table for a boundary."""
    return _tables[boundary]


def qbinom_rec(n: int, k: int, boundary: Boundary = Boundary.STANDARD) -> LaurentPoly:
    """Gaussian binomial from the recurrence; zero for k outside [0, n]."""
    if n < 0:
        raise DomainError(f"qbinom_rec needs n >= 0, got {n}")
    return get_table(boundary).entry(n, k)


@dataclass(frozen=True)
class QBinomTriangle:
    """Rows 0..N of the q-Gauss Pascal triangle."""

    rows: tuple[tuple[LaurentPoly, ...], ...]
    boundary: Boundary = Boundary.STANDARD

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> LaurentPoly:
        if k < 0 or k > n:
            return LaurentPoly.zero()
        return self.rows[n][k]

    def diagonal_sums(self) -> list[LaurentPoly]:
        """sum_k binom(n-k, k)_q for every row n of the triangle."""
        return [
            sum((self.entry(n - k, k) for k in range(n // 2 + 1)), LaurentPoly.zero())
            for n in range(self.size)
        ]

    def evaluate(self, q0: int) -> list[list[int]]:
        """Entrywise integer values at q = q0."""
        return [[to_int(entry.evaluate(q0)) for entry in row] for row in self.rows]


def build_triangle(n_max: int, boundary: Boundary = Boundary.STANDARD) -> QBinomTriangle:
    """Rows 0..n_max via the memoized recurrence."""
    if n_max < 0:
        raise DomainError(f"Triangle needs N >= 0, got {n_max}")
    table = get_table(boundary)
    return QBinomTriangle(
        rows=tuple(table.row(n) for n in range(n_max + 1)),
        boundary=boundary,
    )


def eval_triangle(n_max: int, q0: int) -> list[list[int]]:
    """Entrywise value of build_triangle(n_max) at an integer q0 >= 1."""
    if q0 < 1:
        raise DomainError(f"Triangle evaluation needs q >= 1, got {q0}")
    return build_triangle(n_max).evaluate(q0)


def to_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise DomainError(f"Expected an integer value, got {value}")
    return value.numerator
