"""Brute-force counts of subspaces and complete flags of GF(p)^n.

A k-dimensional subspace has exactly one k x n generator matrix in reduced
row-echelon form, so enumerating RREF matrices (pivot columns, then free
entries right of each pivot outside pivot columns) lists every subspace once.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, product

from fibonacci_qgauss.combinatorics import q_factorial, qbinom_rec, to_int
from fibonacci_qgauss.errors import DomainError
from fibonacci_qgauss.galois.field import PrimeField
from fibonacci_qgauss.verification import Checker, VerificationReport

logger = logging.getLogger(__name__)

MAX_SUBSPACE_DIMENSION = 4
MAX_CHAIN_DIMENSION = 3
MAX_FIELD_SIZE = 5

Matrix = tuple[tuple[int, ...], ...]
Subspace = frozenset[tuple[int, ...]]


@dataclass(frozen=True)
class SubspaceCount:
    n: int
    k: int
    p: int
    count: int


def _field(p: int) -> PrimeField:
    field = PrimeField(p)
    if p > MAX_FIELD_SIZE:
        raise DomainError(f"Field size {p} exceeds the enumeration cap {MAX_FIELD_SIZE}")
    return field


def rref_matrices(field: PrimeField, n: int, k: int) -> Iterator[Matrix]:
    """All k x n matrices over the field in reduced row-echelon form with k pivots."""
    for pivots in combinations(range(n), k):
        free = [
            (row, col)
            for row, pivot in enumerate(pivots)
            for col in range(pivot + 1, n)
            if col not in pivots
        ]
        for values in product(field.elements, repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for row, pivot in enumerate(pivots):
                rows[row][pivot] = 1
            for (row, col), value in zip(free, values, strict=True):
                rows[row][col] = value
            yield tuple(tuple(r) for r in rows)


def row_space(field: PrimeField, matrix: Matrix, n: int) -> Subspace:
    """Every vector spanned by the rows of ``matrix``."""
    rows = list(matrix)
    return frozenset(
        field.combine(scalars, rows, n) for scalars in product(field.elements, repeat=len(rows))
    )


def subspaces(field: PrimeField, n: int, k: int) -> list[Subspace]:
    """Every k-dimensional subspace of field^n, each listed once."""
    return [row_space(field, m, n) for m in rref_matrices(field, n, k)]


def count_subspaces(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of GF(p)^n, by RREF enumeration."""
    field = _field(p)
    if not 0 <= k <= n:
        raise DomainError(f"Need 0 <= k <= n, got n={n}, k={k}")
    if n > MAX_SUBSPACE_DIMENSION:
        raise DomainError(f"Dimension {n} exceeds the enumeration cap {MAX_SUBSPACE_DIMENSION}")
    return sum(1 for _ in rref_matrices(field, n, k))


def count_maximal_chains(n: int, p: int) -> int:
    """Number of complete flags 0 = V_0 < V_1 < ... < V_n = GF(p)^n."""
    field = _field(p)
    if n < 0:
        raise DomainError(f"Dimension must be >= 0, got {n}")
    if n > MAX_CHAIN_DIMENSION:
        raise DomainError(f"Dimension {n} exceeds the chain enumeration cap {MAX_CHAIN_DIMENSION}")

    levels = [subspaces(field, n, d) for d in range(n + 1)]

    def extend(current: Subspace, d: int) -> int:
        if d == n:
            return 1
        return sum(extend(s, d + 1) for s in levels[d + 1] if current <= s)

    return extend(levels[0][0], 0)


def subspace_counts(n_max: int, primes: list[int]) -> list[SubspaceCount]:
    return [
        SubspaceCount(n=n, k=k, p=p, count=count_subspaces(n, k, p))
        for p in primes
        for n in range(n_max + 1)
        for k in range(n + 1)
    ]


def verify_lattice_counts(n_max: int, primes: list[int]) -> VerificationReport:
    """Subspace counts against binom(n,k)_q at q = p, flag counts against n_q! at q = p."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    checker = Checker("gf.lattice-counts")
    for item in subspace_counts(n_max, primes):
        expected = to_int(qbinom_rec(item.n, item.k).evaluate(item.p))
        checker.check(
            {"kind": "subspaces", "n": item.n, "k": item.k, "p": item.p}, item.count, expected
        )
    for p in primes:
        for n in range(min(n_max, MAX_CHAIN_DIMENSION) + 1):
            expected = to_int(q_factorial(n).evaluate(p))
            checker.check({"kind": "chains", "n": n, "p": p}, count_maximal_chains(n, p), expected)
    report = checker.report()
    logger.info("gf.lattice-counts: %d checked, holds=%s", report.checked, report.holds)
    return report


def check_rref_uniqueness(n_max: int, primes: list[int]) -> VerificationReport:
    """Distinct RREF matrices span distinct row spaces."""
    checker = Checker("gf.rref-uniqueness")
    for p in primes:
        field = _field(p)
        for n in range(min(n_max, MAX_CHAIN_DIMENSION) + 1):
            for k in range(n + 1):
                matrices = list(rref_matrices(field, n, k))
                spaces = {row_space(field, m, n) for m in matrices}
                checker.check({"n": n, "k": k, "p": p}, len(matrices), len(spaces))
    return checker.report()


def check_duality(n_max: int, primes: list[int]) -> VerificationReport:
    """k- and (n-k)-dimensional subspaces are equinumerous."""
    checker = Checker("gf.duality")
    for p in primes:
        for n in range(n_max + 1):
            for k in range(n + 1):
                checker.check(
                    {"n": n, "k": k, "p": p},
                    count_subspaces(n, k, p),
                    count_subspaces(n, n - k, p),
                )
    return checker.report()


def check_chain_factorization(n_max: int, primes: list[int]) -> VerificationReport:
    """Flag count equals the product over i of the number of lines in GF(p)^i."""
    checker = Checker("gf.chain-factorization")
    for p in primes:
        for n in range(min(n_max, MAX_CHAIN_DIMENSION) + 1):
            expected = 1
            for i in range(1, n + 1):
                expected *= count_subspaces(i, 1, p)
            checker.check({"n": n, "p": p}, count_maximal_chains(n, p), expected)
    return checker.report()
