"""The Gaussian polynomial basis phi_k(x) = (x - 1)(x - q)...(x - q^(k-1)).

x^n expands in this basis with Gaussian binomial connection constants, and the
basis obeys the dual recurrence x phi_k = q^k phi_k + phi_(k+1).
"""

import logging
from functools import lru_cache

from fibonacci_qgauss.arith import LaurentPoly, XPoly
from fibonacci_qgauss.combinatorics import Boundary, get_table
from fibonacci_qgauss.errors import DomainError, NonzeroResidualError
from fibonacci_qgauss.verification import Checker, VerificationReport

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def phi(k: int) -> XPoly:
    """Monic degree-k basis polynomial; phi(0) = 1."""
    if k < 0:
        raise DomainError(f"phi needs k >= 0, got {k}")
    if k == 0:
        return XPoly.one()
    return phi(k - 1) * XPoly([LaurentPoly.monomial(k - 1, -1), 1])


def check_dual_recurrence(k_max: int) -> VerificationReport:
    """Check x phi_k(x) = q^k phi_k(x) + phi_(k+1)(x) for 0 <= k <= k_max.

    The recurrence is usually quoted for k >= 1 together with phi_(-1) = 0;
    k = 0 holds as well under phi_0 = 1, and phi_(-1) never arises here.
    """
    if k_max < 0:
        raise DomainError(f"k_max must be >= 0, got {k_max}")
    checker = Checker("basis.dual-recurrence")
    x = XPoly.x()
    for k in range(k_max + 1):
        lhs = x * phi(k)
        rhs = LaurentPoly.monomial(k) * phi(k) + phi(k + 1)
        checker.check({"k": k}, lhs, rhs)
    return checker.report()


def expand_monomial(n: int) -> list[LaurentPoly]:
    """Coefficients c_(n,k), k = 0..n, with x^n = sum_k c_(n,k) phi_k(x).

    Top-down back-substitution: phi_k is monic of degree k, so the x^k
    coefficient of what is left is c_(n,k).

    Raises:
        NonzeroResidualError: If anything remains after peeling phi_0.
    """
    if n < 0:
        raise DomainError(f"expand_monomial needs n >= 0, got {n}")
    residual = XPoly.monomial(n)
    coefficients = [LaurentPoly.zero()] * (n + 1)
    for k in range(n, -1, -1):
        c = residual.coefficient(k)
        coefficients[k] = c
        if not c.is_zero:
            residual = residual - phi(k) * c
    if not residual.is_zero:
        raise NonzeroResidualError(f"x^{n} leaves residual {residual}")
    return coefficients


def verify_expansion(
    n_max: int, boundary: Boundary = Boundary.STANDARD
) -> VerificationReport:
    """Compare expand_monomial(n)[k] with the recurrence table for n <= n_max."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    suite = "basis.expansion" if boundary is Boundary.STANDARD else "basis.expansion-literal"
    checker = Checker(suite)
    table = get_table(boundary)
    for n in range(n_max + 1):
        expansion = expand_monomial(n)
        for k in range(n + 1):
            checker.check({"n": n, "k": k}, expansion[k], table.entry(n, k))
    report = checker.report()
    logger.info("%s: %d checked, holds=%s", suite, report.checked, report.holds)
    return report


def reconstruct_monomial(n: int) -> XPoly:
    """sum_k expand_monomial(n)[k] * phi(k); equals x^n."""
    total = XPoly.zero()
    for k, c in enumerate(expand_monomial(n)):
        total = total + phi(k) * c
    return total
