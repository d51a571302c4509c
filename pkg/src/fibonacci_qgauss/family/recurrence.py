"""Candidate recurrences for the family, checked as exact identities in q.

UNWEIGHTED:         F_(n+2)^[j] = F_(n+1)^[j+1] + F_n^[j]
SHIFTED_CORRECTED:  F_(n+2)^[j] = F_(n+1)^[j+1] + q^j F_n^[j]
LITERAL_CORRECTED:  F_(n+2)^[j] = q F_(n+1)^[j+1] + F_n^[j]

Seeds are never taken from a printed initial condition; every value comes
from the summation definition in fib_q.
"""

import logging
from enum import StrEnum

from fibonacci_qgauss.arith import LaurentPoly
from fibonacci_qgauss.errors import DomainError
from fibonacci_qgauss.family.fibonacci import Convention, fib_q
from fibonacci_qgauss.verification import (
    Adjudication,
    Checker,
    VariantOutcome,
    VerificationReport,
)

logger = logging.getLogger(__name__)


class RecurrenceVariant(StrEnum):
    UNWEIGHTED = "unweighted"
    SHIFTED_CORRECTED = "shifted-corrected"
    LITERAL_CORRECTED = "literal-corrected"


def recurrence_sides(
    variant: RecurrenceVariant, conv: Convention, n: int, j: int
) -> tuple[LaurentPoly, LaurentPoly]:
    """Left and right side of a variant at (n, j)."""
    lhs = fib_q(n + 2, j, conv)
    upper = fib_q(n + 1, j + 1, conv)
    lower = fib_q(n, j, conv)
    match RecurrenceVariant(variant):
        case RecurrenceVariant.UNWEIGHTED:
            rhs = upper + lower
        case RecurrenceVariant.SHIFTED_CORRECTED:
            rhs = upper + lower.shift(j)
        case RecurrenceVariant.LITERAL_CORRECTED:
            rhs = upper.shift(1) + lower
    return lhs, rhs


def _run_variant(
    variant: RecurrenceVariant,
    conv: Convention,
    n_max: int,
    j_max: int,
    q0: int | None,
) -> tuple[VerificationReport, dict[str, bool]]:
    if n_max < 2:
        raise DomainError(f"Recurrence check needs n_max >= 2, got {n_max}")
    if j_max < 0:
        raise DomainError(f"Recurrence check needs j_max >= 0, got {j_max}")
    variant, conv = RecurrenceVariant(variant), Convention(conv)

    suite = f"recurrence.{conv}.{variant}"
    if q0 is not None:
        suite += f"@q={q0}"
    checker = Checker(suite)
    levels = {f"j={j}": True for j in range(j_max + 1)}

    for n in range(n_max - 1):
        for j in range(j_max + 1):
            lhs, rhs = recurrence_sides(variant, conv, n, j)
            if q0 is not None:
                lhs, rhs = lhs.evaluate(q0), rhs.evaluate(q0)
            if not checker.check({"n": n, "j": j}, lhs, rhs):
                levels[f"j={j}"] = False
    return checker.report(), levels


def verify_recurrence(
    variant: RecurrenceVariant,
    conv: Convention,
    n_max: int,
    j_max: int,
    q0: int | None = None,
) -> VerificationReport:
    """Check a variant for 0 <= n <= n_max - 2 and 0 <= j <= j_max.

    With q0 given, both sides are compared after evaluation at q = q0.
    """
    report, _ = _run_variant(variant, conv, n_max, j_max, q0)
    return report


def adjudicate(conv: Convention, n_max: int, j_max: int) -> Adjudication:
    """Run all three variants under one convention and name the one that holds."""
    conv = Convention(conv)
    outcomes = []
    for variant in RecurrenceVariant:
        report, levels = _run_variant(variant, conv, n_max, j_max, None)
        outcomes.append(VariantOutcome(variant=variant.value, levels=levels, report=report))

    holding = [o.variant for o in outcomes if o.report.holds]
    exhibited = all(o.report.holds or o.report.first_counterexample is not None for o in outcomes)
    verdict = holding[0] if len(holding) == 1 else None
    logger.info("Recurrence verdict under %s: %s", conv, verdict)
    return Adjudication(
        convention=conv.value,
        verdict=verdict,
        definitive=len(holding) <= 1 and exhibited,
        variants=outcomes,
    )
