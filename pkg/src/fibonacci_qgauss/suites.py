"""Named verification suites run by `fibonacci-qgauss verify`."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, replace
from enum import StrEnum

from fibonacci_qgauss.arith import LaurentPoly, XPoly
from fibonacci_qgauss.basis import (
    check_dual_recurrence,
    phi,
    reconstruct_monomial,
    verify_expansion,
)
from fibonacci_qgauss.combinatorics import (
    Boundary,
    build_triangle,
    qbinom_product,
    qbinom_rec,
)
from fibonacci_qgauss.errors import DomainError
from fibonacci_qgauss.family import (
    Convention,
    RecurrenceVariant,
    adjudicate,
    fib_q,
    fib_q_tail,
    q1_series_check,
    rational_series,
    recurrence_sides,
    series_truncate,
    verify_recurrence,
)
from fibonacci_qgauss.galois import (
    MAX_SUBSPACE_DIMENSION,
    check_chain_factorization,
    check_duality,
    check_rref_uniqueness,
    verify_lattice_counts,
)
from fibonacci_qgauss.settings import Settings
from fibonacci_qgauss.verification import (
    Adjudication,
    Checker,
    VerificationReport,
    VerificationRun,
)

logger = logging.getLogger(__name__)


class Suite(StrEnum):
    QBINOM = "qbinom"
    BASIS = "basis"
    RECURRENCE = "recurrence"
    FAMILY = "family"
    GF = "gf"
    SERIES = "series"
    ALL = "all"


@dataclass(frozen=True)
class SuiteBounds:
    """Bounds for every suite; defaults live in Settings only."""

    qbinom_nmax: int
    basis_nmax: int
    recurrence_nmax: int
    recurrence_jmax: int
    family_nmax: int
    family_jmax: int
    gf_nmax: int
    gf_primes: tuple[int, ...]
    series_order: int
    series_lmax: int

    @classmethod
    def from_settings(cls, settings: Settings) -> SuiteBounds:
        return cls(
            qbinom_nmax=settings.qbinom_nmax,
            basis_nmax=settings.basis_nmax,
            recurrence_nmax=settings.recurrence_nmax,
            recurrence_jmax=settings.recurrence_jmax,
            family_nmax=settings.family_nmax,
            family_jmax=settings.family_jmax,
            gf_nmax=settings.gf_nmax,
            gf_primes=tuple(settings.gf_primes),
            series_order=settings.series_order,
            series_lmax=settings.series_lmax,
        )

    def override(
        self,
        suite: Suite,
        nmax: int | None = None,
        jmax: int | None = None,
        order: int | None = None,
        primes: list[int] | None = None,
    ) -> SuiteBounds:
        """Apply command-line bounds to the one suite they address."""
        changes: dict[str, object] = {}
        if nmax is not None:
            if suite not in (Suite.QBINOM, Suite.BASIS, Suite.RECURRENCE, Suite.FAMILY, Suite.GF):
                raise DomainError(f"--nmax does not apply to the {suite} suite")
            changes[f"{suite}_nmax"] = nmax
        if jmax is not None:
            if suite not in (Suite.RECURRENCE, Suite.FAMILY):
                raise DomainError(f"--jmax does not apply to the {suite} suite")
            changes[f"{suite}_jmax"] = jmax
        if order is not None:
            if suite is not Suite.SERIES:
                raise DomainError(f"--order does not apply to the {suite} suite")
            changes["series_order"] = order
        if primes:
            if suite is not Suite.GF:
                raise DomainError(f"--prime does not apply to the {suite} suite")
            changes["gf_primes"] = tuple(primes)
        return replace(self, **changes)


def pascal_rows(n_max: int) -> list[list[int]]:
    """Ordinary Pascal triangle from the integer recurrence."""
    rows = [[1]]
    for _ in range(n_max):
        prev = rows[-1]
        rows.append([1] + [a + b for a, b in zip(prev, prev[1:])] + [1])
    return rows


def qbinom_suite(n_max: int) -> list[VerificationReport]:
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    oracle = Checker("qbinom.oracle-equivalence")
    symmetry = Checker("qbinom.symmetry")
    pascal = Checker("qbinom.pascal-specialization")
    shape = Checker("qbinom.shape")
    integer_rows = pascal_rows(n_max)

    for n in range(n_max + 1):
        for k in range(n + 1):
            params = {"n": n, "k": k}
            entry = qbinom_rec(n, k)
            oracle.check(params, entry, qbinom_product(n, k))
            symmetry.check(params, entry, qbinom_rec(n, n - k))
            pascal.check(params, entry.evaluate(1), integer_rows[n][k])

            dense = entry.coefficients()
            ok = (
                entry.min_exponent == 0
                and entry.degree == k * (n - k)
                and all(c > 0 for c in dense)
                and entry.is_palindromic()
            )
            shape.expect(params, ok, entry, f"positive palindrome of degree {k * (n - k)}")

    return [oracle.report(), symmetry.report(), pascal.report(), shape.report()]


def basis_suite(n_max: int) -> list[VerificationReport]:
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    round_trip = Checker("basis.round-trip")
    phi_shape = Checker("basis.phi-shape")
    for n in range(n_max + 1):
        round_trip.check({"n": n}, reconstruct_monomial(n), XPoly.monomial(n))

        p = phi(n)
        constant = LaurentPoly.monomial(n * (n - 1) // 2, (-1) ** n)
        ok = p.degree == n and p.leading_coefficient == 1 and p.coefficient(0) == constant
        phi_shape.expect({"k": n}, ok, p, f"monic, degree {n}, constant term {constant}")

    # The literal boundary must break the expansion, and already at n = 1
    literal = verify_expansion(max(n_max, 1), Boundary.LITERAL)
    failure = literal.first_counterexample
    rejected = VerificationReport(
        suite="basis.literal-boundary-rejected",
        checked=literal.checked,
        holds=not literal.holds and failure is not None and failure.parameters.get("n") == 1,
        first_counterexample=failure,
    )

    return [
        check_dual_recurrence(n_max),
        verify_expansion(n_max),
        round_trip.report(),
        phi_shape.report(),
        rejected,
    ]


def recurrence_suite(
    n_max: int, j_max: int
) -> tuple[list[VerificationReport], list[Adjudication]]:
    adjudications = [adjudicate(conv, n_max, j_max) for conv in Convention]

    collapse = Checker("recurrence.q1-collapse")
    for conv in Convention:
        for variant in RecurrenceVariant:
            for n in range(n_max - 1):
                for j in range(j_max + 1):
                    lhs, rhs = recurrence_sides(variant, conv, n, j)
                    collapse.check(
                        {"convention": conv.value, "variant": variant.value, "n": n, "j": j},
                        lhs.evaluate(1),
                        rhs.evaluate(1),
                    )

    definitive = Checker("recurrence.definitive-verdict")
    for adjudication in adjudications:
        holding = [o.variant for o in adjudication.variants if o.report.holds]
        definitive.expect(
            {"convention": adjudication.convention},
            adjudication.definitive,
            ", ".join(holding) or "none",
            "at most one variant",
        )

    reports = [
        verify_recurrence(RecurrenceVariant.UNWEIGHTED, Convention.SHIFTED, n_max, 0),
        collapse.report(),
        definitive.report(),
    ]
    return reports, adjudications


def fibonacci_numbers(n_max: int) -> list[int]:
    """F_0..F_n_max as coefficients of x / (1 - x - x^2)."""
    return rational_series([0, 1], [1, -1, -1], n_max)


def family_suite(n_max: int, j_max: int) -> list[VerificationReport]:
    if n_max < 0 or j_max < 0:
        raise DomainError(f"Bounds must be >= 0, got n_max={n_max}, j_max={j_max}")
    fibonacci = fibonacci_numbers(n_max)
    collapse = Checker("family.q1-collapse")
    bridge = Checker("family.convention-bridge")
    degeneracy = Checker("family.j0-degeneracy")
    positivity = Checker("family.positivity")
    tail_form = Checker("family.second-summation-form")

    for n in range(n_max + 1):
        degeneracy.check(
            {"n": n}, fib_q(n, 0, Convention.LITERAL), fib_q(n, 0, Convention.SHIFTED)
        )
        for j in range(j_max + 1):
            params = {"n": n, "j": j}
            shifted = fib_q(n, j, Convention.SHIFTED)
            literal = fib_q(n, j, Convention.LITERAL)
            for conv, value in ((Convention.SHIFTED, shifted), (Convention.LITERAL, literal)):
                collapse.check(
                    {**params, "convention": conv.value}, value.evaluate(1), fibonacci[n]
                )
            if n >= 1:
                bridge.check(params, literal, shifted.shift(-j))
            ok = shifted.is_zero or (
                shifted.min_exponent >= 0 and all(c >= 0 for _, c in shifted.items())
            )
            positivity.expect(params, ok, shifted, "nonnegative coefficients and exponents")
            tail_form.check(params, fib_q_tail(n, j), shifted)

    return [
        collapse.report(),
        bridge.report(),
        degeneracy.report(),
        positivity.report(),
        tail_form.report(),
        *two_path_reports(n_max, q0=2),
    ]


def two_path_reports(n_max: int, q0: int) -> list[VerificationReport]:
    """The j = 0 family at q0 by direct summation and by triangle diagonal sums."""
    direct = [0]
    for n in range(1, n_max + 1):
        m = n - 1
        direct.append(
            sum(int(qbinom_product(m - k, k).evaluate(q0)) for k in range(m // 2 + 1))
        )
    sums = build_triangle(max(n_max - 1, 0)).diagonal_sums()
    diagonal = [0] + [int(s.evaluate(q0)) for s in sums]

    paths = Checker(f"family.two-path@q={q0}")
    for n in range(n_max + 1):
        paths.check({"n": n}, direct[n], diagonal[n])
        paths.check({"n": n, "path": "fib_q"}, fib_q(n, 0).evaluate(q0), direct[n])

    growth = Checker(f"family.monotone@q={q0}")
    for n in range(3, n_max + 1):
        growth.expect({"n": n}, direct[n] > direct[n - 1], direct[n], f"> {direct[n - 1]}")

    return [paths.report(), growth.report()]


def gf_suite(n_max: int, primes: tuple[int, ...]) -> list[VerificationReport]:
    """Subspace and flag enumeration over each prime field against Gaussian values."""
    if n_max > MAX_SUBSPACE_DIMENSION:
        raise DomainError(f"gf suite is capped at n <= {MAX_SUBSPACE_DIMENSION}, got {n_max}")
    prime_list = list(primes)
    return [
        verify_lattice_counts(n_max, prime_list),
        check_rref_uniqueness(n_max, prime_list),
        check_duality(n_max, prime_list),
        check_chain_factorization(n_max, prime_list),
    ]


def series_suite(order: int, max_level: int) -> list[VerificationReport]:
    """The q = 1 generating function, and F_0 = 0 at every level up to max_level."""
    constant_term = Checker("series.constant-term")
    for level in range(max_level + 1):
        for conv in Convention:
            truncation = series_truncate(level, order, conv)
            constant_term.check(
                {"l": level, "convention": conv.value}, truncation.coeffs[0], LaurentPoly.zero()
            )
    return [q1_series_check(order), constant_term.report()]


def run_suite(
    suite: Suite,
    bounds: SuiteBounds,
    on_progress: Callable[[str], None] | None = None,
) -> VerificationRun:
    """Run one suite (or all of them) and collect the reports."""
    selected = [s for s in Suite if s is not Suite.ALL] if suite is Suite.ALL else [suite]
    reports: list[VerificationReport] = []
    adjudications: list[Adjudication] = []

    for name in selected:
        if on_progress:
            on_progress(f"verifying {name}...")
        logger.info("Running suite %s", name)
        match name:
            case Suite.QBINOM:
                reports += qbinom_suite(bounds.qbinom_nmax)
            case Suite.BASIS:
                reports += basis_suite(bounds.basis_nmax)
            case Suite.RECURRENCE:
                found, verdicts = recurrence_suite(bounds.recurrence_nmax, bounds.recurrence_jmax)
                reports += found
                adjudications += verdicts
            case Suite.FAMILY:
                reports += family_suite(bounds.family_nmax, bounds.family_jmax)
            case Suite.GF:
                reports += gf_suite(bounds.gf_nmax, bounds.gf_primes)
            case Suite.SERIES:
                reports += series_suite(bounds.series_order, bounds.series_lmax)

    holds = all(r.holds for r in reports) and all(a.definitive for a in adjudications)
    return VerificationRun(holds=holds, reports=reports, adjudications=adjudications)
