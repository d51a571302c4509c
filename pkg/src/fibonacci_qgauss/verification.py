"""Verification reports: deterministic verdicts on families of exact identities."""

from __future__ import annotations

import json
import logging
from typing import Any

from pydantic import BaseModel

logger = logging.getLogger(__name__)

Parameters = dict[str, int | str]


class Counterexample(BaseModel):
    """First failing instance, with both sides in canonical rendering."""

    parameters: Parameters
    lhs: str
    rhs: str


class VerificationReport(BaseModel):
    suite: str
    checked: int
    holds: bool
    first_counterexample: Counterexample | None = None


class VariantOutcome(BaseModel):
    """One candidate recurrence under one convention, with per-level verdicts."""

    variant: str
    levels: dict[str, bool]
    report: VerificationReport


class Adjudication(BaseModel):
    """Which candidate recurrences hold under a convention.

    ``verdict`` names the single variant that holds on the whole region, or is
    None when no variant does. ``definitive`` is False only if several hold.
    """

    convention: str
    verdict: str | None
    definitive: bool
    variants: list[VariantOutcome]


class VerificationRun(BaseModel):
    holds: bool
    reports: list[VerificationReport]
    adjudications: list[Adjudication] = []

    def to_json(self) -> str:
        return dump_json(self.model_dump(mode="json"))


def dump_json(payload: Any) -> str:
    """Single-line JSON with insertion-ordered keys."""
    return json.dumps(payload, ensure_ascii=True)


class Checker:
    """Accumulates comparisons for one suite and keeps the first failure.

    Example:
        checker = Checker("qbinom.symmetry")
        for n in range(4):
            for k in range(n + 1):
                checker.check({"n": n, "k": k}, qbinom_rec(n, k), qbinom_rec(n, n - k))
        report = checker.report()
    """

    def __init__(self, suite: str) -> None:
        self.suite = suite
        self.checked = 0
        self.failures = 0
        self.first_counterexample: Counterexample | None = None

    def check(self, parameters: Parameters, lhs: object, rhs: object) -> bool:
        """Compare two exact values; record the first mismatch."""
        return self.expect(parameters, lhs == rhs, lhs, rhs)

    def expect(self, parameters: Parameters, ok: bool, lhs: object, rhs: object) -> bool:
        """Record a precomputed verdict, rendering both sides on failure."""
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = Counterexample(
                    parameters=dict(parameters), lhs=str(lhs), rhs=str(rhs)
                )
                logger.debug("%s fails at %s: %s != %s", self.suite, parameters, lhs, rhs)
        return ok

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def report(self) -> VerificationReport:
        return VerificationReport(
            suite=self.suite,
            checked=self.checked,
            holds=self.holds,
            first_counterexample=self.first_counterexample,
        )
