import pytest

from fibonacci_qgauss.errors import DomainError
from fibonacci_qgauss.family import (
    Convention,
    RecurrenceVariant,
    adjudicate,
    recurrence_sides,
    verify_recurrence,
)

UNWEIGHTED = RecurrenceVariant.UNWEIGHTED
SHIFTED_CORRECTED = RecurrenceVariant.SHIFTED_CORRECTED
LITERAL_CORRECTED = RecurrenceVariant.LITERAL_CORRECTED


def first_failure(variant, conv):
    report = verify_recurrence(variant, conv, 20, 5)
    assert not report.holds
    cx = report.first_counterexample
    return cx.parameters, cx.lhs, cx.rhs


def test_unweighted_holds_on_level_zero():
    report = verify_recurrence(UNWEIGHTED, Convention.SHIFTED, 20, 0)
    assert report.holds
    assert report.checked == 19


def test_shifted_corrected_holds_symbolically():
    report = verify_recurrence(SHIFTED_CORRECTED, Convention.SHIFTED, 20, 5)
    assert report.holds
    assert report.checked == 19 * 6
    assert report.suite == "recurrence.shifted.shifted-corrected"


@pytest.mark.parametrize(
    ("variant", "conv", "expected"),
    [
        (UNWEIGHTED, Convention.SHIFTED, ({"n": 1, "j": 1}, "1 + q", "2")),
        (LITERAL_CORRECTED, Convention.SHIFTED, ({"n": 0, "j": 0}, "1", "q")),
        (UNWEIGHTED, Convention.LITERAL, ({"n": 0, "j": 0}, "1", "q^-1")),
        (SHIFTED_CORRECTED, Convention.LITERAL, ({"n": 0, "j": 0}, "1", "q^-1")),
        (LITERAL_CORRECTED, Convention.LITERAL, ({"n": 1, "j": 1}, "q^-1 + 1", "2*q^-1")),
    ],
)
def test_first_counterexamples(variant, conv, expected):
    assert first_failure(variant, conv) == expected


@pytest.mark.parametrize("variant", list(RecurrenceVariant))
@pytest.mark.parametrize("conv", list(Convention))
def test_every_variant_collapses_at_q1(variant, conv):
    report = verify_recurrence(variant, conv, 20, 5, q0=1)
    assert report.holds
    assert report.suite.endswith("@q=1")


def test_sides_at_a_single_point():
    lhs, rhs = recurrence_sides(SHIFTED_CORRECTED, Convention.SHIFTED, 3, 2)
    assert lhs == rhs


def test_adjudication_under_shifted():
    verdict = adjudicate(Convention.SHIFTED, 20, 5)
    assert verdict.verdict == "shifted-corrected"
    assert verdict.definitive
    unweighted = verdict.variants[0]
    assert unweighted.variant == "unweighted"
    assert unweighted.levels["j=0"]
    assert not unweighted.levels["j=1"]


def test_adjudication_under_literal_finds_no_holding_variant():
    verdict = adjudicate(Convention.LITERAL, 20, 5)
    assert verdict.verdict is None
    assert verdict.definitive
    assert all(o.report.first_counterexample is not None for o in verdict.variants)


def test_reports_are_deterministic():
    first = adjudicate(Convention.SHIFTED, 10, 3).model_dump_json()
    assert adjudicate(Convention.SHIFTED, 10, 3).model_dump_json() == first


def test_needs_room_for_one_step():
    with pytest.raises(DomainError):
        verify_recurrence(UNWEIGHTED, Convention.SHIFTED, 1, 0)
