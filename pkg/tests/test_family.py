from fractions import Fraction

import pytest

from fibonacci_qgauss.errors import DomainError
from fibonacci_qgauss.family import (
    Convention,
    family_table,
    fib_q,
    fib_q_eval,
    fib_q_tail,
)

from .strategies import poly

FIBONACCI = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


@pytest.mark.parametrize("conv", list(Convention))
def test_f0_is_zero(conv):
    for j in range(6):
        assert fib_q(0, j, conv).is_zero


def test_q1_gives_fibonacci():
    assert [fib_q_eval(n, 0, 1) for n in range(11)] == FIBONACCI
    assert fib_q_eval(8, 0, 1) == 21
    assert fib_q_eval(30, 0, 1) == 832040


def test_collapse_holds_at_every_level():
    for conv in Convention:
        for j in range(6):
            assert fib_q_eval(20, j, 1, conv) == 6765


def test_q2_values():
    assert [fib_q_eval(n, 0, 2) for n in range(7)] == [0, 1, 1, 2, 4, 9, 23]
    assert fib_q_eval(7, 0, 2) == 68


def test_symbolic_low_terms():
    assert fib_q(3, 1) == poly(1, 1)
    assert str(fib_q(3, 1, Convention.LITERAL)) == "q^-1 + 1"
    assert str(fib_q(1, 1, Convention.LITERAL)) == "q^-1"


def test_literal_values_can_be_fractions():
    assert fib_q_eval(1, 2, 2, Convention.LITERAL) == Fraction(1, 4)


def test_conventions_differ_by_a_power_of_q():
    for n in range(1, 16):
        for j in range(4):
            assert fib_q(n, j, Convention.LITERAL) == fib_q(n, j).shift(-j)
        assert fib_q(n, 0, Convention.LITERAL) == fib_q(n, 0)


def test_second_summation_form_matches_shifted():
    for n in range(16):
        for j in range(4):
            assert fib_q_tail(n, j) == fib_q(n, j)


def test_shifted_family_has_nonnegative_coefficients():
    for n in range(1, 16):
        for j in range(4):
            value = fib_q(n, j)
            assert value.min_exponent == 0
            assert all(c >= 0 for _, c in value.items())


def test_family_table():
    table = family_table(6, 3, Convention.LITERAL)
    assert table.convention is Convention.LITERAL
    assert table.entry(0, 2).is_zero
    assert table.column(0) == [fib_q(n, 0) for n in range(7)]


@pytest.mark.parametrize(("n", "j"), [(-1, 0), (2, -1)])
def test_negative_indices_rejected(n, j):
    with pytest.raises(DomainError):
        fib_q(n, j)


def test_evaluation_needs_positive_q():
    with pytest.raises(DomainError):
        fib_q_eval(3, 0, 0)
