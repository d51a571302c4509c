import pytest

from fibonacci_qgauss.errors import DomainError
from fibonacci_qgauss.family import Convention, q1_series_check, rational_series, series_truncate


def test_q1_truncation_is_fibonacci():
    assert series_truncate(0, 5).evaluate(1) == [0, 1, 1, 2, 3, 5]


def test_q2_truncation():
    assert series_truncate(0, 6).evaluate(2) == [0, 1, 1, 2, 4, 9, 23]


@pytest.mark.parametrize("conv", list(Convention))
def test_shape(conv):
    truncation = series_truncate(3, 8, conv)
    assert len(truncation.coeffs) == 9
    assert truncation.coeffs[0].is_zero
    assert truncation.convention is conv


def test_order_zero():
    assert series_truncate(0, 0).coeffs == (0,)


def test_rational_series():
    assert rational_series([1], [1, -1], 4) == [1, 1, 1, 1, 1]
    assert rational_series([0, 1], [1, -1, -1], 30)[30] == 832040


def test_rational_series_needs_unit_constant_term():
    with pytest.raises(DomainError):
        rational_series([1], [2, 1], 3)


@pytest.mark.parametrize("order", [2, 5, 30])
def test_q1_generating_function(order):
    report = q1_series_check(order)
    assert report.holds
    assert report.checked == order + 1


def test_q1_generating_function_needs_order_two():
    with pytest.raises(DomainError):
        q1_series_check(1)
