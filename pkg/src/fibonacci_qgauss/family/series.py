"""Truncated single-level generating functions F(q^l; x) = sum_n F_n^[q^l] x^n."""

from dataclasses import dataclass
from fractions import Fraction

from fibonacci_qgauss.arith import LaurentPoly
from fibonacci_qgauss.errors import DomainError
from fibonacci_qgauss.family.fibonacci import Convention, fib_q
from fibonacci_qgauss.verification import Checker, VerificationReport


@dataclass(frozen=True)
class SeriesTruncation:
    """Coefficients of x^0..x^order; coeffs[0] is always zero since F_0 = 0."""

    level: int
    order: int
    convention: Convention
    coeffs: tuple[LaurentPoly, ...]

    def evaluate(self, q0: int) -> list[Fraction]:
        return [c.evaluate(q0) for c in self.coeffs]


def series_truncate(
    level: int, order: int, conv: Convention = Convention.SHIFTED
) -> SeriesTruncation:
    """Coefficients of x^0..x^order of F(q^level; x)."""
    if level < 0 or order < 0:
        raise DomainError(f"Series needs level, order >= 0, got l={level}, order={order}")
    conv = Convention(conv)
    return SeriesTruncation(
        level=level,
        order=order,
        convention=conv,
        coeffs=tuple(fib_q(m, level, conv) for m in range(order + 1)),
    )


def rational_series(numerator: list[int], denominator: list[int], order: int) -> list[int]:
    """Power-series coefficients of numerator/denominator up to x^order.

    The denominator must have constant term 1, so every coefficient is an
    integer: a_m = n_m - sum_(i>=1) d_i a_(m-i).
    """
    if not denominator or denominator[0] != 1:
        raise DomainError("Denominator must have constant term 1")
    coefficients: list[int] = []
    for m in range(order + 1):
        value = numerator[m] if m < len(numerator) else 0
        for i in range(1, min(m, len(denominator) - 1) + 1):
            value -= denominator[i] * coefficients[m - i]
        coefficients.append(value)
    return coefficients


def q1_series_check(order: int) -> VerificationReport:
    """Compare F(1; x) truncated at order with x / (1 - x - x^2)."""
    if order < 2:
        raise DomainError(f"Series check needs order >= 2, got {order}")
    checker = Checker("series.q1-generating-function")
    truncated = series_truncate(0, order, Convention.SHIFTED).evaluate(1)
    expected = rational_series([0, 1], [1, -1, -1], order)
    for m, (value, target) in enumerate(zip(truncated, expected, strict=True)):
        checker.check({"m": m}, value, Fraction(target))
    return checker.report()
