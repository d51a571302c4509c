"""Hypothesis strategies and shorthands shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from fibonacci_qgauss.arith import LaurentPoly

q = LaurentPoly.q()

laurent_polys = st.dictionaries(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-100, max_value=100),
    max_size=6,
).map(LaurentPoly)

eval_points = st.sampled_from([-2, -1, 2, 3, Fraction(1, 2)])


def poly(*coefficients: int, start: int = 0) -> LaurentPoly:
    """Dense shorthand: poly(1, 2, 1) is 1 + 2q + q^2."""
    return LaurentPoly.from_coefficients(coefficients, start=start)
