"""Exact arithmetic: Laurent polynomials in q and polynomials in x over them."""

from fibonacci_qgauss.arith.laurent import LaurentPoly
from fibonacci_qgauss.arith.xpoly import XPoly

__all__ = [
    "LaurentPoly",
    "XPoly",
]
