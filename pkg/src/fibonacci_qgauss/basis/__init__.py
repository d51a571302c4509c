"""Gaussian polynomial basis and the expansion of x^n."""

from fibonacci_qgauss.basis.gauss import (
    check_dual_recurrence,
    expand_monomial,
    phi,
    reconstruct_monomial,
    verify_expansion,
)

__all__ = [
    "check_dual_recurrence",
    "expand_monomial",
    "phi",
    "reconstruct_monomial",
    "verify_expansion",
]
