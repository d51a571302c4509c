"""q-analogs of integers, factorials and binomial coefficients."""

from fibonacci_qgauss.combinatorics.qnumbers import (
    q_factorial,
    q_falling,
    q_integer,
    qbinom_product,
)
from fibonacci_qgauss.combinatorics.triangle import (
    Boundary,
    QBinomialTable,
    QBinomTriangle,
    build_triangle,
    eval_triangle,
    get_table,
    qbinom_rec,
    to_int,
)

__all__ = [
    "Boundary",
    "QBinomTriangle",
    "QBinomialTable",
    "build_triangle",
    "eval_triangle",
    "get_table",
    "q_factorial",
    "q_falling",
    "q_integer",
    "qbinom_product",
    "qbinom_rec",
    "to_int",
]
