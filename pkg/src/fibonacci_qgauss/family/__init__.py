"""The Fibonacci q-Gauss family, its recurrences and generating functions."""

from fibonacci_qgauss.family.fibonacci import (
    Convention,
    FamilyTable,
    family_table,
    fib_q,
    fib_q_eval,
    fib_q_tail,
)
from fibonacci_qgauss.family.recurrence import (
    RecurrenceVariant,
    adjudicate,
    recurrence_sides,
    verify_recurrence,
)
from fibonacci_qgauss.family.series import (
    SeriesTruncation,
    q1_series_check,
    rational_series,
    series_truncate,
)

__all__ = [
    "Convention",
    "FamilyTable",
    "RecurrenceVariant",
    "SeriesTruncation",
    "adjudicate",
    "family_table",
    "fib_q",
    "fib_q_eval",
    "fib_q_tail",
    "q1_series_check",
    "rational_series",
    "recurrence_sides",
    "series_truncate",
    "verify_recurrence",
]
