"""Render triangles, sequences and series as pretty text, CSV or JSON.

CSV and JSON are byte-stable: identical inputs always give identical text.
"""

import csv
import io
from collections.abc import Sequence
from enum import StrEnum
from fractions import Fraction

from fibonacci_qgauss.arith import LaurentPoly
from fibonacci_qgauss.verification import dump_json

Value = LaurentPoly | Fraction | int


class OutputFormat(StrEnum):
    PRETTY = "pretty"
    CSV = "csv"
    JSON = "json"


def json_value(value: Value) -> int | str:
    """Integers stay numbers; polynomials and proper fractions become strings."""
    if isinstance(value, LaurentPoly):
        return str(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


def text_value(value: Value) -> str:
    return str(json_value(value))


def _q_field(q0: int | None) -> int | str:
    return "symbolic" if q0 is None else q0


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render_value(value: Value, fmt: OutputFormat, **fields: int | str) -> str:
    """A single computed value, with its parameters in the JSON form."""
    if fmt is OutputFormat.JSON:
        return dump_json({**fields, "value": json_value(value)})
    return text_value(value)


def render_triangle(
    rows: Sequence[Sequence[Value]],
    fmt: OutputFormat,
    q0: int | None = None,
    diagonal_sums: Sequence[Value] | None = None,
) -> str:
    if fmt is OutputFormat.JSON:
        payload: dict[str, object] = {
            "q": _q_field(q0),
            "rows": [[json_value(v) for v in row] for row in rows],
        }
        if diagonal_sums is not None:
            payload["diagonal_sums"] = [json_value(v) for v in diagonal_sums]
        return dump_json(payload)

    if fmt is OutputFormat.CSV:
        if diagonal_sums is None:
            return _csv([[text_value(v) for v in row] for row in rows])
        return _csv(
            [["n", "diagonal_sum", "entries"]]
            + [
                [str(n), text_value(total), *(text_value(v) for v in row)]
                for n, (row, total) in enumerate(zip(rows, diagonal_sums, strict=True))
            ]
        )

    lines = ["   ".join(text_value(v) for v in row) for row in rows]
    width = max(len(line) for line in lines)
    centered = [line.center(width).rstrip() for line in lines]
    if diagonal_sums is None:
        return "\n".join(centered)
    return "\n".join(
        f"{line.ljust(width)}  | {text_value(total)}"
        for line, total in zip(centered, diagonal_sums, strict=True)
    )


def render_sequence(
    values: Sequence[Value],
    fmt: OutputFormat,
    index_name: str = "n",
    **fields: int | str,
) -> str:
    """A sequence indexed from 0; ``fields`` lead the JSON object."""
    if fmt is OutputFormat.JSON:
        return dump_json({**fields, "values": [json_value(v) for v in values]})
    if fmt is OutputFormat.CSV:
        body = [[str(i), text_value(v)] for i, v in enumerate(values)]
        return _csv([[index_name, "value"], *body])
    # Symbolic terms contain spaces, so they need a comma separator
    separator = ", " if any(isinstance(v, LaurentPoly) for v in values) else " "
    return separator.join(text_value(v) for v in values)
