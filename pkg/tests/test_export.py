import json
from fractions import Fraction

from fibonacci_qgauss.arith import LaurentPoly
from fibonacci_qgauss.combinatorics import build_triangle, eval_triangle
from fibonacci_qgauss.export import (
    OutputFormat,
    json_value,
    render_sequence,
    render_triangle,
    render_value,
)

from .strategies import poly


def test_json_values():
    assert json_value(Fraction(3)) == 3
    assert json_value(Fraction(1, 4)) == "1/4"
    assert json_value(poly(1, 1)) == "1 + q"
    assert json_value(7) == 7


def test_evaluated_triangle_json(fixtures_dir):
    expected = (fixtures_dir / "triangle_q2_rows4.json").read_text().strip()
    assert render_triangle(eval_triangle(4, 2), OutputFormat.JSON, q0=2) == expected


def test_symbolic_triangle_json_parses_back():
    rows = build_triangle(5).rows
    payload = json.loads(render_triangle(rows, OutputFormat.JSON))
    assert payload["q"] == "symbolic"
    assert [[LaurentPoly.parse(e) for e in row] for row in payload["rows"]] == [
        list(row) for row in rows
    ]


def test_triangle_csv_with_diagonal_sums():
    text = render_triangle(eval_triangle(2, 1), OutputFormat.CSV, q0=1, diagonal_sums=[1, 1, 2])
    assert text == "n,diagonal_sum,entries\n0,1,1\n1,1,1,1\n2,2,1,2,1"


def test_triangle_csv_symbolic_quotes_nothing():
    text = render_triangle(build_triangle(2).rows, OutputFormat.CSV)
    assert text.splitlines() == ["1", "1,1", "1,1 + q,1"]


def test_pretty_triangle_is_centered():
    text = render_triangle([[1], [1, 1], [1, 2, 1]], OutputFormat.PRETTY)
    assert text == "    1\n  1   1\n1   2   1"


def test_pretty_triangle_with_sums():
    text = render_triangle([[1], [1, 1]], OutputFormat.PRETTY, diagonal_sums=[1, 1])
    assert text.splitlines() == ["  1    | 1", "1   1  | 1"]


def test_sequence_formats():
    values = [Fraction(0), Fraction(1, 2), Fraction(3)]
    assert render_sequence(values, OutputFormat.PRETTY) == "0 1/2 3"
    assert render_sequence(values, OutputFormat.CSV, index_name="m") == "m,value\n0,0\n1,1/2\n2,3"
    assert render_sequence(values, OutputFormat.JSON, q=2) == '{"q": 2, "values": [0, "1/2", 3]}'


def test_symbolic_sequence_uses_commas():
    values = [LaurentPoly.zero(), poly(1, 1)]
    assert render_sequence(values, OutputFormat.PRETTY) == "0, 1 + q"


def test_single_value():
    assert render_value(Fraction(35), OutputFormat.JSON, n=4, k=2, q=2) == (
        '{"n": 4, "k": 2, "q": 2, "value": 35}'
    )
    assert render_value(poly(1, 1), OutputFormat.PRETTY) == "1 + q"
