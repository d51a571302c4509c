"""Main CLI entry point for Fibonacci q-Gauss."""

import logging
from pathlib import Path

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from fibonacci_qgauss.combinatorics import build_triangle, qbinom_rec
from fibonacci_qgauss.errors import QGaussError
from fibonacci_qgauss.export import (
    OutputFormat,
    render_sequence,
    render_triangle,
    render_value,
)
from fibonacci_qgauss.family import Convention, fib_q, series_truncate
from fibonacci_qgauss.galois import MAX_CHAIN_DIMENSION, MAX_FIELD_SIZE, MAX_SUBSPACE_DIMENSION
from fibonacci_qgauss.settings import get_settings
from fibonacci_qgauss.suites import Suite, SuiteBounds, run_suite
from fibonacci_qgauss.verification import VerificationRun

app = typer.Typer(
    name="fibonacci-qgauss",
    help="Gaussian triangles, the Fibonacci q-Gauss family, and exact identity checks.",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)

EXIT_FAILED = 1
EXIT_USAGE = 2

FORMAT_OPTION = typer.Option(OutputFormat.PRETTY, "--format", "-f", help="Output format")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Write to a file instead of stdout")
CONVENTION_OPTION = typer.Option(
    None, "--convention", "-c", help="Family weight: shifted q^(jk) or literal q^(j(k-1))"
)


def _fail(message: str) -> typer.Exit:
    err_console.print(f"[red]Error:[/red] {escape(message)}")
    return typer.Exit(EXIT_USAGE)


def _emit(text: str, fmt: OutputFormat, output: Path | None) -> None:
    if output is not None:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text + "\n", encoding="utf-8")
        err_console.print(f"[green]Wrote[/green] {escape(str(output))}")
    elif fmt is OutputFormat.PRETTY:
        console.print(text, markup=False, highlight=False, soft_wrap=True)
    else:
        typer.echo(text)


def _convention(value: Convention | None) -> Convention:
    return value if value is not None else get_settings().default_convention


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug details to stderr"),
) -> None:
    """Compute, render and verify q-Gauss objects with exact arithmetic."""
    try:
        settings = get_settings()
    except ValidationError as e:
        names = sorted({str(err["loc"][0]).upper() for err in e.errors() if err["loc"]})
        fields = ", ".join(f"QGAUSS_{name}" for name in names)
        raise _fail(f"Invalid configuration in {fields}") from e
    level = "DEBUG" if verbose else settings.log_level
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@app.command()
def qbinom(
    n: int = typer.Argument(..., help="Row index n >= 0"),
    k: int = typer.Argument(..., help="Column index 0 <= k <= n"),
    q: int | None = typer.Option(None, "--q", "-q", help="Evaluate at this integer q"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Path | None = OUTPUT_OPTION,
) -> None:
    """Print the Gaussian binomial binom(n, k)_q, symbolic or evaluated."""
    if n < 0 or not 0 <= k <= n:
        raise _fail(f"Need 0 <= k <= n, got n={n}, k={k}")
    value = qbinom_rec(n, k)
    try:
        shown = value if q is None else value.evaluate(q)
    except QGaussError as e:
        raise _fail(str(e)) from e
    q_field = "symbolic" if q is None else q
    _emit(render_value(shown, fmt, n=n, k=k, q=q_field), fmt, output)


@app.command()
def triangle(
    rows: int = typer.Option(6, "--rows", "-r", min=0, help="Last row index N"),
    q: int | None = typer.Option(None, "--q", "-q", min=1, help="Evaluate at this integer q"),
    diagonal_sums: bool = typer.Option(
        False, "--diagonal-sums", "-d", help="Append sum_k binom(n-k, k)_q for each row"
    ),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Path | None = OUTPUT_OPTION,
) -> None:
    """Print rows 0..N of the q-Gauss Pascal triangle.

    With --q 1 this is the Pascal triangle, and --diagonal-sums gives the
    Fibonacci numbers; with --q 2 it is the q = 2 triangle and its family.
    """
    built = build_triangle(rows)
    entries = built.rows if q is None else built.evaluate(q)
    sums = None
    if diagonal_sums:
        sums = built.diagonal_sums()
        if q is not None:
            sums = [s.evaluate(q) for s in sums]
    _emit(render_triangle(entries, fmt, q0=q, diagonal_sums=sums), fmt, output)


@app.command()
def fib(
    count: int = typer.Option(10, "--count", "-n", min=1, help="Print F_0..F_(count-1)"),
    q: int | None = typer.Option(None, "--q", "-q", min=1, help="Evaluate at this integer q"),
    j: int = typer.Option(0, "--j", "-j", min=0, help="Family level j"),
    convention: Convention | None = CONVENTION_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Path | None = OUTPUT_OPTION,
) -> None:
    """Print the Fibonacci q-Gauss sequence F_n^[q^j]."""
    conv = _convention(convention)
    values = [fib_q(n, j, conv) for n in range(count)]
    if conv is Convention.LITERAL and any(v.min_exponent < 0 for v in values if v):
        err_console.print("[yellow]Warning:[/yellow] literal weights produce negative q-exponents")
    shown = values if q is None else [v.evaluate(q) for v in values]
    q_field = "symbolic" if q is None else q
    text = render_sequence(shown, fmt, q=q_field, j=j, convention=conv.value)
    _emit(text, fmt, output)


@app.command()
def series(
    level: int = typer.Option(0, "--l", "-l", min=0, help="Level l of F(q^l; x)"),
    order: int = typer.Option(10, "--order", min=0, help="Highest power of x"),
    q: int | None = typer.Option(None, "--q", "-q", min=1, help="Evaluate at this integer q"),
    convention: Convention | None = CONVENTION_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Path | None = OUTPUT_OPTION,
) -> None:
    """Print the coefficients of x^0..x^order of F(q^l; x)."""
    conv = _convention(convention)
    truncation = series_truncate(level, order, conv)
    if conv is Convention.LITERAL and any(c.min_exponent < 0 for c in truncation.coeffs if c):
        err_console.print("[yellow]Warning:[/yellow] literal weights produce negative q-exponents")
    coeffs = list(truncation.coeffs) if q is None else truncation.evaluate(q)
    q_field = "symbolic" if q is None else q
    text = render_sequence(
        coeffs, fmt, index_name="m", q=q_field, l=level, order=order, convention=conv.value
    )
    _emit(text, fmt, output)


VERIFY_HELP = f"""Run a verification suite and print its JSON report.

Exit code 0 when every asserted identity holds, 1 when a counterexample was
found, 2 on bad arguments. The gf suite enumerates subspaces for
n <= {MAX_SUBSPACE_DIMENSION} and flags for n <= {MAX_CHAIN_DIMENSION} over prime fields
of size <= {MAX_FIELD_SIZE}. Bounds for `all` come from QGAUSS_* settings.
"""


@app.command(help=VERIFY_HELP)
def verify(
    suite: Suite = typer.Argument(..., help="Suite to run"),
    nmax: int | None = typer.Option(None, "--nmax", help="Largest n of the chosen suite"),
    jmax: int | None = typer.Option(None, "--jmax", help="Largest level j (recurrence, family)"),
    order: int | None = typer.Option(None, "--order", help="Series order (series)"),
    primes: list[int] = typer.Option(
        None, "--prime", "-p", help=f"Field size for gf, prime <= {MAX_FIELD_SIZE} (repeatable)"
    ),
) -> None:
    overrides = (nmax, jmax, order)
    if suite is Suite.ALL and (any(v is not None for v in overrides) or primes):
        raise _fail("Bounds apply to a single suite; set QGAUSS_* variables for `all`")

    try:
        bounds = SuiteBounds.from_settings(get_settings()).override(
            suite, nmax=nmax, jmax=jmax, order=order, primes=primes
        )
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=err_console,
            transient=True,
        ) as progress:
            task = progress.add_task("starting...", total=None)

            def update_progress(status: str) -> None:
                progress.update(task, description=status)

            run = run_suite(suite, bounds, on_progress=update_progress)
    except QGaussError as e:
        raise _fail(str(e)) from e

    _print_summary(run)
    typer.echo(run.to_json())
    if not run.holds:
        raise typer.Exit(EXIT_FAILED)


def _print_summary(run: VerificationRun) -> None:
    table = Table(title="Verification")
    table.add_column("suite")
    table.add_column("checked", justify="right")
    table.add_column("holds")
    for report in run.reports:
        mark = "[green]✓[/green]" if report.holds else "[red]✗[/red]"
        table.add_row(report.suite, str(report.checked), mark)
    for adjudication in run.adjudications:
        verdict = adjudication.verdict or "no variant holds"
        table.add_row(f"recurrence verdict ({adjudication.convention})", "", escape(verdict))
    err_console.print(table)


if __name__ == "__main__":
    app()
