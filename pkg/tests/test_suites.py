from dataclasses import replace

import pytest
from pydantic import ValidationError

from fibonacci_qgauss.errors import DomainError
from fibonacci_qgauss.family import Convention
from fibonacci_qgauss.settings import Settings
from fibonacci_qgauss.suites import (
    Suite,
    SuiteBounds,
    fibonacci_numbers,
    pascal_rows,
    run_suite,
    two_path_reports,
)


@pytest.fixture
def defaults() -> SuiteBounds:
    return SuiteBounds.from_settings(Settings())


@pytest.fixture
def small() -> SuiteBounds:
    settings = Settings(
        qbinom_nmax=6,
        basis_nmax=4,
        recurrence_nmax=6,
        recurrence_jmax=2,
        family_nmax=8,
        family_jmax=2,
        gf_nmax=2,
        gf_primes=[2],
        series_order=6,
        series_lmax=2,
    )
    return SuiteBounds.from_settings(settings)


def test_helpers():
    assert pascal_rows(4)[4] == [1, 4, 6, 4, 1]
    assert fibonacci_numbers(10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_bounds_follow_settings():
    bounds = SuiteBounds.from_settings(Settings(qbinom_nmax=7, gf_primes=[5]))
    assert bounds.qbinom_nmax == 7
    assert bounds.gf_primes == (5,)
    assert bounds.series_lmax == 5


def test_settings_validate_their_fields(monkeypatch):
    monkeypatch.setenv("QGAUSS_LOG_LEVEL", "info")
    monkeypatch.setenv("QGAUSS_DEFAULT_CONVENTION", "literal")
    settings = Settings()
    assert settings.log_level == "INFO"
    assert settings.default_convention is Convention.LITERAL


@pytest.mark.parametrize(
    ("name", "value"),
    [
        ("QGAUSS_DEFAULT_CONVENTION", "bogus"),
        ("QGAUSS_LOG_LEVEL", "chatty"),
        ("QGAUSS_QBINOM_NMAX", "abc"),
        ("QGAUSS_SERIES_ORDER", "1"),
    ],
)
def test_invalid_settings_are_rejected(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValidationError):
        Settings()


def test_override_targets_one_suite(defaults):
    bounds = defaults.override(Suite.FAMILY, nmax=10, jmax=1)
    assert (bounds.family_nmax, bounds.family_jmax) == (10, 1)
    assert bounds.qbinom_nmax == 30
    assert defaults.override(Suite.GF, primes=[5]).gf_primes == (5,)


@pytest.mark.parametrize(
    ("suite", "flags"),
    [
        (Suite.SERIES, {"nmax": 3}),
        (Suite.QBINOM, {"jmax": 1}),
        (Suite.BASIS, {"order": 4}),
        (Suite.FAMILY, {"primes": [2]}),
    ],
)
def test_override_rejects_foreign_flags(defaults, suite, flags):
    with pytest.raises(DomainError):
        defaults.override(suite, **flags)


def test_two_paths_agree_at_q2():
    reports = two_path_reports(30, 2)
    assert all(r.holds for r in reports)
    assert reports[0].suite == "family.two-path@q=2"


def test_run_single_suite_reports_progress(small):
    messages = []
    run = run_suite(Suite.QBINOM, small, on_progress=messages.append)
    assert run.holds
    assert messages == ["verifying qbinom..."]
    assert [r.suite for r in run.reports] == [
        "qbinom.oracle-equivalence",
        "qbinom.symmetry",
        "qbinom.pascal-specialization",
        "qbinom.shape",
    ]
    assert run.adjudications == []


def test_basis_suite_asserts_the_literal_demonstration(small):
    run = run_suite(Suite.BASIS, small)
    rejected = next(r for r in run.reports if r.suite == "basis.literal-boundary-rejected")
    assert rejected.holds
    assert rejected.first_counterexample.parameters == {"n": 1, "k": 0}


def test_run_all_small(small):
    run = run_suite(Suite.ALL, small)
    assert run.holds
    assert [a.convention for a in run.adjudications] == ["shifted", "literal"]
    assert [a.verdict for a in run.adjudications] == ["shifted-corrected", None]


def test_gf_suite_cap(defaults):
    with pytest.raises(DomainError):
        run_suite(Suite.GF, replace(defaults, gf_nmax=5))


def test_series_levels_follow_bounds(small):
    run = run_suite(Suite.SERIES, replace(small, series_lmax=3))
    constant_term = next(r for r in run.reports if r.suite == "series.constant-term")
    assert constant_term.holds
    assert constant_term.checked == 4 * 2
