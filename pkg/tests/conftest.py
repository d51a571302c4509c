import os
from pathlib import Path

import pytest
from typer.testing import CliRunner

from fibonacci_qgauss.settings import get_settings


@pytest.fixture
def fixtures_dir() -> Path:
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Each test sees default settings, whatever the shell exports."""
    for name in list(os.environ):
        if name.startswith("QGAUSS_"):
            monkeypatch.delenv(name)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
