"""Pytest configuration and fixtures for testing."""

import os

import pytest
from dotenv import load_dotenv

# Only .env.test may set SQCT_ variables during the run
for key in [k for k in os.environ if k.startswith("SQCT_")]:
    del os.environ[key]
load_dotenv(".env.test", override=True)

# Import after environment is configured
from app.core.config import settings
from app.modules.compile import default_catalog
from app.modules.numtheory import RandomSource


@pytest.fixture
def rng():
    """A fresh seeded RandomSource for each test."""
    return RandomSource(7)


@pytest.fixture(scope="session")
def catalog():
    """The verified catalog, built once per run."""
    return default_catalog()


@pytest.fixture
def workdir(tmp_path):
    """Temporary directory for circuit, report and CSV files."""
    out = tmp_path / "out"
    out.mkdir()
    return out


@pytest.fixture
def override_settings(monkeypatch):
    """Change settings fields for one test; undone afterwards."""
    def apply(**values):
        for field, value in values.items():
            monkeypatch.setattr(settings, field, value)
        return settings
    return apply
