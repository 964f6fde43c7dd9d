"""Test configuration and fixtures."""

import sys
from pathlib import Path
from unittest.mock import Mock

import pytest
from dotenv import load_dotenv

# Load test environment variables BEFORE any application code imports
TEST_ENV_FILE = Path(__file__).parent.parent / ".env.test"
if TEST_ENV_FILE.exists():
    _ = load_dotenv(TEST_ENV_FILE, override=True)
else:
    raise FileNotFoundError(
        f"Test environment file not found: {TEST_ENV_FILE}\n" + "Tests require .env.test with deterministic settings."
    )

# Mock dotenv_vault module before any application code imports it
# This prevents it from loading a developer's .env when config.py is imported
mock_dotenv_vault = Mock()
mock_dotenv_vault.load_dotenv = Mock(return_value=None)
sys.modules["dotenv_vault"] = mock_dotenv_vault

from signed_difference_sets.config import Environment, Settings  # noqa: E402
from signed_difference_sets.core.finite_field import FiniteField, field_make  # noqa: E402
from signed_difference_sets.core.groupring import SignedSet  # noqa: E402
from signed_difference_sets.core.groups import group_make  # noqa: E402


@pytest.fixture
def mock_settings() -> Settings:
    """Create deterministic settings for testing."""
    return Settings.model_validate(
        {
            "environment": Environment.DEVELOPMENT,
            "log_level": "WARNING",
            "threads": 2,
            "seed": 20240917,
            "sentry_dsn": None,
            "max_field_order": 10**6,
            "full_matrix_max_order": 512,
            "weighing_sample_pairs": 200,
            "product3_max_m": 4,
            "product3_convolution_max_m": 2,
        }
    )


@pytest.fixture(autouse=True, scope="function")
def mock_get_settings_globally(mock_settings: Settings, monkeypatch: pytest.MonkeyPatch) -> None:
    """
    Automatically patch the settings singleton for ALL tests.

    get_settings() returns the cached instance, so every module sees the
    deterministic test settings however it imported get_settings.
    """
    import signed_difference_sets.config

    monkeypatch.setattr(signed_difference_sets.config, "_settings", mock_settings)


@pytest.fixture
def gf13() -> FiniteField:
    """GF(13) with w = 2."""
    return field_make(13)


@pytest.fixture
def gf17() -> FiniteField:
    """GF(17) with w = 3."""
    return field_make(17)


@pytest.fixture
def paley13() -> SignedSet:
    """Quadratic residues of Z_13 as P, the other nonzero residues as N."""
    G = group_make([13])
    squares = frozenset({1, 3, 4, 9, 10, 12})
    return SignedSet(G, squares, frozenset(range(1, 13)) - squares)


@pytest.fixture
def w13_9() -> SignedSet:
    """The (13, 9, 0) SDS: P = C_0, N = C_1 + C_3 for w = 2."""
    G = group_make([13])
    return SignedSet(G, frozenset({1, 3, 9}), frozenset({2, 5, 6, 7, 8, 11}))
