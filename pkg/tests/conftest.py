"""Pytest configuration and fixtures.

Provides shared test fixtures and configuration:
- Pinned NUTFORGE_* environment for every test
- Fresh settings and appendix caches per test
"""

import pytest

from nutforge.core.appendix_config_loader import load_appendix_configs, load_remainder_tables
from nutforge.core.settings import get_settings


def _clear_caches():
    get_settings.cache_clear()
    load_appendix_configs.cache_clear()
    load_remainder_tables.cache_clear()


@pytest.fixture(autouse=True)
def mock_env(monkeypatch):
    """Automatically pin the environment for all tests.

    Single-threaded, no log files, packaged appendix data, default caps.
    Tests that need other values set them with monkeypatch and call
    ``get_settings.cache_clear()``.
    """
    monkeypatch.setenv("NUTFORGE_THREADS", "1")
    monkeypatch.delenv("NUTFORGE_LOG_DIR", raising=False)
    monkeypatch.delenv("NUTFORGE_APPENDIX_DIR", raising=False)
    monkeypatch.delenv("NUTFORGE_ENUM_CAP", raising=False)
    monkeypatch.delenv("NUTFORGE_CHUNK_SIZE", raising=False)
    monkeypatch.delenv("NUTFORGE_PARITY_RESTRICTED", raising=False)
    _clear_caches()
    yield
    _clear_caches()
