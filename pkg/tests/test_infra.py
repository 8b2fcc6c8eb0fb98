"""Infrastructure tests.

This module tests:
- Environment-driven settings and .env bootstrap
- Logger setup (stderr console, optional rotating file)
- chunker and the thread-pool helpers
"""

import logging
import threading
import time

import pytest

from nutforge.core.bootstrap import bootstrap
from nutforge.core.settings import get_settings
from nutforge.utils.common import chunker
from nutforge.utils.logger import setup_logger
from nutforge.workers.search_worker import first_match, ordered_map


@pytest.mark.unit
class TestSettings:
    def test_defaults(self):
        settings = get_settings()
        assert settings.search.workers == 1
        assert settings.search.enumeration_cap == 10_000_000
        assert settings.search.chunk_size == 2048
        assert settings.appendix.parity_restricted is False
        assert settings.appendix.config_dir is None

    def test_overrides_and_bad_values(self, monkeypatch):
        """Unparseable or non-positive numbers fall back to sane values."""
        monkeypatch.setenv("NUTFORGE_THREADS", "0")
        monkeypatch.setenv("NUTFORGE_ENUM_CAP", "lots")
        monkeypatch.setenv("NUTFORGE_CHUNK_SIZE", " 64 ")
        monkeypatch.setenv("NUTFORGE_PARITY_RESTRICTED", "yes")
        monkeypatch.setenv("NUTFORGE_LOG_LEVEL", "debug")
        get_settings.cache_clear()

        settings = get_settings()
        assert settings.search.workers == 1
        assert settings.search.enumeration_cap == 10_000_000
        assert settings.search.chunk_size == 64
        assert settings.appendix.parity_restricted is True
        assert settings.runtime.log_level == "DEBUG"

    def test_bootstrap_loads_dotenv(self, tmp_path, monkeypatch):
        """Values from .env apply after bootstrap; existing variables win."""
        env_file = tmp_path / ".env"
        env_file.write_text("NUTFORGE_ENUM_CAP=17\nNUTFORGE_THREADS=8\n", encoding="utf-8")
        # registered with monkeypatch so the value loaded below is removed on teardown
        monkeypatch.setenv("NUTFORGE_ENUM_CAP", "5")
        monkeypatch.delenv("NUTFORGE_ENUM_CAP")
        assert get_settings().search.enumeration_cap == 10_000_000

        assert bootstrap(str(env_file)) == str(env_file)
        assert get_settings().search.enumeration_cap == 17
        assert get_settings().search.workers == 1

    def test_bootstrap_without_dotenv(self, mocker):
        mocker.patch("nutforge.core.bootstrap.find_dotenv", return_value="")
        assert bootstrap() is None


@pytest.mark.unit
class TestLogger:
    def test_console_only_by_default(self):
        log = setup_logger("nutforge.test.console")
        try:
            assert not log.propagate
            assert [type(h) for h in log.handlers] == [logging.StreamHandler]
        finally:
            log.handlers.clear()

    def test_file_handler_when_log_dir_set(self, tmp_path, monkeypatch):
        monkeypatch.setenv("NUTFORGE_LOG_DIR", str(tmp_path / "logs"))
        get_settings.cache_clear()
        log = setup_logger("nutforge.test.file")
        try:
            assert len(log.handlers) == 2
            assert (tmp_path / "logs").is_dir()
        finally:
            for h in log.handlers:
                h.close()
            log.handlers.clear()

    def test_setup_is_idempotent(self):
        log = setup_logger("nutforge.test.idem")
        try:
            assert setup_logger("nutforge.test.idem") is log
            assert len(log.handlers) == 1
        finally:
            log.handlers.clear()


@pytest.mark.unit
class TestChunker:
    def test_lazy_and_ragged(self):
        assert list(chunker(iter(range(7)), 3)) == [[0, 1, 2], [3, 4, 5], [6]]
        assert list(chunker([], 3)) == []

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            list(chunker([1], 0))


@pytest.mark.unit
class TestOrderedMap:
    def test_order_is_input_order(self):
        """Later items finish first but results still follow the input."""

        def slow_for_small(x):
            time.sleep(0.002 * (10 - x))
            return x * x

        assert ordered_map(slow_for_small, list(range(10)), workers=4) == [
            x * x for x in range(10)
        ]

    def test_inline_when_single_worker(self):
        seen = []
        ordered_map(lambda x: seen.append(threading.current_thread().name), [1, 2], workers=1)
        assert set(seen) == {threading.current_thread().name}

    def test_failure_propagates(self):
        def boom(x):
            if x == 3:
                raise ZeroDivisionError("x=3")
            return x

        with pytest.raises(ZeroDivisionError):
            ordered_map(boom, list(range(6)), workers=3)


@pytest.mark.unit
class TestFirstMatch:
    @staticmethod
    def first_multiple_of_seven(chunk):
        return next((x for x in chunk if x and x % 7 == 0), None)

    @pytest.mark.parametrize("workers", [1, 2, 5])
    @pytest.mark.parametrize("chunk_size", [1, 3, 100])
    def test_same_answer_as_sequential(self, workers, chunk_size):
        assert first_match(self.first_multiple_of_seven, range(50), chunk_size, workers) == 7

    def test_no_match(self):
        assert first_match(self.first_multiple_of_seven, range(1, 7), 2, 2) is None

    def test_stops_early(self):
        """Nothing past the winning round is pulled from the candidate stream."""
        pulled = []

        def stream():
            for x in range(1000):
                pulled.append(x)
                yield x

        assert first_match(self.first_multiple_of_seven, stream(), 4, 2) == 7
        assert max(pulled) < 16
