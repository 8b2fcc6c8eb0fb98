from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache


def _getenv(name: str, default: str | None = None) -> str | None:
    value = os.getenv(name)
    if value is None:
        return default
    value = value.strip()
    return value if value != "" else default


def _getenv_int(name: str, default: int) -> int:
    raw = _getenv(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _getenv_bool(name: str, default: bool) -> bool:
    raw = _getenv(name)
    if raw is None:
        return default
    return raw.lower() in {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class RuntimeSettings:
    log_dir: str | None
    log_level: str


@dataclass(frozen=True)
class SearchSettings:
    workers: int
    enumeration_cap: int
    chunk_size: int


@dataclass(frozen=True)
class AppendixSettings:
    config_dir: str | None
    parity_restricted: bool


@dataclass(frozen=True)
class Settings:
    runtime: RuntimeSettings
    search: SearchSettings
    appendix: AppendixSettings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    runtime = RuntimeSettings(
        log_dir=_getenv("NUTFORGE_LOG_DIR"),
        log_level=(_getenv("NUTFORGE_LOG_LEVEL", "WARNING") or "WARNING").upper(),
    )

    search = SearchSettings(
        workers=max(1, _getenv_int("NUTFORGE_THREADS", 1)),
        enumeration_cap=max(1, _getenv_int("NUTFORGE_ENUM_CAP", 10_000_000)),
        chunk_size=max(1, _getenv_int("NUTFORGE_CHUNK_SIZE", 2048)),
    )

    appendix = AppendixSettings(
        config_dir=_getenv("NUTFORGE_APPENDIX_DIR"),
        parity_restricted=_getenv_bool("NUTFORGE_PARITY_RESTRICTED", False),
    )

    return Settings(runtime=runtime, search=search, appendix=appendix)
