from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any

try:  # Python 3.11+
    import tomllib
except ModuleNotFoundError:  # Python 3.10 fallback
    import tomli as tomllib

from nutforge.core.intpoly import IntPolynomial, parse_poly
from nutforge.core.settings import get_settings

logger = logging.getLogger(__name__)

REMAINDERS_FILE = "z.toml"


@dataclass(frozen=True)
class AppendixConfig:
    """One residue-sweep appendix: which families, and the index list it covers."""

    key: str
    order: int
    description: str
    families: tuple[str, ...]
    primes: tuple[int, ...]
    max_exponents: tuple[int, ...]
    forbidden_together: tuple[frozenset[int], ...]
    min_index: int
    expected_indices: tuple[int, ...]


@dataclass(frozen=True)
class RemainderTable:
    z: int
    remainders: dict[int, IntPolynomial]


def _as_table(value: Any, where: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise ValueError(f"Invalid config: expected table at {where}")
    return value


def _as_str(value: Any, where: str) -> str:
    if not isinstance(value, str) or value.strip() == "":
        raise ValueError(f"Invalid config: expected non-empty string at {where}")
    return value.strip()


def _as_int(
    value: Any, where: str, *, minimum: int | None = None, default: int | None = None
) -> int:
    if value is None:
        if default is None:
            raise ValueError(f"Invalid config: expected int at {where}")
        return default
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"Invalid config: expected int at {where}")
    if minimum is not None and value < minimum:
        raise ValueError(f"Invalid config: expected {where} >= {minimum}")
    return int(value)


def _as_int_list(value: Any, where: str, *, minimum: int | None = None) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise ValueError(f"Invalid config: expected list of ints at {where}")
    return tuple(_as_int(v, f"{where}[{i}]", minimum=minimum) for i, v in enumerate(value))


def _as_str_list(value: Any, where: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not value:
        raise ValueError(f"Invalid config: expected non-empty list of strings at {where}")
    return tuple(_as_str(v, f"{where}[{i}]") for i, v in enumerate(value))


def _as_poly(value: Any, where: str) -> IntPolynomial:
    text = _as_str(value, where)
    try:
        return parse_poly(text)
    except ValueError as e:
        raise ValueError(f"Invalid config: bad polynomial at {where}: {e}") from e


def _package_appendix_dir() -> Path:
    """
    NUTFORGE_APPENDIX_DIR wins when it points at an existing directory;
    otherwise the data shipped inside the package is used.
    """
    custom_dir = get_settings().appendix.config_dir
    if custom_dir:
        custom_path = Path(custom_dir).resolve()
        if custom_path.exists() and custom_path.is_dir():
            logger.info(f"Using external appendix directory: {custom_path}")
            return custom_path
        logger.warning(f"NUTFORGE_APPENDIX_DIR set but path does not exist: {custom_path}")

    default_path = Path(__file__).resolve().parents[1] / "appendices"
    logger.debug(f"Using packaged appendix directory: {default_path}")
    return default_path


def _load_one(path: Path) -> AppendixConfig:
    data = tomllib.loads(path.read_text(encoding="utf-8"))

    app = _as_table(data.get("appendix"), f"{path.name}.[appendix]")
    cons = _as_table(data.get("constraints"), f"{path.name}.[constraints]")
    expected = _as_table(data.get("expected"), f"{path.name}.[expected]")

    primes = _as_int_list(cons.get("primes"), f"{path.name}.[constraints].primes", minimum=2)
    max_exponents = _as_int_list(
        cons.get("max_exponents"), f"{path.name}.[constraints].max_exponents", minimum=0
    )
    if len(primes) != len(max_exponents):
        raise ValueError(
            f"Invalid config: {path.name}.[constraints] primes and max_exponents differ in length"
        )

    forbidden_raw = cons.get("forbidden_together", [])
    if not isinstance(forbidden_raw, list):
        raise ValueError(f"Invalid config: expected list at {path.name}.[constraints].forbidden")
    forbidden = tuple(
        frozenset(_as_int_list(group, f"{path.name}.[constraints].forbidden_together[{i}]"))
        for i, group in enumerate(forbidden_raw)
    )

    return AppendixConfig(
        key=_as_str(app.get("key"), f"{path.name}.[appendix].key"),
        order=_as_int(app.get("order"), f"{path.name}.[appendix].order", default=100),
        description=_as_str(app.get("description"), f"{path.name}.[appendix].description"),
        families=_as_str_list(app.get("families"), f"{path.name}.[appendix].families"),
        primes=primes,
        max_exponents=max_exponents,
        forbidden_together=forbidden,
        min_index=_as_int(
            cons.get("min_index"), f"{path.name}.[constraints].min_index", minimum=1, default=3
        ),
        expected_indices=_as_int_list(
            expected.get("indices"), f"{path.name}.[expected].indices", minimum=1
        ),
    )


@lru_cache(maxsize=1)
def load_appendix_configs() -> list[AppendixConfig]:
    root = _package_appendix_dir()
    if not root.exists():
        raise RuntimeError(f"Appendix config dir not found: {root}")

    configs: list[AppendixConfig] = []
    seen: set[str] = set()

    for path in sorted(root.glob("*.toml")):
        if path.name.startswith("_") or path.name == REMAINDERS_FILE:
            continue

        try:
            cfg = _load_one(path)
            if cfg.key in seen:
                raise ValueError(f"Duplicate appendix key: {cfg.key}")
            seen.add(cfg.key)
            configs.append(cfg)
        except ValueError as e:
            logger.error(f"Config validation error in {path.name}: {e}")
            continue
        except Exception as e:
            logger.error(f"Config load error in {path.name}: {type(e).__name__}: {e}")
            continue

    configs.sort(key=lambda c: (c.order, c.key))

    if not configs:
        logger.warning(f"No valid appendix config files loaded from: {root}")

    return configs


def get_appendix_config(key: str) -> AppendixConfig | None:
    return next((c for c in load_appendix_configs() if c.key == key), None)


@lru_cache(maxsize=1)
def load_remainder_tables() -> dict[int, RemainderTable]:
    """Stored remainders Z_j mod Φ_b, keyed by j."""
    path = _package_appendix_dir() / REMAINDERS_FILE
    data = tomllib.loads(path.read_text(encoding="utf-8"))
    section = _as_table(data.get("remainders"), f"{path.name}.[remainders]")

    tables: dict[int, RemainderTable] = {}
    for name, rows in section.items():
        where = f"{path.name}.[remainders.{name}]"
        if not (name.startswith("Z") and name[1:].isdigit()):
            raise ValueError(f"Invalid config: expected Z<j> at {where}")
        j = int(name[1:])
        table = _as_table(rows, where)
        remainders: dict[int, IntPolynomial] = {}
        for b_text, poly_text in table.items():
            if not b_text.isdigit() or int(b_text) < 1:
                raise ValueError(f"Invalid config: expected positive index key at {where}.{b_text}")
            remainders[int(b_text)] = _as_poly(poly_text, f"{where}.{b_text}")
        tables[j] = RemainderTable(z=j, remainders=remainders)
    return tables
