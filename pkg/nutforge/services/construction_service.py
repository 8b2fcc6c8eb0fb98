"""
Circulant nut graph constructions.

Provides:
- The membership predicate for the set of orders admitting a d-regular
  circulant nut graph
- The explicit generator-set families (odd t interval forms, n ≡ 2 (mod 4),
  the order 4t+8 sets, S′ for 8 | n and S″ for n ≡ 4 (mod 8))
- A total dispatcher and the bounded searches it falls back on
- Exhaustive enumeration and the existence table
"""

from collections.abc import Iterator
from functools import partial
from itertools import combinations
from math import comb

from nutforge.core.circulant import CirculantSpec
from nutforge.core.errors import (
    DispatchError,
    EnumerationCapError,
    PreconditionError,
    ValidationError,
)
from nutforge.core.settings import get_settings
from nutforge.dtos.dto import Construction, ConstructionCase, TableRow
from nutforge.services.nutcheck_service import cross_check, spectral_nut_test
from nutforge.utils.common import chunker
from nutforge.workers.search_worker import first_match, ordered_map

try:
    from nutforge.utils.logger import logger
except ImportError:
    import logging

    logger = logging.getLogger(__name__)


def _require_int(value: int, name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} must be an integer, got {value!r}")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def membership(n: int, d: int) -> bool:
    """True iff some d-regular circulant nut graph of order n exists."""
    _require_int(n, "n")
    _require_int(d, "d")
    if d <= 0 or d % 4 or n < 1 or n % 2:
        return False
    if d % 8 == 4:
        return n >= d + 4
    if d == 8:
        return n == 14 or n >= 18
    return n >= d + 6


# ---------- explicit generator sets ----------


def thm2_set(t: int, n: int) -> CirculantSpec:
    """Odd t, 4 | n: {1..t-1} ∪ {n/4, n/4+1} ∪ {n/2-t+1 .. n/2-1}."""
    _require(t >= 1 and t % 2 == 1, f"t must be odd and positive, got t={t}")
    _require(n % 4 == 0 and n >= 4 * t + 4, f"need 4 | n and n >= {4 * t + 4}, got n={n}")
    q, h = n // 4, n // 2
    return CirculantSpec(n, [*range(1, t), q, q + 1, *range(h - t + 1, h)])


def thm3_set(t: int, n: int) -> CirculantSpec:
    """n ≡ 2 (mod 4): {1..t-1} ∪ {(n+2)/4, (n+6)/4} ∪ {n/2-t+1 .. n/2-1}."""
    _require(t >= 1, f"t must be positive, got t={t}")
    _require(n % 4 == 2 and n >= 4 * t + 6, f"need n ≡ 2 (mod 4) and n >= {4 * t + 6}, got n={n}")
    h = n // 2
    return CirculantSpec(n, [*range(1, t), (n + 2) // 4, (n + 6) // 4, *range(h - t + 1, h)])


def lemma_4t8_set(t: int) -> CirculantSpec:
    """Order 4t+8 with even t >= 4: {1..2t+3} minus three generators depending on t mod 4."""
    _require(t >= 4 and t % 2 == 0, f"t must be even and >= 4, got t={t}")
    removed = {t + 1, t + 3, t + 4} if t % 4 == 0 else {t - 2, t + 1, t + 3}
    return CirculantSpec(4 * t + 8, [s for s in range(1, 2 * t + 4) if s not in removed])


def thm_sprime_set(t: int, n: int) -> CirculantSpec:
    """S′ for even t >= 4 and 8 | n, n >= 4t+16."""
    _require(t >= 4 and t % 2 == 0, f"t must be even and >= 4, got t={t}")
    _require(n % 8 == 0 and n >= 4 * t + 16, f"need 8 | n and n >= {4 * t + 16}, got n={n}")
    q, h = n // 4, n // 2
    gens = [
        *range(1, t - 2),
        t - 1,
        t,
        q,
        q + 2,
        h - t,
        h - t + 1,
        *range(h - t + 3, h),
    ]
    return CirculantSpec(n, gens)


def thm_sdprime_set(t: int, n: int) -> CirculantSpec:
    """S″ for even t >= 4 and n ≡ 4 (mod 8), n >= 4t+12."""
    _require(t >= 4 and t % 2 == 0, f"t must be even and >= 4, got t={t}")
    _require(
        n % 8 == 4 and n >= 4 * t + 12, f"need n ≡ 4 (mod 8) and n >= {4 * t + 12}, got n={n}"
    )
    q, h = n // 4, n // 2
    return CirculantSpec(n, [*range(1, t), q - 1, q + 3, *range(h - t + 1, h)])


def thm1_applies(t: int, n: int) -> bool:
    return (
        t >= 3
        and t % 2 == 1
        and t % 10 != 1
        and t % 18 != 15
        and n % 2 == 0
        and n >= 4 * t + 4
    )


def thm1_set(t: int, n: int) -> CirculantSpec:
    """Interval form {1..2t+1} \\ {t}.

    Needs odd t with t ≢ 1 (mod 10) and t ≢ 15 (mod 18), and even n >= 4t+4.
    """
    _require(
        thm1_applies(t, n),
        f"interval construction needs odd t >= 3 with t ≢ 1 (mod 10), t ≢ 15 (mod 18) "
        f"and even n >= 4t+4, got t={t}, n={n}",
    )
    return CirculantSpec(n, [s for s in range(1, 2 * t + 2) if s != t])


# ---------- searches ----------


def _balanced_candidates(n: int, size: int) -> Iterator[tuple[int, ...]]:
    """Balanced size-element subsets of {1..n/2-1}, lexicographic."""
    for gens in combinations(range(1, n // 2), size):
        odd = sum(s & 1 for s in gens)
        if 2 * odd == size:
            yield gens


def _nuts_in_chunk(n: int, chunk: list[tuple[int, ...]]) -> list[CirculantSpec]:
    found = []
    for gens in chunk:
        spec = CirculantSpec(n, gens)
        if spectral_nut_test(spec).verdict:
            found.append(spec)
    return found


def _first_nut_in_chunk(n: int, chunk: list[tuple[int, ...]]) -> CirculantSpec | None:
    for gens in chunk:
        spec = CirculantSpec(n, gens)
        if spectral_nut_test(spec).verdict:
            return spec
    return None


def candidate_count(n: int, d: int) -> int:
    """Number of size d/2 subsets of {1..n/2-1} an exhaustive search has to consider."""
    if n < 2 or n % 2 or d <= 0 or d % 4:
        return 0
    return comb(n // 2 - 1, d // 2)


def search_first_nut(n: int, size: int) -> CirculantSpec | None:
    """Lexicographically first balanced nut generator set of the given size."""
    if n < 2 or n % 2 or size < 2 or size % 2:
        return None
    settings = get_settings().search
    return first_match(
        partial(_first_nut_in_chunk, n),
        _balanced_candidates(n, size),
        settings.chunk_size,
        settings.workers,
    )


def enumerate_nuts(
    n: int, d: int, *, first: bool = False, force: bool = False
) -> Iterator[CirculantSpec]:
    """
    Every d-regular circulant nut graph of order n, lexicographic by generator set.

    Args:
        n: Order
        d: Degree
        first: Stop after the first hit
        force: Ignore the enumeration cap

    Raises:
        EnumerationCapError: the candidate count exceeds NUTFORGE_ENUM_CAP and force is off
    """
    _require_int(n, "n")
    _require_int(d, "d")
    total = candidate_count(n, d)
    if total == 0:
        return

    settings = get_settings().search
    if total > settings.enumeration_cap and not force:
        raise EnumerationCapError(
            f"{total} candidate sets for n={n}, d={d} exceed the cap of "
            f"{settings.enumeration_cap}; pass --force to run anyway"
        )

    logger.info(f"🔎 Enumerating {total} candidate sets for n={n}, d={d}")
    if first:
        hit = search_first_nut(n, d // 2)
        if hit is not None:
            yield hit
        return

    chunks = chunker(_balanced_candidates(n, d // 2), settings.chunk_size)
    scan = partial(_nuts_in_chunk, n)
    while batch := [c for _, c in zip(range(settings.workers), chunks)]:
        for found in ordered_map(scan, batch, settings.workers):
            yield from found


# ---------- dispatcher ----------


def _dispatch(n: int, d: int, prefer_interval: bool) -> Construction:
    t = d // 4
    if t % 2 == 1:
        if prefer_interval and thm1_applies(t, n):
            return Construction(thm1_set(t, n), ConstructionCase.THM1_INTERVAL)
        if n % 4 == 0:
            return Construction(thm2_set(t, n), ConstructionCase.THM2_ODD_T)
    if n % 4 == 2:
        return Construction(thm3_set(t, n), ConstructionCase.THM3)
    if t >= 4 and t % 2 == 0:
        if n == 4 * t + 8:
            case = (
                ConstructionCase.LEM_4T8_4_DIVIDES_T
                if t % 4 == 0
                else ConstructionCase.LEM_4T8_T_2_MOD_4
            )
            return Construction(lemma_4t8_set(t), case)
        if n % 8 == 0 and n >= 4 * t + 16:
            return Construction(thm_sprime_set(t, n), ConstructionCase.THM_SPRIME)
        if n % 8 == 4 and n >= 4 * t + 12:
            return Construction(thm_sdprime_set(t, n), ConstructionCase.THM_SDPRIME)
    if d == 8 and n % 4 == 0 and n >= 20:
        spec = search_first_nut(n, 4)
        if spec is not None:
            return Construction(spec, ConstructionCase.SEARCH_D8)
    raise DispatchError(f"membership holds for n={n}, d={d} but no construction applies")


def construct(
    n: int, d: int, *, prefer_interval: bool = False, verify: bool = False
) -> Construction | None:
    """
    Generator set of a d-regular circulant nut graph of order n.

    Args:
        n: Order
        d: Degree
        prefer_interval: Use the {1..2t+1} \\ {t} form for odd t whenever it applies
        verify: Attach a cross-checked certificate

    Returns:
        The construction and its case, or None when no such graph exists

    Raises:
        DispatchError: membership holds but no case produced a nut graph
        OracleDisagreementError: verify found the two oracles disagreeing
    """
    if not membership(n, d):
        return None

    built = _dispatch(n, d, prefer_interval)
    if not verify:
        return built

    cert = cross_check(built.spec)
    if not cert.verdict:
        logger.error(f"❌ {built.case.value} produced a non-nut {built.spec}: {cert.describe()}")
        raise DispatchError(f"{built.case.value} produced {built.spec}, which is {cert.describe()}")
    return Construction(built.spec, built.case, cert)


def _table_row(cell: tuple[int, int], constructive: bool) -> TableRow:
    n, d = cell
    member = membership(n, d)
    if not (constructive and member):
        return TableRow(n, d, member)
    return TableRow(n, d, member, construct(n, d, verify=True))


def table_cells(nmax: int, dmax: int) -> list[tuple[int, int]]:
    return [(n, d) for n in range(2, nmax + 1, 2) for d in range(4, dmax + 1, 4)]


def existence_table(nmax: int, dmax: int, *, constructive: bool = False) -> list[TableRow]:
    """
    Membership over even 2 <= n <= nmax and d in {4, 8, .., dmax}.

    Rows come back ordered by n, then d. With ``constructive`` every member
    cell carries a witness that passed both oracles.
    """
    _require_int(nmax, "nmax")
    _require_int(dmax, "dmax")
    if nmax < 1 or dmax < 1:
        raise ValidationError(f"table bounds must be positive, got nmax={nmax}, dmax={dmax}")

    cells = table_cells(nmax, dmax)
    logger.info(f"📊 Existence table: {len(cells)} cells (constructive={constructive})")
    return ordered_map(
        partial(_table_row, constructive=constructive), cells, get_settings().search.workers
    )
