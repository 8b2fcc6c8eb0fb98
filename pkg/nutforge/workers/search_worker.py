"""
Thread-pool helpers for the exhaustive searches and appendix sweeps.

Provides:
- ordered_map: parallel map whose result order matches the input order
- first_match: batched chunk scan that stops at the first hit in input order
"""

from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import TypeVar

from nutforge.utils.common import chunker

try:
    from nutforge.utils.logger import logger
except ImportError:
    import logging

    logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    """
    Apply ``fn`` to every item, in parallel when ``workers > 1``.

    Args:
        fn: Pure function of one item
        items: Inputs
        workers: Thread count; 1 runs inline

    Returns:
        Results in input order, independent of completion order

    Raises:
        Whatever ``fn`` raises; the first failure cancels pending tasks
    """
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    results: list[R | None] = [None] * len(items)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(fn, item): idx for idx, item in enumerate(items)}
        try:
            for future in as_completed(futures):
                results[futures[future]] = future.result()
        except Exception as e:
            logger.error(f"❌ Worker task failed: {type(e).__name__}: {e}")
            for f in futures:
                f.cancel()
            raise
    return results  # type: ignore[return-value]


def first_match(
    scan: Callable[[list[T]], R | None],
    candidates: Iterable[T],
    chunk_size: int,
    workers: int,
) -> R | None:
    """
    Scan ``candidates`` chunk by chunk and return the first non-None result.

    ``workers`` chunks are scanned per round; the earliest chunk with a hit
    wins, so the answer equals that of a sequential scan.
    """
    chunks = chunker(candidates, chunk_size)
    scanned = 0
    while True:
        batch = [c for _, c in zip(range(max(1, workers)), chunks)]
        if not batch:
            return None
        for hit in ordered_map(scan, batch, workers):
            if hit is not None:
                return hit
        scanned += sum(len(c) for c in batch)
        logger.debug(f"first_match: {scanned} candidates scanned")
