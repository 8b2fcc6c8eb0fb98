from collections.abc import Iterable, Iterator
from itertools import islice
from typing import TypeVar

T = TypeVar("T")


def chunker(items: Iterable[T], size: int) -> Iterator[list[T]]:
    """Split any iterable (lazy generators included) into lists of ``size``."""
    if size < 1:
        raise ValueError(f"chunk size must be >= 1, got {size}")
    it = iter(items)
    while chunk := list(islice(it, size)):
        yield chunk
