"""
Circulant graphs Circ(n, S): validation, adjacency matrix, degree and the
eigenvalue polynomial P(x) = sum over s in S of (x^s + x^(n-s)).
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from nutforge.core.errors import UnsupportedSpecError, ValidationError
from nutforge.core.intpoly import IntPolynomial

AdjacencyMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CirculantSpec:
    """Order ``n`` and generator set ``gens`` (canonicalized ascending).

    Duplicates and generators outside [1, n // 2] are rejected rather than
    silently fixed.
    """

    n: int
    gens: tuple[int, ...]

    def __init__(self, n: int, gens: Iterable[int]) -> None:
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValidationError(f"order must be a positive integer, got {n!r}")
        values = tuple(gens)
        for s in values:
            if isinstance(s, bool) or not isinstance(s, int):
                raise ValidationError(f"generator {s!r} is not an integer")
            if not 1 <= s <= n // 2:
                raise ValidationError(f"generator {s} out of range [1, {n // 2}] for n={n}")
        if len(set(values)) != len(values):
            raise ValidationError(f"duplicate generators in {list(values)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(sorted(values)))

    @property
    def has_half(self) -> bool:
        return self.n % 2 == 0 and self.n // 2 in self.gens

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "gens": list(self.gens)}

    def __str__(self) -> str:
        return f"Circ({self.n}, {{{', '.join(map(str, self.gens))}}})"


def parse_generators(text: str) -> tuple[int, ...]:
    """Parse ``1,2,6,7`` (no brackets) into a tuple of ints."""
    items = [item.strip() for item in text.split(",")]
    if not items or any(item == "" for item in items):
        raise ValidationError(f"malformed generator list {text!r}")
    try:
        return tuple(int(item) for item in items)
    except ValueError as e:
        raise ValidationError(f"malformed generator list {text!r}: {e}") from e


def format_generators(gens: Iterable[int]) -> str:
    return ",".join(str(s) for s in sorted(gens))


def _first_row(spec: CirculantSpec) -> list[int]:
    row = [0] * spec.n
    for s in spec.gens:
        row[s] = 1
        row[(spec.n - s) % spec.n] = 1
    return row


def adjacency(spec: CirculantSpec) -> AdjacencyMatrix:
    """Adjacency matrix; row r is row 0 rotated right by r."""
    row = _first_row(spec)
    n = spec.n
    return tuple(tuple(row[(c - r) % n] for c in range(n)) for r in range(n))


def degree(spec: CirculantSpec) -> int:
    return 2 * len(spec.gens) - (1 if spec.has_half else 0)


def eigen_poly(spec: CirculantSpec) -> IntPolynomial:
    """P(x) with P(ω^j) the j-th eigenvalue, ω a primitive n-th root of unity.

    Raises:
        UnsupportedSpecError: if n/2 is a generator.
    """
    if spec.has_half:
        raise UnsupportedSpecError(
            f"{spec} contains the generator n/2; the eigenvalue polynomial form "
            "needs all generators below n/2 (use the kernel method)"
        )
    return IntPolynomial(tuple(_first_row(spec)))


def balanced_parity(spec: CirculantSpec) -> bool:
    """Equally many odd and even generators, at least one of each, all below n/2."""
    if any(2 * s >= spec.n for s in spec.gens):
        return False
    odd = sum(1 for s in spec.gens if s % 2)
    even = len(spec.gens) - odd
    return odd == even and odd >= 1
