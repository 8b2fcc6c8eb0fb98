"""
Exact arithmetic on univariate polynomials with integer coefficients.

Polynomials are stored densely, lowest power first, as tuples of Python ints
(arbitrary precision). A read-only sparse view (``SparseTerm``) exposes the
exponent sets used by the lacunary polynomial families.

Textual format used by the CLI and the appendix data files: space separated
``coeff^power`` terms, lowest power first, e.g. ``-2^0 2^2 -2^3``. The zero
polynomial is written ``0``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from nutforge.core.errors import ValidationError

logger = logging.getLogger(__name__)


def _trim(coeffs: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class SparseTerm:
    power: int
    coefficient: int


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[k]`` is the coefficient of x^k."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        raw = tuple(self.coeffs)
        for c in raw:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValidationError(f"polynomial coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(raw))

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> IntPolynomial:
        if power < 0:
            raise ValidationError(f"negative power {power}")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]] | Mapping[int, int]) -> IntPolynomial:
        """Build from ``(power, coefficient)`` pairs; colliding powers are summed."""
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for power, coefficient in pairs:
            if power < 0:
                raise ValidationError(f"negative power {power}")
            acc[power] = acc.get(power, 0) + coefficient
        if not acc:
            return cls.zero()
        dense = [0] * (max(acc) + 1)
        for power, coefficient in acc.items():
            dense[power] = coefficient
        return cls(tuple(dense))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def terms(self) -> tuple[SparseTerm, ...]:
        return tuple(SparseTerm(k, c) for k, c in enumerate(self.coeffs) if c)

    def powers(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coeffs) if c)

    @property
    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return add(self, other)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return sub(self, other)

    def __neg__(self) -> IntPolynomial:
        return scale(self, -1)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_poly(self)


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for k, c in enumerate(b.coeffs):
        out[k] += c
    return IntPolynomial(tuple(out))


def sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return add(a, scale(b, -1))


def scale(p: IntPolynomial, c: int) -> IntPolynomial:
    if c == 0:
        return IntPolynomial.zero()
    return IntPolynomial(tuple(c * x for x in p.coeffs))


def shift(p: IntPolynomial, k: int) -> IntPolynomial:
    """Multiply by x^k."""
    if k < 0:
        raise ValidationError(f"negative shift {k}")
    if p.is_zero:
        return p
    return IntPolynomial((0,) * k + p.coeffs)


def mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Schoolbook product."""
    if a.is_zero or b.is_zero:
        return IntPolynomial.zero()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(bc):
            if y:
                out[i + j] += x * y
    return IntPolynomial(tuple(out))


def divrem_monic(a: IntPolynomial, m: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Divide ``a`` by the monic polynomial ``m``.

    Returns ``(q, r)`` with ``a = q*m + r`` and ``deg r < deg m``. Both stay
    integral because ``m`` is monic.

    Raises:
        ValidationError: if ``m`` is zero or its leading coefficient is not 1.
    """
    if m.is_zero:
        raise ValidationError("division by the zero polynomial")
    if not m.is_monic:
        raise ValidationError(f"divisor must be monic, leading coefficient is {m.leading}")

    dm = m.degree
    if a.degree < dm:
        return IntPolynomial.zero(), a

    rem = list(a.coeffs)
    quot = [0] * (len(rem) - dm)
    mc = m.coeffs
    for k in range(len(rem) - 1, dm - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        base = k - dm
        quot[base] = c
        for i in range(dm):
            if mc[i]:
                rem[base + i] -= c * mc[i]
        rem[k] = 0
    return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dm]))


def split_even_odd(p: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Return ``(even_part, odd_part)`` with ``even_part + odd_part == p``."""
    even = [c if k % 2 == 0 else 0 for k, c in enumerate(p.coeffs)]
    odd = [c if k % 2 == 1 else 0 for k, c in enumerate(p.coeffs)]
    return IntPolynomial(tuple(even)), IntPolynomial(tuple(odd))


def compose_power(p: IntPolynomial, k: int) -> IntPolynomial:
    """Return p(x^k)."""
    if k < 1:
        raise ValidationError(f"compose_power needs k >= 1, got {k}")
    if k == 1 or p.is_zero:
        return p
    out = [0] * (p.degree * k + 1)
    for power, c in enumerate(p.coeffs):
        out[power * k] = c
    return IntPolynomial(tuple(out))


def value_at(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def parse_poly(text: str) -> IntPolynomial:
    """Parse the ``coeff^power`` textual format.

    Raises:
        ValidationError: on malformed terms, zero coefficients, negative or
            duplicate powers.
    """
    stripped = text.strip()
    if stripped in {"", "0"}:
        return IntPolynomial.zero()

    seen: dict[int, int] = {}
    for token in stripped.split():
        coeff_text, sep, power_text = token.partition("^")
        if not sep:
            raise ValidationError(f"malformed term {token!r}, expected coeff^power")
        try:
            coefficient = int(coeff_text)
            power = int(power_text)
        except ValueError as e:
            raise ValidationError(f"malformed term {token!r}: {e}") from e
        if power < 0:
            raise ValidationError(f"negative power in term {token!r}")
        if coefficient == 0:
            raise ValidationError(f"zero coefficient in term {token!r}")
        if power in seen:
            raise ValidationError(f"duplicate power {power} in {text!r}")
        seen[power] = coefficient
    return IntPolynomial.from_terms(seen)


def format_poly(p: IntPolynomial) -> str:
    if p.is_zero:
        return "0"
    return " ".join(f"{t.coefficient}^{t.power}" for t in p.terms())


class MonicReducer:
    """Reduce sparse polynomials modulo a fixed monic divisor.

    Keeps the remainders of x^0 .. x^(span-1) modulo ``modulus``; a sparse
    polynomial is then reduced as a linear combination of cached rows, which
    is what makes full residue sweeps over large cyclotomic indices cheap.
    """

    def __init__(self, modulus: IntPolynomial, span: int) -> None:
        if modulus.is_zero or not modulus.is_monic:
            raise ValidationError("MonicReducer needs a nonzero monic modulus")
        self.modulus = modulus
        self.span = span
        self.width = modulus.degree
        self._rows = self._build_rows()

    def _build_rows(self) -> list[list[int]]:
        width = self.width
        if width == 0:
            return []
        low = self.modulus.coeffs[:width]
        rows: list[list[int]] = []
        row = [1] + [0] * (width - 1)
        for _ in range(self.span):
            rows.append(row)
            carry = row[-1]
            nxt = [0] + row[:-1]
            if carry:
                nxt = [v - carry * m for v, m in zip(nxt, low)]
            row = nxt
        return rows

    def remainder_coeffs(self, terms: Iterable[tuple[int, int]]) -> list[int]:
        """Dense remainder coefficients (length ``width``) of ``sum c*x^p``."""
        acc = [0] * self.width
        if self.width == 0:
            return acc
        for power, coefficient in terms:
            if not 0 <= power < self.span:
                raise ValidationError(f"power {power} outside reducer span {self.span}")
            if coefficient:
                row = self._rows[power]
                acc = [a + coefficient * r for a, r in zip(acc, row)]
        return acc

    def remainder(self, terms: Iterable[tuple[int, int]]) -> IntPolynomial:
        return IntPolynomial(tuple(self.remainder_coeffs(terms)))
