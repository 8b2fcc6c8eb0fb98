"""
Lacunary polynomial families behind the even-t constructions.

Provides:
- Q_t, R_t (S′ case) and U_t, W_t (S″ case) and their exponent-reduced forms
- The exponent sets L′_t, L″_t, M_t and the unique-remainder witness search
- The even/odd combination identities that rule out every cyclotomic factor
  outside a short list
- The fixed auxiliary polynomials Z_1 .. Z_9
- Sampled scans: cyclotomic divisors of a family member, prime pair checks
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from nutforge.core.cyclotomic import divides_phi, filaseta_groups, totient
from nutforge.core.errors import ValidationError
from nutforge.core.intpoly import IntPolynomial, mul, split_even_odd

try:
    from nutforge.utils.logger import logger
except ImportError:
    import logging

    logger = logging.getLogger(__name__)

# (coefficient, a, c) stands for coefficient * x^(a*t + c)
TermTemplate = tuple[int, int, int]


class FamilyKind(str, enum.Enum):
    Q = "Q"
    R = "R"
    U = "U"
    W = "W"

    @property
    def min_t(self) -> int:
        return 6 if self in (FamilyKind.Q, FamilyKind.R) else 4


FAMILY_TERMS: dict[FamilyKind, tuple[TermTemplate, ...]] = {
    FamilyKind.Q: (
        (2, 2, 1), (-2, 2, -1), (2, 2, -2),
        (1, 1, 3), (-1, 1, 2), (1, 1, -1), (-1, 1, -2),
        (-2, 0, 3), (2, 0, 2), (-2, 0, 0),
    ),
    FamilyKind.R: (
        (2, 2, 1), (-2, 2, -1), (2, 2, -2),
        (-1, 1, 3), (1, 1, 2), (-4, 1, 1), (4, 1, 0), (-1, 1, -1), (1, 1, -2),
        (-2, 0, 3), (2, 0, 2), (-2, 0, 0),
    ),
    FamilyKind.U: (
        (2, 2, -1),
        (1, 1, 3), (-1, 1, 2), (1, 1, 1), (-3, 1, 0),
        (3, 1, -1), (-1, 1, -2), (1, 1, -3), (-1, 1, -4),
        (-2, 0, 0),
    ),
    FamilyKind.W: (
        (2, 2, -1),
        (-1, 1, 3), (1, 1, 2), (-1, 1, 1), (-1, 1, 0),
        (1, 1, -1), (1, 1, -2), (-1, 1, -3), (1, 1, -4),
        (-2, 0, 0),
    ),
}  # fmt: skip


@dataclass(frozen=True)
class Family:
    kind: FamilyKind
    t: int

    def __post_init__(self) -> None:
        if isinstance(self.t, bool) or not isinstance(self.t, int):
            raise ValidationError(f"t must be an integer, got {self.t!r}")
        if self.t % 2 or self.t < self.kind.min_t:
            raise ValidationError(
                f"{self.kind.value}_t needs even t >= {self.kind.min_t}, got t={self.t}"
            )

    def __str__(self) -> str:
        return f"{self.kind.value}_{self.t}"


def _expand(templates: Iterable[TermTemplate], t: int) -> IntPolynomial:
    return IntPolynomial.from_terms((a * t + c, coeff) for coeff, a, c in templates)


def family_poly(family: Family) -> IntPolynomial:
    return _expand(FAMILY_TERMS[family.kind], family.t)


def reduced_family_terms(kind: FamilyKind, b: int, t_residue: int) -> dict[int, int]:
    """Exponents reduced mod b with t replaced by ``t_residue``; colliding terms summed."""
    if b < 1:
        raise ValidationError(f"b must be >= 1, got {b}")
    acc: Counter[int] = Counter()
    for coeff, a, c in FAMILY_TERMS[kind]:
        acc[(a * t_residue + c) % b] += coeff
    return {power: coeff for power, coeff in sorted(acc.items()) if coeff}


def reduced_family_poly(kind: FamilyKind, b: int, t_residue: int) -> IntPolynomial:
    return IntPolynomial.from_terms(reduced_family_terms(kind, b, t_residue))


# ---------- exponent sets ----------


class ExponentSetName(str, enum.Enum):
    L_PRIME = "L′"
    L_DPRIME = "L″"
    M = "M"


@dataclass(frozen=True)
class ExponentSet:
    name: ExponentSetName
    t: int
    powers: tuple[int, ...]


def exponent_set(name: ExponentSetName, t: int) -> ExponentSet:
    if t < 4 or t % 2:
        raise ValidationError(f"exponent sets need even t >= 4, got t={t}")
    if name is ExponentSetName.M:
        powers = {0, *range(t - 4, t + 4), 2 * t - 1}
    else:
        powers = {0, 2, 3, t - 2, t - 1, t + 2, t + 3, 2 * t - 2, 2 * t - 1, 2 * t + 1}
        if name is ExponentSetName.L_DPRIME:
            powers |= {t, t + 1}
    return ExponentSet(name, t, tuple(sorted(powers)))


def unique_remainder_witness(es: ExponentSet, beta: int) -> int | None:
    """Smallest element whose residue mod beta no other element shares."""
    if beta < 1:
        raise ValidationError(f"beta must be >= 1, got {beta}")
    counts = Counter(p % beta for p in es.powers)
    return next((p for p in es.powers if counts[p % beta] == 1), None)


def witness_betas(name: ExponentSetName, t: int, betas: Iterable[int]) -> list[int]:
    """The betas at which a witness is guaranteed for the given set and t."""
    floor = {ExponentSetName.L_PRIME: 10, ExponentSetName.L_DPRIME: 7, ExponentSetName.M: 6}[name]
    return [
        beta
        for beta in betas
        if beta >= floor and not (name is ExponentSetName.L_DPRIME and t % beta == 0)
    ]


def witness_sweep(
    name: ExponentSetName, t_values: Iterable[int], betas: Iterable[int]
) -> list[tuple[int, int]]:
    """Every (t, beta) with a guaranteed witness where none was found."""
    beta_list = list(betas)
    gaps = []
    for t in t_values:
        es = exponent_set(name, t)
        for beta in witness_betas(name, t, beta_list):
            if unique_remainder_witness(es, beta) is None:
                gaps.append((t, beta))
    if gaps:
        logger.error(f"❌ {name.value}: {len(gaps)} (t, beta) pairs without a unique remainder")
    return gaps


# ---------- combination identities ----------


class IdentityCase(str, enum.Enum):
    Q = "Q-case"
    R = "R-case"
    U = "U-case"
    W = "W-case"

    @property
    def family(self) -> FamilyKind:
        return FamilyKind(self.value[0])


# Doubled multipliers (2C, 2D) and right-hand sides of A*C + B*D = target
_QR_MULTIPLIERS: dict[IdentityCase, tuple[tuple[TermTemplate, ...], tuple[TermTemplate, ...]]] = {
    IdentityCase.Q: (
        ((2, 1, 7), (-2, 1, 5), (2, 1, 3), (-2, 1, 1),
         (1, 0, 9), (4, 0, 7), (-6, 0, 5), (8, 0, 3), (-3, 0, 1)),
        ((-2, 1, 4), (-2, 1, 0), (1, 0, 8), (-2, 0, 4), (4, 0, 2), (-3, 0, 0)),
    ),
    IdentityCase.R: (
        ((-2, 1, 7), (-6, 1, 5), (6, 1, 3), (2, 1, 1),
         (1, 0, 9), (12, 0, 7), (10, 0, 5), (16, 0, 3), (-3, 0, 1)),
        ((2, 1, 4), (8, 1, 2), (2, 1, 0), (1, 0, 8), (8, 0, 6), (14, 0, 4), (12, 0, 2), (-3, 0, 0)),
    ),
}  # fmt: skip

QR_TARGETS: dict[IdentityCase, IntPolynomial] = {
    IdentityCase.Q: IntPolynomial((0, 3, 0, -8, 0, 10, 0, -8, 0, 3)),
    IdentityCase.R: IntPolynomial((0, 3, 0, -16, 0, -6, 0, -16, 0, 3)),
}

_UW_MULTIPLIERS: dict[IdentityCase, IntPolynomial] = {
    IdentityCase.U: IntPolynomial((1, 0, 1, 0, 3, 0, 1)),
    IdentityCase.W: IntPolynomial((-1, 0, -1, 0, 1, 0, -1)),
}


def _product(*factors: IntPolynomial) -> IntPolynomial:
    acc = IntPolynomial.one()
    for f in factors:
        acc = mul(acc, f)
    return acc


_X = IntPolynomial((0, 1))
_X_MINUS_1 = IntPolynomial((-1, 1))
_X_PLUS_1 = IntPolynomial((1, 1))
_X2_PLUS_1 = IntPolynomial((1, 0, 1))
_X4_PLUS_1 = IntPolynomial((1, 0, 0, 0, 1))

QR_FACTORED: dict[IdentityCase, IntPolynomial] = {
    IdentityCase.Q: _product(
        _X, _X_MINUS_1, _X_MINUS_1, _X_PLUS_1, _X_PLUS_1, IntPolynomial((3, 0, -2, 0, 3))
    ),
    IdentityCase.R: _product(
        _X, IntPolynomial((-1, -2, 1)), IntPolynomial((-1, 2, 1)), IntPolynomial((3, 0, 2, 0, 3))
    ),
}

_UW_RHS_CORE: dict[IdentityCase, IntPolynomial] = {
    IdentityCase.U: _product(_X2_PLUS_1, _X2_PLUS_1, _X2_PLUS_1, _X2_PLUS_1, _X4_PLUS_1),
    IdentityCase.W: _product(
        _X_MINUS_1, _X_MINUS_1, _X_PLUS_1, _X_PLUS_1, _X2_PLUS_1, _X2_PLUS_1, _X4_PLUS_1
    ),
}


def factorizations_hold() -> bool:
    """The two right-hand sides of the Q/R identities equal their factored forms."""
    return all(QR_TARGETS[case] == QR_FACTORED[case] for case in QR_TARGETS)


def lemma_identity_check(t: int, which: IdentityCase) -> bool:
    """
    Verify the combination identity for one family member.

    Q/R: with A, B the even and odd parts of the family polynomial,
    A*C + B*D equals a fixed polynomial of degree 9 (checked doubled, so the
    multipliers stay integral). U/W: with A, B the odd and even parts,
    m(x)*A + 2x^(t+3)*B equals x^(t-3) times a product of cyclotomic factors
    of index 1, 2, 4 and 8.
    """
    family = Family(which.family, t)
    poly = family_poly(family)
    even, odd = split_even_odd(poly)

    if which in _QR_MULTIPLIERS:
        c2, d2 = (_expand(tpl, t) for tpl in _QR_MULTIPLIERS[which])
        lhs = mul(even, c2) + mul(odd, d2)
        ok = lhs == 2 * QR_TARGETS[which]
    else:
        lhs = mul(_UW_MULTIPLIERS[which], odd) + mul(IntPolynomial.monomial(t + 3, 2), even)
        ok = lhs == mul(IntPolynomial.monomial(t - 3), _UW_RHS_CORE[which])

    if not ok:
        logger.error(f"❌ {which.value} identity fails at t={t}")
    return ok


# ---------- fixed polynomials ----------

Z_POLYS: dict[int, IntPolynomial] = {
    1: IntPolynomial((1, 2, -2, 2, 1)),
    2: IntPolynomial((1, 0, -1, 2, -1, 0, 1)),
    3: IntPolynomial((1, -2, 3, -2, 3, -2, 1)),
    4: IntPolynomial((3, 0, -2, 0, 3)),
    5: IntPolynomial((-1, -2, 1)),
    6: IntPolynomial((-1, 2, 1)),
    7: IntPolynomial((3, 0, 2, 0, 3)),
    8: IntPolynomial((2, -2, 3, -2, 3, -2, 2)),
    9: IntPolynomial((2, 2, -1, 2, -2, 2, -1, 2, 2)),
}


def z_poly(j: int) -> IntPolynomial:
    if j not in Z_POLYS:
        raise ValidationError(f"Z index must be in [1, 9], got {j!r}")
    return Z_POLYS[j]


# ---------- sampled scans ----------


def family_cyclotomic_scan(kind: FamilyKind, t: int, max_b: int) -> list[int]:
    """Every b <= max_b with Φ_b dividing the family polynomial.

    Indices are visited in ascending order, so all smaller divisors are known
    when b is reached. b is skipped without a division when one of its
    filaseta_groups holds no known divisor.
    """
    poly = family_poly(Family(kind, t))
    terms = poly.term_count
    found: list[int] = []
    known: set[int] = set()
    for b in range(1, max_b + 1):
        if totient(b) > poly.degree:
            continue
        if any(known.isdisjoint(group) for group in filaseta_groups(b, terms)):
            continue
        if divides_phi(b, poly):
            found.append(b)
            known.add(b)
    return found


ALLOWED_CYCLOTOMIC: dict[FamilyKind, frozenset[int]] = {
    FamilyKind.Q: frozenset({1, 2}),
    FamilyKind.R: frozenset({1, 2}),
    FamilyKind.U: frozenset({1, 2, 4, 8}),
    FamilyKind.W: frozenset({1, 2, 4, 8}),
}


def prime_pair_check(kind: FamilyKind, t: int, p: int) -> bool:
    """True when neither Φ_p nor Φ_2p divides the family polynomial."""
    poly = family_poly(Family(kind, t))
    return not divides_phi(p, poly) and not divides_phi(2 * p, poly)
