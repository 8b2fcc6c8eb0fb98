"""
Cyclotomic polynomials, divisors, totients and the Filaseta-Schinzel
prime-cancellation reduction.
"""

from __future__ import annotations

import logging
import threading
from itertools import combinations

from nutforge.core.errors import ValidationError
from nutforge.core.intpoly import IntPolynomial, compose_power, divrem_monic

logger = logging.getLogger(__name__)

_PHI_CACHE: dict[int, IntPolynomial] = {}
_PHI_LOCK = threading.RLock()


def _require_positive(value: int, name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValidationError(f"{name} must be a positive integer, got {value!r}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, ``{prime: exponent}``."""
    _require_positive(n, "n")
    factors: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    _require_positive(n, "n")
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(b: int) -> int:
    _require_positive(b, "b")
    result = b
    for p in factorize(b):
        result = result // p * (p - 1)
    return result


def phi_poly(b: int) -> IntPolynomial:
    """The b-th cyclotomic polynomial.

    Squarefree b: (x^b - 1) divided by every Φ_d with d | b, d < b. When p^2
    divides b, Φ_b(x) = Φ_{b/p}(x^p) is used instead. Results are memoized
    under a lock so concurrent sweeps share one cache.
    """
    _require_positive(b, "b")
    cached = _PHI_CACHE.get(b)
    if cached is not None:
        return cached

    with _PHI_LOCK:
        cached = _PHI_CACHE.get(b)
        if cached is not None:
            return cached

        square = next((p for p, e in factorize(b).items() if e >= 2), None)
        if square is not None:
            poly = compose_power(phi_poly(b // square), square)
        else:
            poly = IntPolynomial.from_terms({b: 1, 0: -1})
            for d in divisors(b)[:-1]:
                poly, rem = divrem_monic(poly, phi_poly(d))
                if not rem.is_zero:
                    raise ArithmeticError(f"x^{b}-1 not divisible by Phi_{d}")
        _PHI_CACHE[b] = poly
        logger.debug(f"Phi_{b} computed, degree {poly.degree}")
        return poly


def divides_phi(b: int, p: IntPolynomial) -> bool:
    """True iff Φ_b divides ``p`` (i.e. ``p`` vanishes at the primitive b-th roots of unity)."""
    _, rem = divrem_monic(p, phi_poly(b))
    return rem.is_zero


def filaseta_groups(b: int, term_count: int) -> list[tuple[int, ...]]:
    """Reduced indices b / p^e, one tuple per admissible prime set of ``b``.

    A prime set is admissible when sum(p - 2) > term_count - 2. If Φ_b divides
    a polynomial with ``term_count`` nonzero terms, then every admissible set
    holds at least one index b' with Φ_b' dividing it as well.
    """
    _require_positive(b, "b")
    _require_positive(term_count, "term_count")
    factors = factorize(b)
    primes = sorted(factors)
    groups: list[tuple[int, ...]] = []
    for size in range(1, len(primes) + 1):
        for subset in combinations(primes, size):
            if sum(p - 2 for p in subset) > term_count - 2:
                groups.append(tuple(b // p ** factors[p] for p in subset))
    return groups


def filaseta_reduce(b: int, term_count: int) -> list[int]:
    """Every candidate reduced index over all admissible prime sets.

    Read disjunctively per prime set; filaseta_groups keeps the grouping.
    """
    return sorted({c for group in filaseta_groups(b, term_count) for c in group})


def indices_with_totient_at_most(bound: int) -> list[int]:
    """Every b with totient(b) <= bound.

    totient(b) >= sqrt(b / 2) for all b, so scanning up to 2*bound^2 + 2 is
    exhaustive.
    """
    if bound < 1:
        return []
    limit = 2 * bound * bound + 2
    return [b for b in range(1, limit + 1) if totient(b) <= bound]


def cyclotomic_divisors_upto(p: IntPolynomial, max_b: int) -> list[int]:
    """Every b <= max_b with Φ_b | p, testing only indices with φ(b) <= deg p."""
    if p.is_zero:
        raise ValidationError("cyclotomic_divisors_upto needs a nonzero polynomial")
    degree = p.degree
    return [
        b
        for b in range(1, max_b + 1)
        if totient(b) <= degree and divides_phi(b, p)
    ]
