"""
Nut-graph decision procedures.

Provides:
- The spectral test: n even, balanced generators, and no Φ_b (b | n, b >= 3)
  dividing the eigenvalue polynomial
- An exact null-space oracle (fraction-free elimination, rational
  back-substitution) on the adjacency matrix
- A cross-check harness that runs both and refuses to return on disagreement
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from nutforge.core.circulant import CirculantSpec, adjacency, balanced_parity, eigen_poly
from nutforge.core.cyclotomic import divides_phi, divisors
from nutforge.core.errors import OracleDisagreementError, UnsupportedSpecError, ValidationError
from nutforge.dtos.dto import FailureKind, KernelBasis, NutCertificate, NutFailure

try:
    from nutforge.utils.logger import logger
except ImportError:
    import logging

    logger = logging.getLogger(__name__)

SPECTRAL = "spectral"
KERNEL = "kernel"
BOTH = "both"


def spectral_nut_test(spec: CirculantSpec) -> NutCertificate:
    """Decide the nut property from the eigenvalue polynomial.

    Divisors b of n are tried in ascending order, so a failing certificate
    names the smallest cyclotomic index at which P vanishes.

    Raises:
        ValidationError: n < 2.
        UnsupportedSpecError: n/2 is a generator (kernel path only).
    """
    if spec.n < 2:
        raise ValidationError(f"spectral test needs n >= 2, got n={spec.n}")
    if spec.n % 2:
        return _negative(spec, SPECTRAL, NutFailure(FailureKind.ODD_ORDER))
    if spec.has_half:
        raise UnsupportedSpecError(
            f"{spec} contains the generator n/2, which the spectral criterion does not "
            "cover; use --method kernel"
        )
    if not balanced_parity(spec):
        return _negative(spec, SPECTRAL, NutFailure(FailureKind.UNBALANCED))

    poly = eigen_poly(spec)
    for b in divisors(spec.n):
        if b < 3:
            continue
        if divides_phi(b, poly):
            return _negative(spec, SPECTRAL, NutFailure(FailureKind.VANISHING_AT, b))
    return NutCertificate(verdict=True, method=SPECTRAL, n=spec.n, gens=spec.gens)


def kernel_oracle(matrix: Sequence[Sequence[int]]) -> KernelBasis:
    """Exact rational null-space basis of a square integer matrix.

    Bareiss fraction-free elimination brings the matrix to row echelon form
    over the integers (every intermediate division is exact); the kernel is
    then read off by rational back-substitution, one basis vector per free
    column.
    """
    rows = [list(r) for r in matrix]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValidationError("kernel oracle expects a square matrix")

    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(size):
        if r == size:
            break
        pivot_row = next((i for i in range(r, size) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        top = rows[r]
        p = top[c]
        for i in range(r + 1, size):
            row = rows[i]
            f = row[c]
            if f == 0:
                if p != prev:
                    rows[i] = row[:c] + [p * row[j] // prev for j in range(c, size)]
                continue
            rows[i] = row[:c] + [(p * row[j] - f * top[j]) // prev for j in range(c, size)]
        prev = p
        pivots.append(c)
        r += 1

    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(size) if c not in pivot_set]

    vectors: list[tuple[Fraction, ...]] = []
    for f in free:
        x = [Fraction(0)] * size
        x[f] = Fraction(1)
        for k in range(rank - 1, -1, -1):
            pc = pivots[k]
            row = rows[k]
            acc = sum((row[j] * x[j] for j in range(pc + 1, size) if row[j]), Fraction(0))
            x[pc] = -acc / row[pc]
        vectors.append(tuple(x))

    return KernelBasis(vectors=tuple(vectors), rank=rank)


def kernel_nut_test(spec: CirculantSpec) -> NutCertificate:
    """Nut iff the adjacency kernel is one-dimensional with a full-support vector.

    Raises:
        ValidationError: n < 2; the single vertex is not a nut graph.
    """
    if spec.n < 2:
        raise ValidationError(f"kernel test needs n >= 2, got n={spec.n}")
    basis = kernel_oracle(adjacency(spec))
    if basis.nullity != 1:
        return _negative(spec, KERNEL, NutFailure(FailureKind.NULLITY, basis.nullity))
    if any(v == 0 for v in basis.vectors[0]):
        return _negative(spec, KERNEL, NutFailure(FailureKind.ZERO_ENTRY))
    return NutCertificate(verdict=True, method=KERNEL, n=spec.n, gens=spec.gens)


def cross_check(spec: CirculantSpec) -> NutCertificate:
    """Run both oracles and return the shared verdict.

    Specs containing n/2 fall outside the spectral criterion; those are
    decided by the kernel oracle alone.

    Raises:
        OracleDisagreementError: the two verdicts differ.
    """
    kernel = kernel_nut_test(spec)
    try:
        spectral = spectral_nut_test(spec)
    except UnsupportedSpecError:
        logger.info(f"{spec}: generator n/2 present, kernel verdict only")
        return kernel

    if spectral.verdict != kernel.verdict:
        logger.error(
            f"❌ Oracle disagreement on {spec}: {spectral.describe()} vs {kernel.describe()}"
        )
        raise OracleDisagreementError(spectral, kernel)

    return NutCertificate(
        verdict=spectral.verdict,
        method=BOTH,
        n=spec.n,
        gens=spec.gens,
        failure=spectral.failure,
    )


def run_method(spec: CirculantSpec, method: str) -> NutCertificate:
    if method == SPECTRAL:
        return spectral_nut_test(spec)
    if method == KERNEL:
        return kernel_nut_test(spec)
    if method == BOTH:
        return cross_check(spec)
    raise ValidationError(f"unknown method {method!r}")


def _negative(spec: CirculantSpec, method: str, failure: NutFailure) -> NutCertificate:
    return NutCertificate(verdict=False, method=method, n=spec.n, gens=spec.gens, failure=failure)
