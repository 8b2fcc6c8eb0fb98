"""
Recomputation of the finite verifications behind the even-t constructions.

Provides:
- Index-list regeneration from prime-support constraints
- Full residue sweeps of the reduced family polynomials (one work item per
  cyclotomic index, merged in index order)
- The auxiliary polynomial check against the stored remainder tables
- The identity and unique-remainder sweeps over a range of t
"""

from functools import partial
from itertools import product

from nutforge.core.appendix_config_loader import (
    AppendixConfig,
    get_appendix_config,
    load_remainder_tables,
)
from nutforge.core.cyclotomic import divides_phi, indices_with_totient_at_most, phi_poly
from nutforge.core.errors import ValidationError
from nutforge.core.intpoly import MonicReducer, divrem_monic, format_poly
from nutforge.core.settings import get_settings
from nutforge.dtos.dto import AppendixReport, IdentityReport, IndexSweep, ZCheckReport
from nutforge.services.families_service import (
    Z_POLYS,
    ExponentSetName,
    FamilyKind,
    IdentityCase,
    factorizations_hold,
    lemma_identity_check,
    reduced_family_terms,
    witness_sweep,
)
from nutforge.workers.search_worker import ordered_map

try:
    from nutforge.utils.logger import logger
except ImportError:
    import logging

    logger = logging.getLogger(__name__)

SWEEP_KEYS = ("qt", "rt", "uwt")


def regenerate_indices(config: AppendixConfig) -> list[int]:
    """Every b >= min_index built from the allowed prime powers, minus forbidden prime groups."""
    indices = []
    for exponents in product(*(range(e + 1) for e in config.max_exponents)):
        support = {p for p, e in zip(config.primes, exponents) if e}
        if any(group <= support for group in config.forbidden_together):
            continue
        b = 1
        for p, e in zip(config.primes, exponents):
            b *= p**e
        if b >= config.min_index:
            indices.append(b)
    return sorted(indices)


def sweep_index(kinds: tuple[FamilyKind, ...], b: int, parity_restricted: bool) -> IndexSweep:
    """
    Reduce every family polynomial modulo Φ_b for each residue of t mod b.

    With ``parity_restricted`` only residues reachable by an even t are kept
    (all residues for odd b, even residues for even b).
    """
    reducer = MonicReducer(phi_poly(b), span=b)
    residues = [r for r in range(b) if not (parity_restricted and b % 2 == 0 and r % 2)]

    checked = 0
    min_terms: int | None = None
    violations: list[tuple[str, int]] = []
    for r in residues:
        for kind in kinds:
            coeffs = reducer.remainder_coeffs(reduced_family_terms(kind, b, r).items())
            nonzero = sum(1 for c in coeffs if c)
            checked += 1
            if nonzero == 0:
                violations.append((kind.value, r))
            min_terms = nonzero if min_terms is None else min(min_terms, nonzero)

    if violations:
        logger.error(f"❌ b={b}: Φ_b divides the reduced polynomial at {violations}")
    else:
        logger.info(f"✅ b={b}: {checked} reductions, min remainder terms {min_terms}")
    return IndexSweep(
        b=b, residues=checked, min_terms=min_terms or 0, violations=tuple(violations)
    )


def appendix_check(key: str, *, parity_restricted: bool | None = None) -> AppendixReport:
    """
    Regenerate the index list of one appendix and sweep every listed index.

    Raises:
        ValidationError: unknown appendix key
    """
    config = get_appendix_config(key)
    if config is None:
        raise ValidationError(f"unknown appendix {key!r}, expected one of {', '.join(SWEEP_KEYS)}")

    settings = get_settings()
    restricted = (
        settings.appendix.parity_restricted if parity_restricted is None else parity_restricted
    )
    kinds = tuple(FamilyKind(f) for f in config.families)
    indices = regenerate_indices(config)
    expected = list(config.expected_indices)

    if indices != expected:
        missing = sorted(set(expected) - set(indices))
        extra = sorted(set(indices) - set(expected))
        logger.error(
            f"❌ {key}: regenerated {len(indices)} indices, expected {len(expected)}; "
            f"missing={missing} extra={extra}"
        )

    logger.info(f"🚀 {key}: sweeping {len(expected)} indices for {'/'.join(config.families)}")
    sweeps = ordered_map(
        partial(sweep_index, kinds, parity_restricted=restricted),
        expected,
        settings.search.workers,
    )
    return AppendixReport(
        key=key,
        indices=indices,
        expected=expected,
        sweeps=sweeps,
        parity_restricted=restricted,
    )


def z_check() -> ZCheckReport:
    """Each Z_j has no cyclotomic factor, and every stored remainder matches."""
    tables = load_remainder_tables()
    report = ZCheckReport()

    for j, z in sorted(Z_POLYS.items()):
        candidates = indices_with_totient_at_most(z.degree)
        report.divisors_found[j] = [b for b in candidates if divides_phi(b, z)]

        table = tables.get(j)
        stored = set(table.remainders) if table else set()
        if stored != set(candidates):
            report.coverage_mismatches[j] = sorted(stored ^ set(candidates))

        if table is None:
            continue
        for b, expected in sorted(table.remainders.items()):
            _, actual = divrem_monic(z, phi_poly(b))
            report.entries_checked += 1
            if actual != expected:
                report.mismatches.append((j, b, format_poly(expected), format_poly(actual)))

    if report.passed:
        logger.info(f"✅ Z check: {report.entries_checked} stored remainders match")
    else:
        logger.error(f"❌ Z check failed: {report.to_dict()}")
    return report


def identity_sweep(t_max: int) -> IdentityReport:
    """Combination identities for every even t up to t_max, plus the witness sweeps."""
    if t_max < 4:
        raise ValidationError(f"t_max must be >= 4, got {t_max}")

    report = IdentityReport(t_max=t_max, factorization_ok=factorizations_hold())
    for t in range(4, t_max + 1, 2):
        for case in IdentityCase:
            if t < case.family.min_t:
                continue
            report.checked += 1
            if not lemma_identity_check(t, case):
                report.failures.append((case.value, t))

    betas = range(1, 2 * t_max + 3)
    for name in ExponentSetName:
        start = 4 if name is ExponentSetName.M else 6
        for t, beta in witness_sweep(name, range(start, t_max + 1, 2), betas):
            report.witness_gaps.append((name.value, t, beta))

    return report
