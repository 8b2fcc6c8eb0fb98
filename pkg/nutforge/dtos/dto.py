from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Any

from nutforge.core.circulant import CirculantSpec


class FailureKind(str, enum.Enum):
    ODD_ORDER = "odd-order"
    UNBALANCED = "unbalanced-generators"
    VANISHING_AT = "vanishing-at"
    NULLITY = "nullity"
    ZERO_ENTRY = "zero-entry"


@dataclass(frozen=True)
class NutFailure:
    kind: FailureKind
    value: int | None = None

    def __str__(self) -> str:
        if self.value is None:
            return self.kind.value
        return f"{self.kind.value}({self.value})"


@dataclass(frozen=True)
class NutCertificate:
    verdict: bool
    method: str
    n: int
    gens: tuple[int, ...]
    failure: NutFailure | None = None

    def __post_init__(self) -> None:
        if self.verdict and self.failure is not None:
            raise ValueError("a positive certificate cannot carry a failure")
        if not self.verdict and self.failure is None:
            raise ValueError("a negative certificate needs a failure witness")

    def describe(self) -> str:
        return "nut" if self.verdict else f"not-nut[{self.failure}]"

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "verdict": self.verdict,
            "method": self.method,
            "n": self.n,
            "gens": list(self.gens),
        }
        if self.failure is not None:
            data["failure"] = str(self.failure)
        return data


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple[tuple[Fraction, ...], ...]
    rank: int

    @property
    def nullity(self) -> int:
        return len(self.vectors)

    def primitive_vectors(self) -> list[list[int]]:
        """Each basis vector scaled to coprime integers, first nonzero entry positive."""
        out: list[list[int]] = []
        for vec in self.vectors:
            denom = lcm(*(v.denominator for v in vec)) if vec else 1
            ints = [int(v * denom) for v in vec]
            g = 0
            for v in ints:
                g = gcd(g, v)
            if g > 1:
                ints = [v // g for v in ints]
            lead = next((v for v in ints if v), 0)
            if lead < 0:
                ints = [-v for v in ints]
            out.append(ints)
        return out


class ConstructionCase(str, enum.Enum):
    THM2_ODD_T = "THM2-odd-t-4|n"
    THM3 = "THM3-n≡4 2"
    LEM_4T8_4_DIVIDES_T = "LEM-4t8-4|t"
    LEM_4T8_T_2_MOD_4 = "LEM-4t8-t≡4 2"
    THM_SPRIME = "THM-S′-8|n"
    THM_SDPRIME = "THM-S″-n≡8 4"
    THM1_INTERVAL = "THM1-odd-t-interval"
    SEARCH_D8 = "SEARCH-d8-4|n"


@dataclass(frozen=True)
class Construction:
    spec: CirculantSpec
    case: ConstructionCase
    certificate: NutCertificate | None = None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "n": self.spec.n,
            "gens": list(self.spec.gens),
            "case": self.case.value,
        }
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        return data


@dataclass(frozen=True)
class TableRow:
    n: int
    d: int
    member: bool
    construction: Construction | None = None


@dataclass(frozen=True)
class IndexSweep:
    """Residue sweep of the reduced family polynomials at one cyclotomic index."""

    b: int
    residues: int
    min_terms: int
    violations: tuple[tuple[str, int], ...] = ()


@dataclass
class AppendixReport:
    key: str
    indices: list[int]
    expected: list[int]
    sweeps: list[IndexSweep] = field(default_factory=list)
    parity_restricted: bool = False

    @property
    def list_matches(self) -> bool:
        return self.indices == self.expected

    @property
    def violations(self) -> list[tuple[int, str, int]]:
        return [(s.b, fam, r) for s in self.sweeps for fam, r in s.violations]

    @property
    def residues_checked(self) -> int:
        return sum(s.residues for s in self.sweeps)

    @property
    def min_terms(self) -> int | None:
        return min((s.min_terms for s in self.sweeps), default=None)

    @property
    def passed(self) -> bool:
        return self.list_matches and not self.violations and len(self.sweeps) == len(self.expected)

    def to_dict(self) -> dict[str, Any]:
        return {
            "appendix": self.key,
            "passed": self.passed,
            "indices": self.indices,
            "expected": self.expected,
            "count": len(self.indices),
            "parity_restricted": self.parity_restricted,
            "residues_checked": self.residues_checked,
            "min_remainder_terms": self.min_terms,
            "violations": [
                {"b": b, "family": fam, "t_residue": r} for b, fam, r in self.violations
            ],
        }


@dataclass
class ZCheckReport:
    divisors_found: dict[int, list[int]] = field(default_factory=dict)
    coverage_mismatches: dict[int, list[int]] = field(default_factory=dict)
    mismatches: list[tuple[int, int, str, str]] = field(default_factory=list)
    entries_checked: int = 0

    @property
    def clean(self) -> list[int]:
        return sorted(j for j, found in self.divisors_found.items() if not found)

    @property
    def passed(self) -> bool:
        return (
            len(self.clean) == len(self.divisors_found)
            and not self.coverage_mismatches
            and not self.mismatches
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "appendix": "z",
            "passed": self.passed,
            "clean": self.clean,
            "divisors_found": {f"Z{j}": b for j, b in self.divisors_found.items() if b},
            "coverage_mismatches": {f"Z{j}": b for j, b in self.coverage_mismatches.items()},
            "entries_checked": self.entries_checked,
            "mismatches": [
                {"z": j, "b": b, "expected": exp, "actual": act}
                for j, b, exp, act in self.mismatches
            ],
        }


@dataclass
class IdentityReport:
    t_max: int
    failures: list[tuple[str, int]] = field(default_factory=list)
    factorization_ok: bool = True
    witness_gaps: list[tuple[str, int, int]] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures and self.factorization_ok and not self.witness_gaps

    def to_dict(self) -> dict[str, Any]:
        return {
            "appendix": "identities",
            "passed": self.passed,
            "t_max": self.t_max,
            "checked": self.checked,
            "factorization_ok": self.factorization_ok,
            "failures": [{"case": c, "t": t} for c, t in self.failures],
            "witness_gaps": [{"set": s, "t": t, "beta": b} for s, t, b in self.witness_gaps],
        }


@dataclass(frozen=True)
class CommandOutcome:
    """Exit code plus stdout payload and stderr message.

    Exit codes: 0 success, 1 false/none, 2 usage error, 3 internal error
    (oracle disagreement or dispatcher failure).
    """

    exit_code: int
    payload: str = ""
    error: str = ""

    SUCCESS = 0
    NEGATIVE = 1
    USAGE = 2
    DISAGREEMENT = 3
