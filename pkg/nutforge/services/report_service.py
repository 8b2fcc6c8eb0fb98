"""Text, JSON and CSV rendering of command results. Everything here is pure."""

import csv
import io
import json
from collections.abc import Iterable
from typing import Any

from nutforge.core.circulant import CirculantSpec, format_generators
from nutforge.dtos.dto import (
    AppendixReport,
    Construction,
    IdentityReport,
    NutCertificate,
    TableRow,
    ZCheckReport,
)

NONE_MARKER = "NONE"


def to_json(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def render_construction(result: Construction | None, *, as_json: bool = False) -> str:
    if as_json:
        return to_json(result.to_dict() if result else None)
    if result is None:
        return NONE_MARKER
    line = f"{format_generators(result.spec.gens)} [{result.case.value}]"
    if result.certificate is not None:
        line += f" verified={result.certificate.method}"
    return line


def render_certificate(cert: NutCertificate, *, as_json: bool = False) -> str:
    if as_json:
        return to_json(cert.to_dict())
    line = f"nut={_bool(cert.verdict)} method={cert.method}"
    if cert.failure is not None:
        line += f" failure={cert.failure}"
    return line


def render_membership(n: int, d: int, member: bool, *, as_json: bool = False) -> str:
    if as_json:
        return to_json({"n": n, "d": d, "member": member})
    return _bool(member)


def render_specs(specs: Iterable[CirculantSpec], *, as_json: bool = False) -> str:
    gens = [list(s.gens) for s in specs]
    if as_json:
        return to_json({"count": len(gens), "sets": gens})
    return "\n".join(format_generators(g) for g in gens)


def render_count(count: int, *, as_json: bool = False) -> str:
    return to_json({"count": count}) if as_json else str(count)


def render_table_grid(rows: list[TableRow]) -> str:
    """Wide CSV: one line per n, one column per degree."""
    degrees = sorted({r.d for r in rows})
    by_n: dict[int, dict[int, bool]] = {}
    for r in rows:
        by_n.setdefault(r.n, {})[r.d] = r.member

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", *degrees])
    for n in sorted(by_n):
        writer.writerow([n, *(_bool(by_n[n][d]) for d in degrees)])
    return buf.getvalue().rstrip("\n")


def render_table_long(rows: list[TableRow]) -> str:
    """Long CSV with the witness of every member cell."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "d", "member", "case", "generators"])
    for r in rows:
        c = r.construction
        writer.writerow(
            [
                r.n,
                r.d,
                _bool(r.member),
                c.case.value if c else "",
                format_generators(c.spec.gens) if c else "",
            ]
        )
    return buf.getvalue().rstrip("\n")


def render_table_json(rows: list[TableRow]) -> str:
    return to_json(
        [
            {
                "n": r.n,
                "d": r.d,
                "member": r.member,
                "construction": r.construction.to_dict() if r.construction else None,
            }
            for r in rows
        ]
    )


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def render_appendix(report: AppendixReport, *, as_json: bool = False) -> str:
    if as_json:
        return to_json(report.to_dict())
    lines = [
        f"{_status(report.passed)} {report.key}: {len(report.indices)} indices, "
        f"{report.residues_checked} reductions, min remainder terms {report.min_terms}"
        + (" (parity restricted)" if report.parity_restricted else ""),
        "indices: " + ",".join(map(str, report.indices)),
    ]
    if not report.list_matches:
        lines.append("expected: " + ",".join(map(str, report.expected)))
    for b, fam, r in report.violations:
        lines.append(f"violation: b={b} family={fam} t_residue={r}")
    return "\n".join(lines)


def render_z_check(report: ZCheckReport, *, as_json: bool = False) -> str:
    if as_json:
        return to_json(report.to_dict())
    lines = [
        f"{_status(report.passed)} z: {len(report.clean)} polynomials clean, "
        f"{report.entries_checked} stored remainders checked"
    ]
    for j, found in sorted(report.divisors_found.items()):
        if found:
            lines.append(f"Z{j} divisible by Φ_b for b in {found}")
    for j, diff in sorted(report.coverage_mismatches.items()):
        lines.append(f"Z{j} table coverage differs at b in {diff}")
    for j, b, expected, actual in report.mismatches:
        lines.append(f"Z{j} mod Φ_{b}: stored {expected}, computed {actual}")
    return "\n".join(lines)


def render_identities(report: IdentityReport, *, as_json: bool = False) -> str:
    if as_json:
        return to_json(report.to_dict())
    lines = [
        f"{_status(report.passed)} identities: {report.checked} identity checks up to "
        f"t={report.t_max}, factorizations {'ok' if report.factorization_ok else 'FAILED'}"
    ]
    for case, t in report.failures:
        lines.append(f"identity failure: {case} t={t}")
    for name, t, beta in report.witness_gaps:
        lines.append(f"no unique remainder: {name} t={t} beta={beta}")
    return "\n".join(lines)
