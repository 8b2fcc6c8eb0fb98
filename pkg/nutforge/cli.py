"""
Command implementations behind ``python -m nutforge``.

Each ``cmd_*`` function returns a CommandOutcome instead of printing, so the
argparse front end and the tests share one code path. Input errors become
exit code 2; oracle disagreements and dispatcher failures are internal
errors and exit code 3.
"""

from __future__ import annotations

from collections.abc import Callable
from functools import wraps
from typing import ParamSpec

from nutforge.core.circulant import CirculantSpec, parse_generators
from nutforge.core.errors import DispatchError, OracleDisagreementError, ValidationError
from nutforge.dtos.dto import CommandOutcome
from nutforge.services import report_service
from nutforge.services.appendix_service import SWEEP_KEYS, appendix_check, identity_sweep, z_check
from nutforge.services.construction_service import (
    construct,
    enumerate_nuts,
    existence_table,
    membership,
)
from nutforge.services.nutcheck_service import BOTH, run_method

try:
    from nutforge.utils.logger import logger
except ImportError:
    import logging

    logger = logging.getLogger(__name__)

P = ParamSpec("P")

APPENDIX_CHOICES = (*SWEEP_KEYS, "z", "identities")
DEFAULT_TMAX = 60


def _exit(ok: bool) -> int:
    return CommandOutcome.SUCCESS if ok else CommandOutcome.NEGATIVE


def guarded(fn: Callable[P, CommandOutcome]) -> Callable[P, CommandOutcome]:
    """Map the library's error hierarchy onto the stable exit codes."""

    @wraps(fn)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> CommandOutcome:
        try:
            return fn(*args, **kwargs)
        except OracleDisagreementError as e:
            logger.error(f"❌ {e}")
            return CommandOutcome(CommandOutcome.DISAGREEMENT, error=str(e))
        except DispatchError as e:
            logger.error(f"❌ Dispatcher failure: {e}")
            return CommandOutcome(CommandOutcome.DISAGREEMENT, error=f"internal error: {e}")
        except ValidationError as e:
            return CommandOutcome(CommandOutcome.USAGE, error=str(e))

    return wrapper


@guarded
def cmd_construct(
    n: int,
    d: int,
    *,
    verify: bool = False,
    prefer_interval: bool = False,
    as_json: bool = False,
) -> CommandOutcome:
    result = construct(n, d, prefer_interval=prefer_interval, verify=verify)
    return CommandOutcome(
        _exit(result is not None), report_service.render_construction(result, as_json=as_json)
    )


@guarded
def cmd_verify(n: int, gens: str, *, method: str = BOTH, as_json: bool = False) -> CommandOutcome:
    spec = CirculantSpec(n, parse_generators(gens))
    cert = run_method(spec, method)
    return CommandOutcome(
        _exit(cert.verdict), report_service.render_certificate(cert, as_json=as_json)
    )


@guarded
def cmd_membership(n: int, d: int, *, as_json: bool = False) -> CommandOutcome:
    member = membership(n, d)
    return CommandOutcome(
        _exit(member), report_service.render_membership(n, d, member, as_json=as_json)
    )


@guarded
def cmd_enumerate(
    n: int,
    d: int,
    *,
    first: bool = False,
    count: bool = False,
    force: bool = False,
    as_json: bool = False,
) -> CommandOutcome:
    if n < 1 or d < 0:
        raise ValidationError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    specs = list(enumerate_nuts(n, d, first=first, force=force))
    if count:
        payload = report_service.render_count(len(specs), as_json=as_json)
    else:
        payload = report_service.render_specs(specs, as_json=as_json)
    return CommandOutcome(_exit(bool(specs)), payload)


@guarded
def cmd_table(
    nmax: int, dmax: int, *, constructive: bool = False, as_json: bool = False
) -> CommandOutcome:
    rows = existence_table(nmax, dmax, constructive=constructive)
    if as_json:
        payload = report_service.render_table_json(rows)
    elif constructive:
        payload = report_service.render_table_long(rows)
    else:
        payload = report_service.render_table_grid(rows)
    return CommandOutcome(CommandOutcome.SUCCESS, payload)


@guarded
def cmd_appendix(
    which: str,
    *,
    parity_restricted: bool | None = None,
    t_max: int = DEFAULT_TMAX,
    as_json: bool = False,
) -> CommandOutcome:
    if which == "z":
        z_report = z_check()
        return CommandOutcome(
            _exit(z_report.passed), report_service.render_z_check(z_report, as_json=as_json)
        )
    if which == "identities":
        id_report = identity_sweep(t_max)
        return CommandOutcome(
            _exit(id_report.passed), report_service.render_identities(id_report, as_json=as_json)
        )
    if which not in SWEEP_KEYS:
        raise ValidationError(f"unknown appendix {which!r}, expected one of {APPENDIX_CHOICES}")

    report = appendix_check(which, parity_restricted=parity_restricted)
    return CommandOutcome(
        _exit(report.passed), report_service.render_appendix(report, as_json=as_json)
    )
