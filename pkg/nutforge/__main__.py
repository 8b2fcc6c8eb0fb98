from __future__ import annotations

import argparse
import logging
import sys

from nutforge import __version__
from nutforge.cli import (
    APPENDIX_CHOICES,
    DEFAULT_TMAX,
    cmd_appendix,
    cmd_construct,
    cmd_enumerate,
    cmd_membership,
    cmd_table,
    cmd_verify,
)
from nutforge.core.bootstrap import bootstrap
from nutforge.core.settings import get_settings
from nutforge.dtos.dto import CommandOutcome
from nutforge.services.nutcheck_service import BOTH, KERNEL, SPECTRAL
from nutforge.utils.logger import logger


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nutforge", description="Circulant nut graphs: construct, verify, enumerate"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="as_json", action="store_true", help="Emit JSON")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="Generator set for (n, d) or NONE")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--verify", action="store_true", help="Cross-check the result")
    p.add_argument(
        "--prefer-interval",
        action="store_true",
        help="Use the {1..2t+1} minus {t} form for odd t when it applies",
    )

    p = sub.add_parser("verify", parents=[common], help="Decide whether Circ(n, S) is a nut graph")
    p.add_argument("n", type=int)
    p.add_argument("gens", help="Comma separated generators, e.g. 1,2,6,7")
    p.add_argument("--method", choices=(SPECTRAL, KERNEL, BOTH), default=BOTH)

    p = sub.add_parser("membership", parents=[common], help="Does a d-regular nut of order n exist")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)

    p = sub.add_parser("enumerate", parents=[common], help="Every nut generator set for (n, d)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--first", action="store_true", help="Stop at the first set found")
    mode.add_argument("--count", action="store_true", help="Print only the number of sets")
    p.add_argument("--force", action="store_true", help="Ignore NUTFORGE_ENUM_CAP")

    p = sub.add_parser("table", parents=[common], help="Existence grid as CSV")
    p.add_argument("nmax", type=int)
    p.add_argument("dmax", type=int)
    p.add_argument(
        "--constructive", action="store_true", help="Attach a verified witness to every true cell"
    )

    p = sub.add_parser("appendix", parents=[common], help="Recompute a finite verification")
    p.add_argument("which", choices=APPENDIX_CHOICES)
    p.add_argument(
        "--parity-restricted",
        action="store_const",
        const=True,
        default=None,
        help="Sweep only residues reachable by an even t",
    )
    p.add_argument("--tmax", dest="t_max", type=int, default=DEFAULT_TMAX)

    return parser


def _dispatch(args: argparse.Namespace) -> CommandOutcome:
    if args.command == "construct":
        return cmd_construct(
            args.n,
            args.d,
            verify=args.verify,
            prefer_interval=args.prefer_interval,
            as_json=args.as_json,
        )
    if args.command == "verify":
        return cmd_verify(args.n, args.gens, method=args.method, as_json=args.as_json)
    if args.command == "membership":
        return cmd_membership(args.n, args.d, as_json=args.as_json)
    if args.command == "enumerate":
        return cmd_enumerate(
            args.n,
            args.d,
            first=args.first,
            count=args.count,
            force=args.force,
            as_json=args.as_json,
        )
    if args.command == "table":
        return cmd_table(args.nmax, args.dmax, constructive=args.constructive, as_json=args.as_json)
    if args.command == "appendix":
        return cmd_appendix(
            args.which,
            parity_restricted=args.parity_restricted,
            t_max=args.t_max,
            as_json=args.as_json,
        )
    return CommandOutcome(CommandOutcome.USAGE, error=f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> None:
    parser = _build_parser()
    args = parser.parse_args(argv)

    bootstrap()
    logger.setLevel(getattr(logging, get_settings().runtime.log_level, logging.WARNING))

    outcome = _dispatch(args)
    if outcome.payload:
        sys.stdout.write(outcome.payload + "\n")
    if outcome.error:
        sys.stderr.write(f"nutforge: {outcome.error}\n")
    raise SystemExit(outcome.exit_code)


if __name__ == "__main__":
    main()
