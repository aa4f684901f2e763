"""
Command-line front end for witt-paths.

    witt-paths count -m 2,2
    witt-paths oracle words -m 2,2 --list
    witt-paths dims --kind H -k 2,2
    witt-paths verify sherman --edges 2 --degree 8
    witt-paths table --edges 2 --max-total 6 --csv counts.csv

Exit codes: 0 on success, 1 on a failed verification or internal
inconsistency, 2 on a usage error or exceeded enumeration bound.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from pymeasure.log import console_log

from wittpaths import __version__
from wittpaths.cli.procedures import (
    IDENTITY_CHOICES,
    KIND_CHOICES,
    ORACLE_CHOICES,
    CountProcedure,
    DimsProcedure,
    OracleProcedure,
    TableProcedure,
    VerifyProcedure,
)
from wittpaths.counters.oracle import DEFAULT_MAX_N
from wittpaths.utilities import ConsistencyError, EnumerationBoundError
from wittpaths.utilities.wittpaths_procedure import OutputRecord, WittPathsProcedure

log = logging.getLogger("wittpaths")
log.addHandler(logging.NullHandler())

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON record")
    common.add_argument(
        "--no-timing", action="store_true", help="omit the elapsed time field"
    )
    common.add_argument("-v", "--verbose", action="store_true", help="log to stderr")

    parser = argparse.ArgumentParser(
        prog="witt-paths",
        description="Exact path and necklace counts on bouquet graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", parents=[common], help="closed-form counters")
    count.add_argument("-m", "--multidegree", required=True)

    oracle = commands.add_parser("oracle", parents=[common], help="brute-force counts")
    oracle.add_argument("which", choices=ORACLE_CHOICES)
    oracle.add_argument("-m", "--multidegree", required=True)
    oracle.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    oracle.add_argument("--list", action="store_true", dest="listing")
    oracle.add_argument("--workers", type=int, default=1)

    dims = commands.add_parser("dims", parents=[common], help="generator dimensions")
    dims.add_argument("--kind", choices=KIND_CHOICES, default="H")
    dims.add_argument("-k", "--multidegree", required=True)
    dims.add_argument("--degree", type=int, default=8)

    verify = commands.add_parser("verify", parents=[common], help="product identities")
    verify.add_argument("identity", choices=IDENTITY_CHOICES)
    verify.add_argument("--edges", type=int, default=2)
    verify.add_argument("--degree", type=int, default=6)
    verify.add_argument("--kind", choices=KIND_CHOICES, default="H")
    verify.add_argument(
        "--corrupt",
        default="",
        help="shift the exponent of one factor to demonstrate a failing check",
    )
    verify.add_argument("--corrupt-delta", type=int, default=1)

    table = commands.add_parser("table", parents=[common], help="counter tables")
    table.add_argument("--edges", type=int, default=2)
    table.add_argument("--max-total", type=int, default=6)
    table.add_argument("--csv", default="", dest="output")
    return parser


def make_procedure(args: argparse.Namespace) -> WittPathsProcedure:
    """Copy parsed arguments onto the procedure of the selected command."""
    timing = not args.no_timing
    if args.command == "count":
        return CountProcedure(multidegree=args.multidegree, timing=timing)
    if args.command == "oracle":
        return OracleProcedure(
            which=args.which,
            multidegree=args.multidegree,
            max_n=args.max_n,
            listing=args.listing,
            workers=args.workers,
            timing=timing,
        )
    if args.command == "dims":
        return DimsProcedure(
            kind=args.kind,
            multidegree=args.multidegree,
            degree=args.degree,
            timing=timing,
        )
    if args.command == "verify":
        return VerifyProcedure(
            identity=args.identity,
            edges=args.edges,
            degree=args.degree,
            kind=args.kind,
            corrupt=args.corrupt,
            corrupt_delta=args.corrupt_delta,
            timing=timing,
        )
    return TableProcedure(
        edges=args.edges, max_total=args.max_total, output=args.output, timing=timing
    )


def _print(record: OutputRecord, as_json: bool) -> None:
    if as_json:
        print(record.to_json())
    else:
        for notice in record.notices:
            print(f"notice: {notice}", file=sys.stderr)
        print(record.to_text())


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the witt-paths command line and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.verbose:
        console_log(log, level=logging.DEBUG)

    procedure: Optional[WittPathsProcedure] = None
    try:
        procedure = make_procedure(args)
        record = procedure.run()
    except (ValueError, TypeError, EnumerationBoundError) as exc:
        code, status, message = EXIT_USAGE, "error", str(exc)
    except ConsistencyError as exc:
        code, status, message = EXIT_FAIL, "fail", str(exc)
    else:
        _print(record, args.json)
        return EXIT_OK if record.status == "ok" else EXIT_FAIL

    log.error("%s", message)
    print(f"error: {message}", file=sys.stderr)
    if args.json:
        failed = OutputRecord(
            command=args.command,
            input=procedure.input_echo() if procedure is not None else {},
            status=status,
            mismatch={"detail": message},
        )
        print(failed.to_json())
    return code


if __name__ == "__main__":
    sys.exit(main())
