"""
Matroid CLI

Subcommands:
  check <file> --k K --prop connected|minimal|superminimal|brittle
  props <file>
  construct wheel|whirl|uniform <params> [-o FILE]
  census --nmax N [--filter KW]... [-o FILE] [--witnesses]
  verify --suite all|<suite> [--nmax N] [--kmax K]
  iso <fileA> <fileB>

Machine-readable output goes to stdout, logs to stderr.

Exit codes: 0 pass/true, 1 fail/false, 2 input error, 3 capacity error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from matroids.errors import CapacityError, MatroidInputError
from matroids.matroid_io import format_matroid, read_matroid, write_matroid
from tools.canonical import are_isomorphic
from tools.census import FILTERS, census, class_counts, duality_asymmetries, write_records
from tools.connectivity import (
    is_brittle,
    is_k_connected,
    is_minimally_k_connected,
    is_super_minimally_k_connected,
    property_flags,
)
from tools.constructions import build_named
from workflow.config import Settings
from workflow.graph_builder import run_verification
from workflow.routing import SUITE_NODES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

PROPERTIES = {
    "connected": is_k_connected,
    "minimal": is_minimally_k_connected,
    "superminimal": is_super_minimally_k_connected,
}


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _truth(value: bool) -> int:
    _emit("true" if value else "false")
    return EXIT_OK if value else EXIT_FALSE


# ==================== SUBCOMMANDS ====================

def cmd_check(args: argparse.Namespace, settings: Settings) -> int:
    M = read_matroid(args.file)
    if args.prop == "brittle":
        return _truth(is_brittle(M))
    if args.k is None:
        raise MatroidInputError(f"--k is required for --prop {args.prop}")
    return _truth(PROPERTIES[args.prop](M, args.k))


def cmd_props(args: argparse.Namespace, settings: Settings) -> int:
    M = read_matroid(args.file)
    data = {"n": M.n, "r": M.r}
    data.update(property_flags(M).to_json())
    _emit(json.dumps(data, separators=(",", ":")))
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, settings: Settings) -> int:
    M = build_named(args.kind, args.params)
    if args.output:
        write_matroid(M, args.output)
    else:
        sys.stdout.write(format_matroid(M))
    return EXIT_OK


def cmd_census(args: argparse.Namespace, settings: Settings) -> int:
    records = census(
        args.nmax,
        filters=args.filter,
        workers=args.workers or settings.workers,
        cache_dir=settings.cache_dir,
        witnesses=args.witnesses,
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as stream:
            count = write_records(records, stream)
        logger.info(f"Wrote {count} census records to {args.output}")
    else:
        write_records(records, sys.stdout)

    counts = class_counts(records)
    if not counts.empty:
        logger.info(f"Classes per (n, r):\n{counts.to_string()}")
    if not args.filter:
        for problem in duality_asymmetries(counts):
            logger.warning(f"Duality asymmetry: {problem}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    final_state = run_verification(
        args.suite,
        nmax=settings.nmax if args.nmax is None else args.nmax,
        kmax=settings.kmax if args.kmax is None else args.kmax,
        workers=args.workers or settings.workers,
        cache_dir=settings.cache_dir,
    )
    for report in final_state["reports"]:
        _emit(json.dumps(report, separators=(",", ":")))
    for step in final_state["evidence_chain"]:
        logger.info(step)
    return EXIT_OK if final_state.get("verdict") == "pass" else EXIT_FALSE


def cmd_iso(args: argparse.Namespace, settings: Settings) -> int:
    return _truth(are_isomorphic(read_matroid(args.first), read_matroid(args.second)))


# ==================== PARSER ====================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matroid", description="Matroid connectivity toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="Test one connectivity property")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None, help="Connectivity level")
    p.add_argument("--prop", required=True, choices=["connected", "minimal", "superminimal", "brittle"])
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("props", help="Emit the property flags as one ndjson line")
    p.add_argument("file")
    p.set_defaults(handler=cmd_props)

    p = sub.add_parser("construct", help="Write a named matroid")
    p.add_argument("kind", choices=["wheel", "whirl", "uniform"])
    p.add_argument("params", type=int, nargs="+", help="k for wheel/whirl, r n for uniform")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("census", help="List isomorphism classes with their flags")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--filter", action="append", default=[], choices=sorted(FILTERS))
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--witnesses", action="store_true", help="Add separation witnesses")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("verify", help="Run verification suites")
    p.add_argument("--suite", default="all", choices=["all", *SUITE_NODES])
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("iso", help="Test two matroids for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_iso)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = Settings.from_env()
    except MatroidInputError as e:
        sys.stderr.write(f"matroid: {e}\n")
        return EXIT_INPUT
    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.INFO),
        format="%(asctime)s - %(levelname)s - %(message)s",
    )

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT

    try:
        return args.handler(args, settings)
    except MatroidInputError as e:
        logger.error(f"Input error: {e}")
        return EXIT_INPUT
    except CapacityError as e:
        logger.error(f"Capacity exceeded: {e}")
        return EXIT_CAPACITY


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
