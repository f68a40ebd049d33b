"""Command line front end: vanishing queries, characters, tables and the verification suite."""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional, Sequence, TextIO

from loguru import logger
from rich.console import Console
from rich.table import Table

from .. import __version__
from ..char_ring import Character
from ..characters import NotComputable, h0, h1, line_bundle_character
from ..checks.grid import SCHEDULERS
from ..errors import IncidenceCohomologyError
from ..oracle import regularity_scan
from ..padic import is_prime
from ..vanishing import full_profile, regularity_formula
from .reporting import skip_all_checks
from .tables import iter_profile_rows, write_rows
from .verification import default_bounds, verify

OUTPUT_ENV_VAR = "INCIDENCE_COHOMOLOGY_OUT"


def _add_common(parser: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    parser.add_argument("--n", type=int, required=True, help="dim V (at least 3).")
    parser.add_argument("--p", type=int, required=True, help="Characteristic (a prime).")
    parser.add_argument(
        "--format",
        choices=formats,
        default=default,
        help=f"Output format (default: {default}).",
    )
    parser.add_argument(
        "--out",
        type=str,
        default=None,
        help=f"Write output to this file instead of stdout (overrides ${OUTPUT_ENV_VAR}).",
    )


def build_parser() -> argparse.ArgumentParser:
    description = (
        "Vanishing and characters of line bundle cohomology on the incidence\n"
        "correspondence in P^(n-1) x P^(n-1)* over a field of characteristic p."
    )
    parser = argparse.ArgumentParser(
        prog="incidence-cohomology",
        description=description,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr (-v for INFO, -vv for DEBUG).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    cohomology = subparsers.add_parser(
        "cohomology", help="Which H^i(X, O(a, b)) vanish, with the deciding rule."
    )
    _add_common(cohomology, ("text", "json", "csv"), "text")
    cohomology.add_argument("--a", type=int, required=True)
    cohomology.add_argument("--b", type=int, required=True)

    character = subparsers.add_parser(
        "character",
        help="Characters of h^0(d, e), h^1(d, e) or of H^i(X, O(a, b)) (n = 3).",
        description=(
            "Give either --d and --e for [H^i(P, D^d R(e-1))], or --a, --b and --i "
            "for [H^i(X, O(a, b))]."
        ),
    )
    _add_common(character, ("json", "text"), "json")
    for flag in ("--d", "--e", "--a", "--b", "--i"):
        character.add_argument(flag, type=int, default=None)

    table = subparsers.add_parser(
        "table", help="Stream the vanishing profile of a box of line bundles."
    )
    _add_common(table, ("csv", "json", "text"), "csv")
    table.add_argument("--a-min", type=int, required=True)
    table.add_argument("--a-max", type=int, required=True)
    table.add_argument("--b-min", type=int, required=True)
    table.add_argument("--b-max", type=int, required=True)

    regularity = subparsers.add_parser(
        "regularity", help="Castelnuovo-Mumford regularity of D^d R."
    )
    _add_common(regularity, ("json", "text"), "text")
    regularity.add_argument("--d", type=int, required=True)
    regularity.add_argument(
        "--scan",
        action="store_true",
        help="Also scan oracle H^1 dimensions for the largest non-vanishing twist.",
    )
    regularity.add_argument(
        "--m-max",
        type=int,
        default=None,
        help="Upper end of the scan (default: formula value + 2).",
    )

    verify_parser = subparsers.add_parser(
        "verify", help="Compare every closed formula with the F_p oracle."
    )
    _add_common(verify_parser, ("text", "json"), "text")
    verify_parser.add_argument(
        "--d-max",
        type=int,
        default=None,
        help="Largest degree of the recursion grid; also caps the chamber, regularity and corner grids.",
    )
    verify_parser.add_argument(
        "--e-max",
        type=int,
        default=None,
        help="Largest twist of the recursion grid; also caps the chamber twist span.",
    )
    verify_parser.add_argument(
        "--scheduler",
        choices=SCHEDULERS,
        default="synchronous",
        help="dask scheduler for the oracle grids (default: synchronous).",
    )
    verify_parser.add_argument(
        "--all-rows",
        action="store_true",
        help="List passing results in the text table as well.",
    )
    verify_parser.add_argument(
        "--print-requirements",
        action="store_true",
        help="Print the requirements checked by the suite without running any check.",
    )
    return parser


def _configure_logging(verbosity: int) -> None:
    logger.remove()
    level = {0: "WARNING", 1: "INFO"}.get(verbosity, "DEBUG")
    logger.add(sys.stderr, level=level)


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    target = path or os.environ.get(OUTPUT_ENV_VAR)
    if not target:
        yield sys.stdout
        return
    with open(target, "w", encoding="utf-8", newline="") as stream:
        logger.info(f"Writing output to {target}")
        yield stream


def _dump(payload: Dict[str, Any], stream: TextIO) -> None:
    stream.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def _character_payload(character: Character) -> Dict[str, Any]:
    return {
        "dim": character.dim_eval(),
        "highest_weight": None if character.is_zero() else list(character.highest_weight().exps),
        "terms": character.to_records(),
    }


def _run_cohomology(args, stream: TextIO) -> int:
    profile = full_profile(args.n, args.p, args.a, args.b)
    if args.format == "csv":
        write_rows(profile.rows(), stream, fmt="csv")
    elif args.format == "json":
        _dump(
            {
                "n": profile.n,
                "p": profile.p,
                "a": profile.a,
                "b": profile.b,
                "region": profile.region,
                "degrees": [
                    {"i": i, "flag": flag, "rule": rule}
                    for _, _, i, flag, rule in profile.rows()
                ],
                "notes": list(profile.notes),
            },
            stream,
        )
    else:
        console = Console(file=stream)
        table = Table(title=f"H^i(X, O({args.a},{args.b}))")
        table.add_column("i", justify="right")
        table.add_column("H^i", justify="center")
        table.add_column("Rule", style="dim")
        for _, _, i, flag, rule in profile.rows():
            table.add_row(str(i), "≠ 0" if flag == "nonzero" else "0", rule)
        console.print(table)
        console.print(f"n={args.n}, p={args.p}, chamber {profile.region}")
        for note in profile.notes:
            console.print(f"[italic]note:[/italic] {note}")
    return 0


def _run_character(args, parser: argparse.ArgumentParser, stream: TextIO) -> int:
    pair_form = args.d is not None or args.e is not None
    bundle_form = args.a is not None or args.b is not None or args.i is not None
    if pair_form == bundle_form:
        parser.error("character needs either --d and --e, or --a, --b and --i")
    if pair_form and (args.d is None or args.e is None):
        parser.error("character needs both --d and --e")
    if bundle_form and None in (args.a, args.b, args.i):
        parser.error("character needs all of --a, --b and --i")
    if args.n != 3:
        parser.error(
            f"characters are only available for n = 3 (got n={args.n}); "
            "the vanishing of every H^i is available through the cohomology command"
        )

    if pair_form:
        payload: Dict[str, Any] = {
            "n": args.n,
            "p": args.p,
            "d": args.d,
            "e": args.e,
            "h0": _character_payload(h0(args.d, args.e, args.p)),
            "h1": _character_payload(h1(args.d, args.e, args.p)),
        }
    else:
        result = line_bundle_character(args.n, args.p, args.a, args.b, args.i)
        payload = {"n": args.n, "p": args.p, "a": args.a, "b": args.b, "i": args.i}
        if isinstance(result, NotComputable):
            payload.update(computable=False, reason=result.reason, character=None)
        else:
            payload.update(computable=True, character=_character_payload(result))

    if args.format == "json":
        _dump(payload, stream)
        return 0

    console = Console(file=stream)
    for key in ("h0", "h1", "character"):
        entry = payload.get(key)
        if key in payload and entry is None:
            console.print(f"{key}: not computable ({payload['reason']})")
        elif entry is not None:
            weight = entry["highest_weight"]
            console.print(
                f"{key}: dim {entry['dim']}, highest weight "
                f"{'-' if weight is None else tuple(weight)}, {len(entry['terms'])} weight(s)"
            )
    return 0


def _run_table(args, stream: TextIO) -> int:
    rows = iter_profile_rows(
        args.n, args.p, (args.a_min, args.a_max), (args.b_min, args.b_max)
    )
    count = write_rows(rows, stream, fmt=args.format)
    logger.info(f"Wrote {count} rows")
    return 0


def _run_regularity(args, stream: TextIO) -> int:
    formula = regularity_formula(args.n, args.p, args.d)
    scanned = None
    if args.scan:
        m_max = args.m_max if args.m_max is not None else formula + 2
        scanned = regularity_scan(args.n, args.p, args.d, m_max)
    if args.format == "json":
        _dump({"n": args.n, "p": args.p, "d": args.d, "formula": formula, "scan": scanned}, stream)
    else:
        line = f"reg(D^{args.d} R) = {formula}"
        if scanned is not None:
            line += f" (oracle scan: {scanned})"
        stream.write(line + "\n")
    return 0 if scanned is None or scanned == formula else 1


def _run_verify(args, stream: TextIO) -> int:
    bounds = default_bounds(args.n).with_limits(d_max=args.d_max, e_max=args.e_max)

    if args.print_requirements:
        with skip_all_checks():
            _, spec_text = verify(args.n, args.p, bounds, scheduler=args.scheduler)
        stream.write(spec_text)
        return 0

    logger.info(
        f"Running verification suite (incidence-cohomology {__version__}) "
        f"for n={args.n} p={args.p} with {bounds}"
    )
    report, _ = verify(args.n, args.p, bounds, scheduler=args.scheduler)
    if args.format == "json":
        stream.write(report.to_json_lines())
        Console(stderr=True).print(report.summarize())
    else:
        report.console_print(file=stream, failures_only=not args.all_rows)
    return 1 if report.has_fails() else 0


@logger.catch
def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    if args.n < 3:
        parser.error(f"--n must be at least 3, got {args.n}")
    if not is_prime(args.p):
        parser.error(f"--p must be prime, got {args.p}")

    try:
        with _output(args.out) as stream:
            if args.command == "cohomology":
                return _run_cohomology(args, stream)
            if args.command == "character":
                return _run_character(args, parser, stream)
            if args.command == "table":
                return _run_table(args, stream)
            if args.command == "regularity":
                return _run_regularity(args, stream)
            return _run_verify(args, stream)
    except IncidenceCohomologyError as exc:
        parser.error(str(exc))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
