"""Command-line front end.

Usage examples::

    dendro table --n 2 --k 3 --format csv
    dendro indices --n 64 --k 16 --format text
    dendro meddom --n 2 --k 3 --sigma all
    dendro verify --max-n 5 --max-k 5
    dendro export --n 2 --k 3 --format dot

Exit codes: 0 success, 1 argument or domain error, 2 an internal
cross-check disagreed.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import oracle, report_io
from .indices import InconsistencyError, index_report, medium_domination
from .model import DendrimerParams, diameter
from .paths import PathLengthTable, path_count_closed, path_count_table
from .verify import DEFAULT_ORACLE_MAX_VERTICES, run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2

_DECIMAL = re.compile(r"[+-]?\d+")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default; 2 is reserved for mismatches
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _decimal(text: str) -> int:
    if not _DECIMAL.fullmatch(text.strip()):
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}")
    return int(text)


def _sigma(text: str):
    if text == "all":
        return text
    return _decimal(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dendro", description="Exact path counts and distance indices of dendrimers T(n,k).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_nk(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=_decimal, required=True, help="radius (n >= 1)")
        p.add_argument("--k", type=_decimal, required=True, help="degree of non-leaf vertices (k >= 2)")

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", "-o", type=Path, help="write the payload here instead of stdout")

    p = sub.add_parser("table", help="number of paths of every length")
    add_nk(p)
    p.add_argument("--ell", type=_decimal, help="only this path length")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    add_output(p)

    p = sub.add_parser("indices", help="census, path table, Wiener index, average distance")
    add_nk(p)
    p.add_argument("--sigma", type=_sigma, help="also report medium domination at sigma (or 'all')")
    p.add_argument("--format", choices=("json", "text"), default="json")
    add_output(p)

    p = sub.add_parser("meddom", help="sigma-medium domination number")
    add_nk(p)
    p.add_argument("--sigma", type=_sigma, required=True, help="2 <= sigma <= 2n, or 'all'")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    add_output(p)

    p = sub.add_parser("verify", help="cross-check closed forms, recursion and brute force")
    p.add_argument("--max-n", type=_decimal, default=5)
    p.add_argument("--max-k", type=_decimal, default=5)
    p.add_argument(
        "--oracle-max-vertices",
        type=_decimal,
        default=DEFAULT_ORACLE_MAX_VERTICES,
        help="skip the brute-force checks on trees larger than this",
    )
    p.add_argument("--random-trees", type=_decimal, default=200)
    p.add_argument("--seed", type=_decimal, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_output(p)

    p = sub.add_parser("export", help="edge list or DOT of the explicit tree")
    add_nk(p)
    p.add_argument("--format", choices=("edges", "dot"), default="edges")
    add_output(p)
    return parser


def _params(args: argparse.Namespace) -> DendrimerParams:
    try:
        return DendrimerParams(args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _sigmas(p: DendrimerParams, sigma) -> list[int]:
    if sigma == "all":
        return list(range(2, diameter(p) + 1))
    if not 2 <= sigma <= diameter(p):
        raise UsageError(f"sigma must be in [2, {diameter(p)}] for T({p.n},{p.k}), got {sigma}")
    return [sigma]


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_table(args: argparse.Namespace) -> int:
    p = _params(args)
    if args.ell is None:
        table = path_count_table(p)
    else:
        if not 1 <= args.ell <= diameter(p):
            raise UsageError(f"ell must be in [1, {diameter(p)}], got {args.ell}")
        table = PathLengthTable(p, {args.ell: path_count_closed(p, args.ell)})
    if args.format == "csv":
        _emit(args, report_io.to_csv(table))
    elif args.format == "text":
        _emit(args, report_io.to_text(table))
    else:
        _emit(args, report_io.to_json(table))
    return EXIT_OK


def cmd_indices(args: argparse.Namespace) -> int:
    p = _params(args)
    sigmas = _sigmas(p, args.sigma) if args.sigma is not None else []
    report = index_report(p, sigmas, verify=True)
    if args.format == "text":
        _emit(args, report_io.to_text(report))
    else:
        _emit(args, report_io.to_json(report))
    return EXIT_OK


def cmd_meddom(args: argparse.Namespace) -> int:
    p = _params(args)
    rows = [(s, medium_domination(p, s, verify=True)) for s in _sigmas(p, args.sigma)]
    if args.format == "csv":
        text = "sigma,num,den\n" + "".join(f"{s},{g.numerator},{g.denominator}\n" for s, g in rows)
    elif args.format == "text":
        text = "".join(f"{s} {g.numerator}/{g.denominator}\n" for s, g in rows)
    else:
        doc = {
            "n": p.n,
            "k": p.k,
            "medium_domination": [
                {"sigma": s, "value": {"num": str(g.numerator), "den": str(g.denominator)}}
                for s, g in rows
            ],
        }
        text = report_io.to_json(doc)
    _emit(args, text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 1 or args.max_k < 2:
        raise UsageError("verify needs --max-n >= 1 and --max-k >= 2")
    try:
        cap = oracle.max_vertices()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not 1 <= args.oracle_max_vertices <= cap:
        raise UsageError(f"--oracle-max-vertices must be in [1, {cap}] (safety cap)")
    if args.random_trees < 0:
        raise UsageError("--random-trees must be >= 0")

    results = run_verification(
        args.max_n,
        args.max_k,
        oracle_max_vertices=args.oracle_max_vertices,
        random_trees=args.random_trees,
        seed=args.seed,
    )
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        doc = {
            "verification": {
                "max_n": args.max_n,
                "max_k": args.max_k,
                "oracle_max_vertices": args.oracle_max_vertices,
                "seed": args.seed,
                "passed": not failed,
                "checks": [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "instances": r.instances,
                        "counterexample": None if r.mismatch is None else str(r.mismatch),
                    }
                    for r in results
                ],
            }
        }
        text = report_io.to_json(doc)
    else:
        text = "".join(r.line() + "\n" for r in results)
        text += f"{len(results) - len(failed)}/{len(results)} check families passed\n"
    _emit(args, text)
    if failed:
        print(f"verification failed: {failed[0].mismatch}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    p = _params(args)
    try:
        g = oracle.build_dendrimer(p)
    except ValueError as exc:
        # oversize request or a malformed cap override
        raise UsageError(str(exc)) from None
    text = oracle.export_dot(g) if args.format == "dot" else oracle.export_edge_list(g)
    _emit(args, text)
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "indices": cmd_indices,
    "meddom": cmd_meddom,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"dendro {args.command}: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"dendro {args.command}: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    raise SystemExit(main())
