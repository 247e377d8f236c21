"""Command-line front end: ``construct``, ``analyze`` and ``qcheck``.

Exit status: 0 when the command completed (property failures included),
1 for invalid input or a failed construction, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construct import ConstructionInvalid, ConstructionParams, construct_nafil, counter_cyclic_transpose, format_trace
from .latin import Table, TableFormatError, format_table, read_table
from .loops import NotLatin, Quasigroup
from .properties import INVERSE_FREE, PropertyId, check_identity_on_quasigroup
from .report import analyze, summary_lines

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INVALID


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="ascii", newline="\n")


def cmd_construct(args, parser) -> int:
    if args.order is not None:
        if args.order < 5 or args.order % 2 == 0:
            parser.error("order must be odd and ≥ 5")
        m = (args.order - 1) // 2
    else:
        if args.m < 2:
            parser.error("m must be ≥ 2")
        m = args.m
    lm = None
    if args.lm is not None:
        try:
            lm = read_table(args.lm)
        except (OSError, TableFormatError) as exc:
            return _fail(f"{args.lm}: {exc}")
    try:
        params = ConstructionParams(m, lm)
    except ValueError as exc:
        return _fail(f"{args.lm}: {exc}")
    try:
        loop, trace = construct_nafil(params, workers=args.workers)
    except ConstructionInvalid as exc:
        return _fail(f"{exc} (witness: {exc.witness})")
    _write(format_table(loop.table), args.out)
    if args.emit_trace:
        if args.out is None:
            sys.stdout.write(format_trace(trace))
        else:
            Path(args.out + ".trace.txt").write_text(format_trace(trace), encoding="ascii", newline="\n")
    return EXIT_OK


def cmd_analyze(args, parser) -> int:
    try:
        table = read_table(args.input)
    except OSError as exc:
        return _fail(f"{args.input}: {exc.strerror or exc}")
    except (TableFormatError, ValueError) as exc:
        return _fail(f"{args.input}: {exc}")
    try:
        rep = analyze(table, jacobi=args.jacobi, max_order=args.max_order, workers=args.workers)
    except NotLatin as exc:
        return _fail(f"{args.input}: {exc}")
    except ValueError as exc:
        return _fail(str(exc))
    if not args.quiet:
        print("\n".join(summary_lines(rep)))
    if args.json is not None:
        Path(args.json).write_text(rep.to_json(), encoding="utf-8")
    return EXIT_OK


def cmd_qcheck(args, parser) -> int:
    if args.k < 3:
        parser.error("k must be ≥ 3")
    try:
        prop = PropertyId(args.property.upper())
    except ValueError:
        parser.error(f"unknown property {args.property!r}")
    if prop not in INVERSE_FREE:
        allowed = ", ".join(sorted(p.value.lower() for p in INVERSE_FREE))
        parser.error(f"{prop.value} needs inverses or an identity element; choose one of: {allowed}")
    q = Quasigroup(Table(counter_cyclic_transpose(args.k).entries))
    r = check_identity_on_quasigroup(q, prop, workers=args.workers)
    if r.holds:
        print(f"{prop.value}: holds")
    else:
        print(f"{prop.value}: fails, witness ({', '.join(map(str, r.witness))})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nafil", description="Build and analyse odd-order NAFIL loops.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="construct the loop of order 2m+1")
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--order", type=int, help="odd order n >= 5")
    size.add_argument("--m", type=int, help="half-order m >= 2 (n = 2m+1)")
    p.add_argument("--lm", metavar="PATH", help="group table of order m used for the top-left block")
    p.add_argument("--out", metavar="PATH", help="output file (default: standard output)")
    p.add_argument("--emit-trace", action="store_true", help="also write every intermediate block")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="certify and analyse a table file")
    p.add_argument("input", metavar="PATH")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--jacobi", action="store_true", help="also check the Jacobi identity of the commutator algebra")
    p.add_argument("--max-order", type=int, default=None, help="raise the exhaustive-sweep and enumeration limits")
    p.add_argument("--quiet", action="store_true", help="suppress the human-readable summary")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("qcheck", help="check an identity on the transposed counter-cyclic quasigroup")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--property", required=True)
    p.set_defaults(func=cmd_qcheck)

    for name in ("construct", "analyze", "qcheck"):
        sub.choices[name].add_argument("--workers", type=int, default=1, help="threads used by identity sweeps")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    sub = parser._subparsers._group_actions[0].choices[args.command]
    return args.func(args, sub)


if __name__ == "__main__":
    sys.exit(main())
