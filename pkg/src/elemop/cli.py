"""Command-line front end.

Every subcommand reads and writes the shared JSON formats and emits exactly
one UTF-8 JSON document.  Exit codes: 0 success (and every checked property
consistent), 1 a checked property failed, 2 usage or parse error.
Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio, lab
from .criteria import (
    fong_sourour_check,
    thm21_criterion,
    thm22_check,
    thm23_check,
)
from .errors import IntegrityError, ParseError
from .nilpotency import is_nilpotent
from .operators import op_is_nilpotent
from .scalars import parse_scalar


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elemop",
        description="Exact nilpotency calculus for elementary operators on matrix algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-o", "--output", metavar="PATH", help="write the JSON document here instead of stdout"
    )

    p = sub.add_parser("apply", parents=[common], help="apply an operator to a matrix")
    p.add_argument("--op", required=True, help="operator JSON (path or inline)")
    p.add_argument("--x", required=True, help="matrix JSON (path or inline)")

    p = sub.add_parser("superop", parents=[common], help="superoperator matrix of an operator")
    p.add_argument("--op", required=True, help="operator JSON (path or inline)")

    p = sub.add_parser("nilpotent", parents=[common], help="decide nilpotency with index and witness")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--matrix", help="matrix JSON (path or inline)")
    target.add_argument("--op", help="operator JSON (path or inline)")

    p = sub.add_parser("check", parents=[common], help="run one structural criterion on concrete inputs")
    p.add_argument("--theorem", required=True, choices=["2.1", "2.2", "2.3", "1.1"])
    p.add_argument("--a", required=True, nargs="+", metavar="MATRIX",
                   help="left coefficient(s); several only for --theorem 2.2")
    p.add_argument("--b", required=True, nargs="+", metavar="MATRIX",
                   help="right coefficient(s); several only for --theorem 2.2")

    p = sub.add_parser("examples", parents=[common], help="rebuild and verify a reference instance")
    p.add_argument("--which", required=True, choices=["3.1", "3.2"])
    p.add_argument("--params", metavar="a,b,c,d,k",
                   help="exact scalars for the parametric 3x3 family (3.2 only)")

    p = sub.add_parser("sweep", parents=[common], help="sweep a criterion over generated instances")
    p.add_argument("--theorem", required=True, choices=["2.1", "2.2", "2.3", "1.1"])
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--entry-bound", type=int, default=3)
    p.add_argument("--gaussian", action="store_true", help="allow nonzero imaginary parts")
    p.add_argument("--exhaustive", action="store_true",
                   help="for --theorem 1.1: enumerate all dim-2 pairs with entries -1, 0, 1")

    p = sub.add_parser("search", parents=[common], help="search for converse failures of a criterion")
    p.add_argument("--target", required=True, choices=["2.1-ext", "2.2", "2.3"])
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--entry-bound", type=int, default=3)
    p.add_argument("--gaussian", action="store_true")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        document, status = _dispatch(args)
    except (ParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    _emit(document, args.output)
    return status


def _dispatch(args) -> tuple[dict, int]:
    if args.command == "apply":
        op = jsonio.operator_from_obj(_load(args.op))
        x = jsonio.matrix_from_obj(_load(args.x))
        return jsonio.matrix_to_obj(op(x)), 0

    if args.command == "superop":
        op = jsonio.operator_from_obj(_load(args.op))
        return jsonio.matrix_to_obj(op.superoperator()), 0

    if args.command == "nilpotent":
        if args.matrix is not None:
            report = is_nilpotent(jsonio.matrix_from_obj(_load(args.matrix)))
        else:
            report = op_is_nilpotent(jsonio.operator_from_obj(_load(args.op)))
        return jsonio.report_to_obj(report), 0

    if args.command == "check":
        return _run_check(args)

    if args.command == "examples":
        return _run_examples(args)

    if args.command == "sweep":
        return _run_sweep(args)

    return _run_search(args)


def _run_check(args) -> tuple[dict, int]:
    a_list = [jsonio.matrix_from_obj(_load(path)) for path in args.a]
    b_list = [jsonio.matrix_from_obj(_load(path)) for path in args.b]
    if args.theorem == "2.2":
        result = thm22_check(a_list, b_list)
    else:
        if len(a_list) != 1 or len(b_list) != 1:
            raise ParseError(f"--theorem {args.theorem} takes exactly one --a and one --b")
        a, b = a_list[0], b_list[0]
        if args.theorem == "2.1":
            result = thm21_criterion(a, b)
        elif args.theorem == "2.3":
            result = thm23_check(a, b)
        else:
            result = fong_sourour_check(a, b)
    return jsonio.check_to_obj(result), 0 if result.consistent else 1


def _run_examples(args) -> tuple[dict, int]:
    if args.which == "3.1":
        if args.params:
            raise ParseError("--params only applies to --which 3.2")
        return lab.example_3_1().to_obj(), 0
    params = args.params or "1,2,3,0,3"
    pieces = params.split(",")
    if len(pieces) != 5:
        raise ParseError(f"--params needs five comma-separated scalars, got {len(pieces)}")
    record = lab.example_3_2(*(parse_scalar(s) for s in pieces))
    return record.to_obj(), 0


def _run_sweep(args) -> tuple[dict, int]:
    if args.theorem == "2.1":
        if args.dim != 2:
            raise ParseError("--theorem 2.1 sweeps exhaustively and needs --dim 2")
        report = lab.sweep_thm21_exhaustive()
    elif args.theorem == "1.1" and args.exhaustive:
        if args.dim != 2:
            raise ParseError("--exhaustive needs --dim 2")
        report = lab.sweep_fong_sourour_exhaustive()
    else:
        if args.exhaustive:
            raise ParseError(f"--exhaustive does not apply to --theorem {args.theorem}")
        config = lab.GeneratorConfig(
            dim=args.dim,
            entry_bound=args.entry_bound,
            seed=args.seed,
            gaussian=args.gaussian,
        )
        report = lab.sweep_thm(args.theorem, config, args.trials)
    return report.to_obj(), 0 if report.passed else 1


def _run_search(args) -> tuple[dict, int]:
    config = lab.GeneratorConfig(
        dim=args.dim,
        entry_bound=args.entry_bound,
        seed=args.seed,
        gaussian=args.gaussian,
    )
    report = lab.search_converse_failures(args.target, config, args.trials)
    return report.to_obj(), 0 if report.passed else 1


def _load(source: str):
    """Read a JSON document from an inline string or a file path."""
    text = source if source.lstrip().startswith("{") else _read_file(source)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {source!r}: {exc}") from exc


def _read_file(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _emit(document: dict, output: str | None) -> None:
    text = jsonio.dumps(document)
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
