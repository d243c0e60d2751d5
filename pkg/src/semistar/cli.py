"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 star undefined or not
stationary, 3 automata not equivalent.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import __version__
from .automaton import EpsilonAutomaton, check_equivalence, eliminate, weight
from .bench import run_bench, write_csv
from .formats import dump_automaton, dump_matrix, load_automaton, load_matrix
from .matrix import OpCounter, star
from .semiring import SEMIRINGS, is_undefined

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDEFINED = 2
EXIT_INEQUIVALENT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _counters(ctr: OpCounter) -> str:
    return " ".join(f"{k}={v}" for k, v in ctr.as_dict().items())


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_star(args) -> int:
    M = load_matrix(args.matrix)
    if not M.is_square:
        raise UsageError(f"matrix must be square, got {M.rows}x{M.cols}")
    ctr = OpCounter()
    N = star(M, args.method, args.side, ctr, args.max_iter)
    print(_counters(ctr), file=sys.stderr)
    if is_undefined(N):
        print(f"star undefined: {N.reason}", file=sys.stderr)
        return EXIT_UNDEFINED
    _emit(dump_matrix(N), args.output)
    return EXIT_OK


def cmd_eliminate(args) -> int:
    A = load_automaton(args.automaton)
    if not isinstance(A, EpsilonAutomaton):
        raise UsageError("input automaton has no 'epsilon' field")
    ctr = OpCounter()
    B = eliminate(A, args.variant, args.strategy, ctr)
    print(_counters(ctr), file=sys.stderr)
    if is_undefined(B):
        print(f"closure undefined: {B.reason}", file=sys.stderr)
        return EXIT_UNDEFINED
    _emit(dump_automaton(B), args.output)
    return EXIT_OK


def cmd_weight(args) -> int:
    A = load_automaton(args.automaton)
    try:
        w = weight(A, args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(w)
    return EXIT_OK


def cmd_check(args) -> int:
    A = load_automaton(args.eps_free)
    Ae = load_automaton(args.eps_automaton)
    if isinstance(A, EpsilonAutomaton):
        raise UsageError("first automaton must not have an 'epsilon' field")
    if not isinstance(Ae, EpsilonAutomaton):
        raise UsageError("second automaton must have an 'epsilon' field")
    try:
        report = check_equivalence(A, Ae, args.max_len, args.eps_bound, args.oracle)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"mode: {report.mode} (max-len={report.max_len}, eps-bound={report.K})")
    if not report.exact:
        print("note: partial-sum mode; silent runs shorter than the bound do not "
              "capture the full sum, differences are reported but not judged")
    for c in report.comparisons:
        flag = "ok" if c.equal else "DIFF"
        line = f"{c.word or 'ε':<12} {str(c.weight):>14} {str(c.oracle):>14}  {flag}"
        if c.gap is not None and not c.equal:
            line += f"  gap={c.gap}"
        print(line)
    if report.exact and not report.all_equal:
        print(f"first differing word: {report.first_mismatch.word or 'ε'!r}")
        return EXIT_INEQUIVALENT
    return EXIT_OK


def _sizes(text: str) -> List[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or any(n < 0 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be non-negative integers")
    return sizes


def cmd_bench(args) -> int:
    records = run_bench(args.sizes, args.semiring, args.trials, args.seed, args.multiply)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semistar", description="Stars of semiring matrices and silent-transition removal.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("star", help="star of a square matrix")
    s.add_argument("matrix")
    s.add_argument("--side", choices=["right", "left"], default="right")
    s.add_argument("--method", choices=["auto", "block", "iterative", "nilpotent"], default="auto")
    s.add_argument("--max-iter", type=int, default=1000)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_star)

    e = sub.add_parser("eliminate", help="remove silent transitions")
    e.add_argument("automaton")
    e.add_argument("-o", "--output")
    e.add_argument("--variant", choices=["left", "right"], default="left")
    e.add_argument("--strategy", choices=["auto", "block", "iterative", "nilpotent"], default="auto")
    e.set_defaults(func=cmd_eliminate)

    w = sub.add_parser("weight", help="weight of a word ('@' is the silent letter)")
    w.add_argument("automaton")
    w.add_argument("word")
    w.set_defaults(func=cmd_weight)

    c = sub.add_parser("check", help="compare an automaton with the erased behaviour of another")
    c.add_argument("eps_free")
    c.add_argument("eps_automaton")
    c.add_argument("--max-len", type=int, default=4)
    c.add_argument("--eps-bound", type=int, default=None)
    c.add_argument("--oracle", choices=["grouped", "brute"], default="grouped",
                   help="sum silent runs per position (grouped) or walk every preimage (brute)")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("bench", help="operation counts of the block star")
    b.add_argument("--sizes", type=_sizes, default=[1, 2, 4, 8, 16])
    b.add_argument("--semiring", choices=sorted(SEMIRINGS), default="bool")
    b.add_argument("--trials", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--multiply", choices=["naive", "strassen"], default="naive")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"semistar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
