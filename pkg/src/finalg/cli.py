"""Command-line interface.

Exit codes: 0 success, 1 verification suite failure, 2 input error (parse,
range, arity, missing top). Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .algebra import ElementSet, FiniteAlgebra
from .closure import (
    clot_closure,
    congruence_generated,
    is_top_normal,
    iterate,
    semicongruence_generated,
)
from .errors import EngineError
from .fileformat import parse_algebra_file
from .ranks import algebra_rank
from .suites import SUITE_NAMES, run_suite

CHAIN_PRINT_CAP = 32


def _load(path: str) -> tuple[str, FiniteAlgebra]:
    with open(path, "r", encoding="utf-8") as fh:
        parsed = parse_algebra_file(fh.read())
    return parsed.name, parsed.algebra


def _resolve_top(algebra: FiniteAlgebra, override: int | None) -> int:
    top = override if override is not None else algebra.top
    if top is None:
        raise EngineError("no top element: give --top or declare top in the file")
    if not 0 <= top < algebra.size:
        raise EngineError(f"top element {top} outside carrier of size {algebra.size}")
    return top


def _parse_set(text: str, size: int) -> ElementSet:
    if text == "-":
        return ElementSet.empty(size)
    try:
        members = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise EngineError(f"malformed set {text!r}: use comma-separated integers or '-'") from None
    return ElementSet.of(size, members)


def _format_chain(stages: Sequence[ElementSet]) -> str:
    shown = [str(s) for s in stages[:CHAIN_PRINT_CAP]]
    if len(stages) > CHAIN_PRINT_CAP:
        shown.append("...")
    return " ⊂ ".join(shown)


def _cmd_step(args: argparse.Namespace, mode: str) -> int:
    _, algebra = _load(args.file)
    top = _resolve_top(algebra, args.top)
    subset = _parse_set(args.set, algebra.size)
    if not args.fixpoint and args.steps < 0:
        raise EngineError("--steps must be non-negative")
    max_steps = None if args.fixpoint else args.steps
    report = iterate(algebra, top, subset, mode, max_steps=max_steps)
    print(report.final())
    print(_format_chain(report.distinct_stages()))
    return 0


def _cmd_clot(args: argparse.Namespace) -> int:
    _, algebra = _load(args.file)
    top = _resolve_top(algebra, args.top)
    subset = _parse_set(args.set, algebra.size)
    print(clot_closure(algebra, top, subset))
    return 0


def _cmd_normal(args: argparse.Namespace) -> int:
    _, algebra = _load(args.file)
    top = _resolve_top(algebra, args.top)
    subset = _parse_set(args.set, algebra.size)
    result = is_top_normal(algebra, top, subset)
    word = "normal" if result.is_normal else "not-normal"
    print(f"{word} {result.top_class}")
    return 0


def _cmd_relation(args: argparse.Namespace, congruence: bool) -> int:
    _, algebra = _load(args.file)
    top = _resolve_top(algebra, args.top)
    subset = _parse_set(args.set, algebra.size)
    pairs = [(x, top) for x in subset]
    rel = (
        congruence_generated(algebra, pairs)
        if congruence
        else semicongruence_generated(algebra, pairs)
    )
    for a, b in rel.pairs():
        print(f"{a} {b}")
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    _, algebra = _load(args.file)
    top = _resolve_top(algebra, args.top)
    mode = "induction" if args.mode == "ind" else "deduction"
    result = algebra_rank(algebra, top, mode, max_n=args.max_n)
    if result.rank is None:
        print(f"rank exceeded {result.max_n}")
    else:
        print(f"rank {result.rank}")
    print(f"witness {result.witness}")
    print(_format_chain(result.witness_report.distinct_stages()))
    return 0


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise EngineError(f"malformed prime list {text!r}: use comma-separated integers") from None


def _cmd_verify(args: argparse.Namespace) -> int:
    primes = _parse_primes(args.primes) if args.primes else None
    report = run_suite(args.suite, limit=args.limit, primes=primes, depth=args.depth)
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def _cmd_chain(args: argparse.Namespace) -> int:
    from .oracles import nat_mult_deduction_chain

    primes = _parse_primes(args.primes)
    stages = nat_mult_deduction_chain(primes, len(primes), args.depth)
    for stage in stages:
        print("{" + ",".join(str(x) for x in sorted(stage)) + "}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finalg",
        description="Closure computations and verification suites on finite algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p: argparse.ArgumentParser, needs_set: bool = True) -> None:
        p.add_argument("file", metavar="FILE", help="algebra description file")
        if needs_set:
            p.add_argument("--set", required=True,
                           help="comma-separated elements, or '-' for the empty set")
        p.add_argument("--top", type=int, default=None,
                       help="override the file's top element")

    for name, text in (("ind", "iterated induction"), ("ded", "iterated deduction")):
        p = sub.add_parser(name, help=f"{text} of a set")
        with_input(p)
        group = p.add_mutually_exclusive_group()
        group.add_argument("--steps", type=int, default=1, help="number of steps (default 1)")
        group.add_argument("--fixpoint", action="store_true", help="iterate to the fixpoint")

    with_input(sub.add_parser("clot", help="smallest clot containing a set"))
    with_input(sub.add_parser("normal", help="test whether a set is the class of top"))
    with_input(sub.add_parser("semicong", help="semicongruence generated by set x {top}"))
    with_input(sub.add_parser("cong", help="congruence generated by set x {top}"))

    p = sub.add_parser("rank", help="largest steps-to-fixpoint over nonempty subsets")
    with_input(p, needs_set=False)
    p.add_argument("--mode", choices=("ind", "ded"), required=True)
    p.add_argument("--max-n", type=int, default=None, help="step budget per subset")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help=f"one of: {', '.join(SUITE_NAMES)}")
    p.add_argument("--limit", type=int, default=None, help="catalog size limit")
    p.add_argument("--primes", default=None, help="comma-separated primes (nat-chain)")
    p.add_argument("--depth", type=int, default=None, help="chain depth (nat-chain)")

    p = sub.add_parser("chain", help="exact deduction chain on naturals under multiplication")
    p.add_argument("--primes", required=True, help="comma-separated distinct primes")
    p.add_argument("--depth", type=int, required=True, help="number of steps")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ind":
            return _cmd_step(args, "induction")
        if args.command == "ded":
            return _cmd_step(args, "deduction")
        if args.command == "clot":
            return _cmd_clot(args)
        if args.command == "normal":
            return _cmd_normal(args)
        if args.command == "semicong":
            return _cmd_relation(args, congruence=False)
        if args.command == "cong":
            return _cmd_relation(args, congruence=True)
        if args.command == "rank":
            return _cmd_rank(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "chain":
            return _cmd_chain(args)
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


def entry() -> None:
    sys.exit(main())
