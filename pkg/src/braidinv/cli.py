"""Command-line interface: ``braidinv {hilbert,straighten,verify,invariant-basis}``.

Exit codes: 0 success (or all checks passed), 1 a verification failed,
2 usage error.  ``--format json`` emits one JSON document per line.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from .arrangement import DomainError
from .invariants import element_class, hilbert_invariants, hilbert_json, hilbert_series, invariant_subspace
from .theorems import STATEMENTS, VerificationReport, verify

DEFAULT_MAX_N = 5
EXTENDED_MAX_N = 7
# invariant computations above this rank are minutes, not seconds
FAST_LIMIT = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("BRAIDINV_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"BRAIDINV_THREADS must be an integer, got {env!r}")
    return 1


def _check_n(n: int, extended: bool):
    if n < 2:
        raise UsageError("--n must be at least 2")
    if n > FAST_LIMIT and not extended:
        raise UsageError(f"n = {n} needs --extended (slow)")


def cmd_hilbert(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.invariant:
        _check_n(args.n, args.extended)
        poly = hilbert_invariants(args.ring, args.n)
    else:
        poly = hilbert_series(args.ring, args.n)
    if args.format == "json":
        print(hilbert_json(args.ring, args.n, poly, invariant=args.invariant), file=out)
    else:
        print(json.dumps(poly.as_list()).replace(" ", ""), file=out)
    return 0


def cmd_straighten(args, out) -> int:
    cls = element_class(args.ring)
    text = " ".join(args.monomial)
    try:
        x = cls.parse(args.n, text)
    except (DomainError, ValueError) as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        print(json.dumps({"ring": cls.ring, "n": args.n, "input": text, "normal_form": str(x)}), file=out)
    else:
        print(x, file=out)
    return 0


def cmd_invariant_basis(args, out) -> int:
    _check_n(args.n, args.extended)
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    basis = invariant_subspace(args.ring, args.n, args.degree)
    if args.format == "json":
        print(json.dumps(basis.to_dict()), file=out)
    else:
        print(f"{basis.ring} n={basis.n} degree={basis.d} dimension={basis.dim}", file=out)
        for v in basis.vectors:
            print(v, file=out)
    return 0


def _run_job(job):
    statement, n = job
    return verify(statement, n)


def cmd_verify(args, out) -> int:
    if args.statement == "all":
        statements = list(STATEMENTS)
    elif args.statement in STATEMENTS:
        statements = [args.statement]
    else:
        known = ", ".join(STATEMENTS)
        raise UsageError(f"unknown statement {args.statement!r}; known: all, {known}")
    if args.n is not None:
        _check_n(args.n, args.extended)
        ranks = [args.n]
    else:
        top = args.max_n if args.max_n is not None else (EXTENDED_MAX_N if args.extended else DEFAULT_MAX_N)
        _check_n(top, args.extended)
        ranks = list(range(2, top + 1))
    jobs = [(s, n) for n in ranks for s in statements]
    threads = _threads(args)
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            reports: List[VerificationReport] = list(pool.map(_run_job, jobs))
    else:
        reports = [_run_job(j) for j in jobs]
    # single emitter, in job order
    for rep in reports:
        print(rep.to_json() if args.format == "json" else rep.line(), file=out)
    failed = sum(not r.passed for r in reports)
    if args.format == "text":
        print(f"{len(reports) - failed}/{len(reports)} passed", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidinv", description="Invariants of the braid arrangement algebras OS_n and VG_n.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--extended", action="store_true", help="allow slow ranks (n = 7)")
    common.add_argument("-v", "--verbose", action="store_true")
    ring = _Parser(add_help=False)
    ring.add_argument("--ring", type=str.upper, choices=("OS", "VG"), required=True)
    ring.add_argument("--n", type=int, required=True)

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("hilbert", parents=[common, ring], help="Hilbert polynomial, low degree first")
    p.add_argument("--invariant", action="store_true", help="invariants under S_n")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("straighten", parents=[common, ring], help="NBC normal form of an element")
    p.add_argument("monomial", nargs="+", help='element text, e.g. "e[1,3]e[2,3]"')
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("verify", parents=[common], help="run verification procedures")
    p.add_argument("--statement", default="all")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--n", type=int)
    group.add_argument("--max-n", type=int)
    p.add_argument("--threads", type=int, help="worker processes (default: $BRAIDINV_THREADS or 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariant-basis", parents=[common, ring], help="basis of the degree-d invariants")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_invariant_basis)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"braidinv: error: {exc}", file=err)
        return 2
    except DomainError as exc:
        print(f"braidinv: error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
