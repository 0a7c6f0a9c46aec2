"""Command-line driver.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .encoding import pi_apply, unpair
from .freegroup import ball, format_word, iter_words, parse_word
from .labelings import left_free_witness
from .pointfile import PointFileError, load_point
from .reductions import (Counterexample, Pass, check_A, embed_2to9, fstar,
                         fw, lf_embed)
from .suites import SUITES, Config, run_suites, summarize


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _word(text: str, rank: int):
    try:
        return parse_word(text, rank)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _rank_arg(k: int) -> int:
    if k not in (2, 3):
        raise UsageError(f"--k must be 2 or 3, got {k}")
    return k


def cmd_enum(args, out):
    k = _rank_arg(args.k)
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    words = []
    for w in iter_words(k):
        if len(words) == args.count:
            break
        words.append(format_word(w))
    print(" ".join(words), file=out)
    return 0


def cmd_ball(args, out):
    k = _rank_arg(args.k)
    if args.radius < 0:
        raise UsageError("--radius must be non-negative")
    b = ball(k, _word(args.center, k), args.radius)
    print(" ".join(format_word(w) for w in b), file=out)
    return 0


def cmd_pi(args, out):
    if args.a < 0 or args.k < 0:
        raise UsageError("--a and --k must be non-negative")
    print(pi_apply(args.a, args.k), file=out)
    return 0


def cmd_fw(args, out):
    x = load_point(args.point)
    w = _word(args.w, 2)
    try:
        f = fw(w, x)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(f.eval(_word(args.at, 2)), file=out)
    return 0


def _eval_image(build, args, out):
    x = load_point(args.point)
    try:
        y = build(x)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(y.eval(_word(args.at, 3)), file=out)
    return 0


def cmd_embed(args, out):
    return _eval_image(embed_2to9, args, out)


def cmd_lfembed(args, out):
    return _eval_image(lf_embed, args, out)


def cmd_encode(args, out):
    x = load_point(args.point)
    if args.coords < 1:
        raise UsageError("--coords must be at least 1")
    deepest = max(unpair(k)[1] for k in range(args.coords))
    if deepest > args.max_radius:
        raise UsageError(f"coordinate radius {deepest} exceeds --max-radius {args.max_radius}")
    try:
        # a point of F_2 goes through the embedding first
        y = embed_2to9(x) if x.rank == 2 else x
        codes = fstar(y, args.coords)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(" ".join(str(c.value) for c in codes), file=out)
    return 0


def cmd_check_a(args, out):
    y = load_point(args.point)
    try:
        r = check_A(y, args.imax, args.jmax, mmax=args.mmax)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if isinstance(r, Pass):
        print("PASS", file=out)
        return 0
    if isinstance(r, Counterexample):
        print(f"COUNTEREXAMPLE i={r.i} j={r.j} witness={format_word(r.witness)}", file=out)
        return 1
    print(f"WARNING: INCONCLUSIVE i={r.i} j={r.j}", file=out)
    return 0


def cmd_leftfree(args, out):
    x = load_point(args.point)
    g, gp = _word(args.g, x.rank), _word(args.gp, x.rank)
    if g == gp:
        raise UsageError("--g and --gp must differ")
    h = left_free_witness(x, g, gp, args.radius)
    if h is None:
        print(f"NONE within radius {args.radius}", file=out)
        return 1
    print(format_word(h), file=out)
    return 0


def cmd_verify(args, out):
    if args.depth < 1:
        raise UsageError("--depth must be at least 1")
    cfg = Config.for_depth(args.seed, args.depth)
    names = args.suite or None
    records = run_suites(cfg, names)
    for r in records:
        print(r.line(), file=out)
    summary, code = summarize(records)
    print(summary, file=out)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="shiftred", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enum", help="print g_0 .. g_{N-1}")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.set_defaults(fn=cmd_enum)

    s = sub.add_parser("ball", help="print a ball in enumeration order")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--center", default="1")
    s.add_argument("--radius", type=int, required=True)
    s.set_defaults(fn=cmd_ball)

    s = sub.add_parser("pi", help="apply pi_a to a code")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(fn=cmd_pi)

    s = sub.add_parser("fw", help="evaluate f_w(x) at a word")
    s.add_argument("--w", required=True)
    s.add_argument("--point", required=True)
    s.add_argument("--at", required=True)
    s.set_defaults(fn=cmd_fw)

    for name, fn in (("embed", cmd_embed), ("lfembed", cmd_lfembed)):
        s = sub.add_parser(name, help=f"evaluate the {name} image at a word of F_3")
        s.add_argument("--point", required=True)
        s.add_argument("--at", required=True)
        s.set_defaults(fn=fn)

    s = sub.add_parser("encode", help="print the first ball codes")
    s.add_argument("--point", required=True)
    s.add_argument("--coords", type=int, required=True)
    s.add_argument("--max-radius", type=int, default=6,
                   help="refuse coordinates whose ball radius exceeds this (default 6)")
    s.set_defaults(fn=cmd_encode)

    s = sub.add_parser("check-a", help="check membership in A on a finite range")
    s.add_argument("--point", required=True)
    s.add_argument("--imax", type=int, required=True)
    s.add_argument("--jmax", type=int, required=True)
    s.add_argument("--mmax", type=int, default=None)
    s.set_defaults(fn=cmd_check_a)

    s = sub.add_parser("leftfree", help="search for a left-freeness witness")
    s.add_argument("--point", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--gp", required=True)
    s.add_argument("--radius", type=int, required=True)
    s.set_defaults(fn=cmd_leftfree)

    s = sub.add_parser("verify", help="run the property suites")
    s.add_argument("target", choices=["all"])
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--suite", action="append", choices=sorted(SUITES),
                   help="restrict to a suite (repeatable)")
    s.set_defaults(fn=cmd_verify)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except UsageError as e:
        print(f"usage error: {e}", file=err)
        return 2
    except PointFileError as e:
        print(f"point file error: {e}", file=err)
        return 2
    except OSError as e:
        print(f"error: {e}", file=err)
        return 2


def main():
    sys.exit(run())
