"""``angulate`` command-line interface.

Exit codes: 0 success, 1 verification failure (or no angulation for
``count``, ``exists`` and ``build``), 2 usage or schema error.  ``--seed`` falls back to the
``ANGULATE_SEED`` environment variable, then to 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .arc_count import InvalidSignature, NegativeCount, NoAngulation, angulation_exists, arc_count
from .builder import BadCount, BoundExceeded, build, enumerate_disc
from .flips import flip, flip_inverse, random_flip_walk
from .formats import (
    SchemaError,
    complex_to_data,
    export_dot,
    load_json,
    parse_complex,
    parse_qp,
    serialize_complex,
    serialize_qp,
    complex_from_data,
)
from .ginzburg import double, export_presentation, verify_d_squared
from .mutation import LoopedVertex, check_flip_compatibility, compatibility_walk, mutate, reduce
from .qp import AsymmetricInput, UnknownVertex, qp_of
from .surface import InvalidComplex, SurfaceSignature, UnknownArc

USAGE_ERRORS = (
    SchemaError,
    InvalidComplex,
    InvalidSignature,
    UnknownArc,
    UnknownVertex,
    AsymmetricInput,
    LoopedVertex,
    BadCount,
    BoundExceeded,
    OSError,
)


class UsageError(Exception):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("ANGULATE_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"ANGULATE_SEED must be an integer, got {env!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_qp(path: str):
    """A quiver-with-potential file, or a complex whose QP is extracted."""
    text = _read(path)
    data = load_json(text)
    if isinstance(data, dict) and "polygons" in data:
        return qp_of(complex_from_data(data))
    return parse_qp(text)


def _sig(args) -> SurfaceSignature:
    return SurfaceSignature(args.g, args.b, args.c, args.p)


def cmd_count(args) -> int:
    try:
        res = arc_count(_sig(args), args.m)
    except (NoAngulation, NegativeCount) as e:
        print(f"no ({args.m}+2)-angulation")
        print(str(e), file=sys.stderr)
        return 1
    print(res.n)
    return 0


def cmd_exists(args) -> int:
    ok = angulation_exists(_sig(args), args.m)
    print("true" if ok else "false")
    return 0 if ok else 1


def cmd_build(args) -> int:
    try:
        cx = build(_sig(args), args.m)
    except (NoAngulation, NegativeCount) as e:
        print(str(e), file=sys.stderr)
        return 1
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(serialize_complex(cx), args.out)
    return 0


def cmd_enum_disc(args) -> int:
    found = enumerate_disc(args.m, args.c, args.bound)
    if args.count:
        _emit(f"{len(found)}\n", args.out)
        return 0
    data = {
        "m": args.m,
        "c": args.c,
        "count": len(found),
        "angulations": [complex_to_data(cx) for cx in found],
    }
    _emit(json.dumps(data, sort_keys=True) + "\n", args.out)
    return 0


def cmd_flip(args) -> int:
    cx = parse_complex(_read(args.inp))
    out = flip_inverse(cx, args.arc) if args.inverse else flip(cx, args.arc)[0]
    _emit(serialize_complex(out), args.out)
    return 0


def cmd_walk(args) -> int:
    cx = parse_complex(_read(args.inp))
    trace: list = []
    out = random_flip_walk(cx, args.steps, _seed(args), trace=trace)
    if args.trace:
        print(" ".join(str(a) for _, a in trace), file=sys.stderr)
    _emit(serialize_complex(out), args.out)
    return 0


def cmd_quiver(args) -> int:
    cx = parse_complex(_read(args.inp))
    q, w = qp_of(cx, cross_polygon=args.cross_polygon)
    if args.dot:
        _emit(export_dot(q), args.dot)
    if args.json or not args.dot:
        _emit(serialize_qp(q, w), args.json)
    return 0


def cmd_mutate(args) -> int:
    q, w = _load_qp(args.inp)
    mq, mw, trace = mutate(q, w, args.vertex)
    if not args.no_reduce:
        mq, mw = reduce(mq, mw, trace)
    _emit(serialize_qp(mq, mw), args.out)
    return 0


def cmd_check_compat(args) -> int:
    cx = parse_complex(_read(args.inp))
    if args.walk is not None:
        reports = compatibility_walk(cx, args.walk, _seed(args))
    elif args.arc is not None:
        reports = [check_flip_compatibility(cx, args.arc)]
    else:
        reports = [check_flip_compatibility(cx, a) for a in sorted(cx.arc_ids)]
    failed = 0
    for rep in reports:
        print(rep.summary())
        failed += rep.in_scope and not rep.ok
    checked = sum(r.in_scope for r in reports)
    print(f"{checked} checked, {len(reports) - checked} out of scope, {failed} mismatched")
    return 1 if failed else 0


def cmd_ginzburg(args) -> int:
    q, w = _load_qp(args.inp)
    p = double(q, w, orientation=args.orientation)
    _emit(export_presentation(p), args.out)
    if args.verify:
        rep = verify_d_squared(p)
        for line in rep.problems:
            print(line, file=sys.stderr)
        print("d^2 = 0" if rep.ok else "verification FAILED", file=sys.stderr)
        return 0 if rep.ok else 1
    return 0


def cmd_export_dot(args) -> int:
    q, _ = _load_qp(args.inp)
    _emit(export_dot(q), args.out)
    return 0


def cmd_batch(args) -> int:
    from .batch import batch_verify

    corpus = None
    if args.corpus:
        corpus = load_json(_read(args.corpus))
        if not isinstance(corpus, dict) or not isinstance(corpus.get("entries"), list):
            raise SchemaError("corpus: expected an object with an 'entries' list")
    report = batch_verify(corpus, workers=args.workers)
    _emit(json.dumps(report.as_dict(), indent=1, sort_keys=True) + "\n", args.out)
    return report.exit_code


def _signature_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g", type=int, required=True, help="genus")
    p.add_argument("--b", type=int, required=True, help="boundary components")
    p.add_argument("--c", type=int, required=True, help="marked points on the boundary")
    p.add_argument("--p", type=int, default=0, help="punctures")
    p.add_argument("--m", type=int, required=True, help="polygons have m+2 sides")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="angulate", description="(m+2)-angulations, flips and graded QPs")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of arcs of an angulation")
    _signature_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("exists", help="does an angulation exist")
    _signature_flags(p)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("build", help="construct an angulation of an unpunctured surface")
    _signature_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("enum-disc", help="all angulations of a convex c-gon")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--bound", type=int, default=14)
    p.add_argument("--count-only", "--count", dest="count", action="store_true", help="print only the number")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enum_disc)

    p = sub.add_parser("flip", help="flip one arc")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--arc", type=int, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("walk", help="seeded random flip walk")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--trace", action="store_true", help="print flipped arcs on stderr")
    p.add_argument("--out")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("quiver", help="graded quiver with potential of a complex")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--dot")
    p.add_argument("--json")
    p.add_argument("--cross-polygon", action="store_true", help="include 3-cycles through several polygons")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("mutate", help="graded mutation at a vertex")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--no-reduce", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("check-compat", help="compare flip and mutation")
    p.add_argument("--in", dest="inp", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--arc", type=int)
    g.add_argument("--walk", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_check_compat)

    p = sub.add_parser("ginzburg", help="Ginzburg dg presentation")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--orientation", choices=["lowest", "highest"], default="lowest")
    p.set_defaults(func=cmd_ginzburg)

    p = sub.add_parser("export-dot", help="DOT rendering of a quiver")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("batch", help="verify a corpus of signatures and complexes")
    p.add_argument("--corpus", help="corpus JSON (default: built-in corpus)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_batch)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"angulate: {e}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as e:
        print(f"angulate: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
