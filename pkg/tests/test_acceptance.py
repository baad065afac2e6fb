"""Acceptance criteria 1-9.

Each criterion is a function that asserts and returns a one-line detail
string.  Under pytest the outcome of every criterion is collected and
printed as a PASS/FAIL line in the terminal summary; running this file
directly prints the same lines.
"""

from __future__ import annotations

import sys
import time
from collections import Counter

import pytest

from angulate import (
    SurfaceSignature,
    angulation_exists,
    arc_count,
    arc_count_formula,
    build,
    check_flip_compatibility,
    compatibility_walk,
    disc_from_chords,
    double,
    enumerate_disc,
    fan_disc,
    flip,
    flip_inverse,
    mutate,
    qp_of,
    reduce,
    signature,
    validate,
    verify_d_squared,
)
from angulate.builder import enumerate_disc_chords
from angulate.gallery import decagon, torus
from angulate.qp import canonical_word

import corpus
import oracles

SWEEP = [
    (g, b, c, p, m)
    for g in range(4)
    for b in range(1, 5)
    for c in range(b, 31)
    for p in range(5)
    for m in range(1, 7)
]


def _existing(sweep=SWEEP):
    for g, b, c, p, m in sweep:
        if angulation_exists(SurfaceSignature(g, b, c, p), m):
            yield g, b, c, p, m


# ---- 1 -----------------------------------------------------------------------


def criterion_1() -> str:
    t0 = time.perf_counter()
    assert arc_count(SurfaceSignature(1, 1, 2, 0), 2).n == 3
    assert arc_count(SurfaceSignature(1, 1, 1, 1), 2).n == 5
    checked = 0
    for g, b, c, p, m in _existing():
        assert arc_count_formula(g, b, c, p, m).denominator == 1, (g, b, c, p, m)
        checked += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    return f"torus 3, punctured torus 5, {checked} integral signatures, {elapsed:.2f}s"


# ---- 2 -----------------------------------------------------------------------


def criterion_2() -> str:
    counts = Counter()
    for g, b, c, p, m in _existing():
        n = arc_count_formula(g, b, c, p, m)
        if g >= 1:
            assert arc_count_formula(g - 1, b + 1, c + 2, p, m) == n - 1
            counts["handle"] += 1
        if b >= 2:
            assert arc_count_formula(g, b - 1, c + 2, p, m) == n - 1
            counts["join"] += 1
        if p >= 1:
            assert arc_count_formula(g, b, c + 1, p - 1, m) == n - 2
            counts["puncture"] += 1
    return ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))


# ---- 3 -----------------------------------------------------------------------


def _check_arc_count(cx, sig, m):
    assert validate(cx).ok, validate(cx).problems
    assert signature(cx) == sig
    n = arc_count(sig, m).n
    assert cx.n_arcs == n == oracles.euler_arc_count(sig.g, sig.b, sig.c, m)


def criterion_3() -> str:
    discs = 0
    for m in range(1, 4):
        for c in range(m + 2, 13):
            if (c - 2) % m:
                continue
            sig = SurfaceSignature(0, 1, c, 0)
            _check_arc_count(fan_disc(m, c), sig, m)
            for cx in enumerate_disc(m, c):
                _check_arc_count(cx, sig, m)
                discs += 1
    built = 0
    for sig, m, cx in corpus.built_complexes(2, 2, 8, 4):
        _check_arc_count(cx, sig, m)
        built += 1
    return f"{discs} disc angulations, {built} built surfaces"


# ---- 4 -----------------------------------------------------------------------


def criterion_4() -> str:
    t0 = time.perf_counter()
    assert len(enumerate_disc(1, 6)) == 14
    assert len(enumerate_disc(2, 6)) == 3
    total = 0
    for m in range(1, 5):
        for n in range(1, 6):
            c = m * n + 2
            found = enumerate_disc_chords(m, c, bound=c)
            assert len(set(found)) == len(found)
            assert len(found) == oracles.fuss_catalan(m, n), (m, n)
            total += len(found)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60, f"took {elapsed:.1f}s"
    return f"20 (m, n) cases, {total} dissections, {elapsed:.1f}s"


# ---- 5 -----------------------------------------------------------------------


def _round_trips(cx, a):
    assert flip_inverse(flip(cx, a)[0], a).same_as(cx)
    assert flip(flip_inverse(cx, a), a)[0].same_as(cx)


def criterion_5() -> str:
    import random

    checked = 0
    for cx in corpus.small_corpus():
        for a in sorted(cx.arc_ids):
            _round_trips(cx, a)
            checked += 1
    walks = 0
    starts = [decagon(), torus(), build(SurfaceSignature(0, 2, 6, 0), 3), build(SurfaceSignature(2, 1, 2, 0), 2)]
    for seed, cx in enumerate(starts):
        rng = random.Random(seed)
        for _ in range(500):
            a = rng.choice(sorted(cx.arc_ids))
            _round_trips(cx, a)
            cx = flip(cx, a)[0]
            walks += 1
    return f"{checked} corpus arcs, {walks} walk steps"


# ---- 6 -----------------------------------------------------------------------

DECAGON_ARROWS = {(1, 2, 0), (2, 1, 2), (2, 3, 0), (3, 2, 2), (3, 1, 1), (1, 3, 1)}
TORUS_ARROWS = {(3, 1, 1), (1, 3, 1), (3, 2, 0), (2, 3, 2), (1, 2, 2), (2, 1, 0)}


def criterion_6() -> str:
    q, w = qp_of(decagon())
    assert q.counts() == Counter(DECAGON_ARROWS)
    assert len(q.arrows) == 6
    assert w.words(q) == Counter({canonical_word([(3, 1, 1), (1, 2, 0), (2, 3, 0)]): 1})
    assert all(sum(q.arrows[x].grade for x in t) == 1 for t in w.terms)

    q, w = qp_of(torus())
    # every listed arrow appears once per square: support equal, multiplicity 2
    assert set(q.counts()) == TORUS_ARROWS
    assert set(q.counts().values()) == {2}
    assert all(sum(q.arrows[x].grade for x in t) == 1 for t in w.terms)
    return "decagon exact (6 arrows, W one term of degree 1); torus support = 6 listed arrows, each twice"


# ---- 7 -----------------------------------------------------------------------


def criterion_7() -> str:
    t0 = time.perf_counter()
    # worked examples, including the unreduced mutations as displayed
    q, w = qp_of(decagon())
    mq, mw, trace = mutate(q, w, 2)
    assert mq.counts() == Counter(
        {(1, 3, 1): 1, (1, 3, 0): 1, (3, 1, 1): 1, (3, 1, 2): 1, (1, 2, 1): 1, (2, 1, 1): 1, (2, 3, 2): 1, (3, 2, 0): 1}
    )
    rq, rw = reduce(mq, mw, trace)
    assert rq.counts() == Counter({(1, 2, 1): 1, (2, 1, 1): 1, (2, 3, 2): 1, (3, 2, 0): 1})
    assert not rw.terms
    assert check_flip_compatibility(decagon(), 2).ok

    q, w = qp_of(torus())
    mq, _, _ = mutate(q, w, 2)
    assert set(mq.counts()) == {(3, 1, 1), (3, 1, 0), (1, 3, 1), (1, 3, 2), (3, 2, 1), (2, 3, 1), (1, 2, 0), (2, 1, 2)}
    assert check_flip_compatibility(torus(), 2).ok

    in_scope = out_of_scope = 0
    for k, (sig, m) in enumerate(corpus.walk_signatures()):
        for seed in range(3):
            for rep in compatibility_walk(build(sig, m), 40, 100 * k + seed):
                if not rep.in_scope:
                    out_of_scope += 1
                    continue
                assert rep.ok, f"{sig} m={m}: {rep.summary()}"
                in_scope += 1
    elapsed = time.perf_counter() - t0
    assert in_scope >= 500
    assert elapsed < 300, f"took {elapsed:.0f}s"
    return (
        f"both worked examples; {in_scope} walk flips equal, "
        f"{out_of_scope} at looped vertices out of scope, {elapsed:.1f}s"
    )


# ---- 8 -----------------------------------------------------------------------


def _certify(q, w):
    for orientation in ("lowest", "highest"):
        rep = verify_d_squared(double(q, w, orientation=orientation))
        assert rep.pair_degrees_ok and rep.homogeneous, rep.problems
        assert rep.d_squared_zero, rep.problems[:3]


def criterion_8() -> str:
    checked = looped = looped_ok = 0
    pool = list(corpus.small_corpus())
    pool += [cx for _, _, cx in corpus.built_complexes(2, 2, 8, 4)]
    for cx in pool:
        q, w = qp_of(cx)
        if q.looped:
            # out of scope; counted for information only
            looped += 1
            looped_ok += verify_d_squared(double(q, w)).ok
            continue
        _certify(q, w)
        checked += 1

    # injected perturbations must be caught
    p = double(*qp_of(decagon()))
    loop = next(name for name, chain in p.differential.items() if name.startswith("t") and chain)
    dropped = dict(p.differential)
    dropped[loop] = dict(list(p.differential[loop].items())[1:])
    assert not verify_d_squared(type(p)(p.m, p.generators, dropped)).d_squared_zero
    flipped = dict(p.differential)
    path, coeff = next(iter(p.differential[loop].items()))
    flipped[loop] = {**p.differential[loop], path: -coeff}
    assert not verify_d_squared(type(p)(p.m, p.generators, flipped)).d_squared_zero
    return (
        f"{checked} QPs certified under both orientations, 2 perturbations detected; "
        f"looped complexes out of scope ({looped_ok} of {looped} certify anyway)"
    )


# ---- 9 -----------------------------------------------------------------------


def _grade0(q):
    return Counter({(i, j): n for (i, j, r), n in q.counts().items() if r == 0})


def _b_quiver(b, idx):
    return Counter({(idx[d], idx[e]): v for d in b for e, v in b[d].items() if v > 0})


def criterion_9() -> str:
    cases = 0
    for c in (5, 6):
        for chords in enumerate_disc_chords(1, c):
            chords = list(chords)
            idx = {d: k for k, d in enumerate(chords)}
            cx = disc_from_chords(1, c, chords)
            b = oracles.b_matrix(c, chords)
            q, w = qp_of(cx)
            assert _grade0(q) == _b_quiver(b, idx)
            for k, d in enumerate(chords):
                mq, mw, trace = mutate(q, w, k)
                rq, _ = reduce(mq, mw, trace)
                assert _grade0(rq) == _b_quiver(oracles.fz_mutate(b, d), idx)
                cases += 1
    return f"{cases} classical mutations on pentagon and hexagon triangulations"


CRITERIA = {
    1: ("arc-count reproduction", criterion_1),
    2: ("proof-recurrence identities", criterion_2),
    3: ("builder oracle equivalence", criterion_3),
    4: ("Fuss-Catalan enumeration counts", criterion_4),
    5: ("flip invertibility", criterion_5),
    6: ("worked-example QP reproduction", criterion_6),
    7: ("flip/mutation compatibility", criterion_7),
    8: ("Ginzburg certificates", criterion_8),
    9: ("m=1 classical regression", criterion_9),
}


def _run(n: int) -> tuple[bool, str]:
    title, fn = CRITERIA[n]
    try:
        return True, fn()
    except AssertionError as e:
        return False, f"assertion failed: {e}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    from conftest import ACCEPTANCE

    ok, detail = _run(n)
    ACCEPTANCE[n] = (CRITERIA[n][0], ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {CRITERIA[n][0]}  [{detail}]")
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        ok, detail = _run(n)
        failed += not ok
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {CRITERIA[n][0]}  [{detail}]")
    sys.exit(1 if failed else 0)
