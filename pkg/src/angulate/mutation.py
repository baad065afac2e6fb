"""Graded mutation of a quiver with potential, reduction, and the
flip/mutation compatibility check.

Mutation at ``v`` shifts grades of arrows at ``v`` (incoming +1,
outgoing -1, modulo m+1), adds a composite ``i -> j`` for every
``i -> v`` of grade r < m followed by ``v -> j`` of grade 0, and
rewrites the potential.  A term through ``v`` whose outgoing arrow at
``v`` has grade 0 becomes a 2-cycle made of a composite and the third
arrow of the term; it is dropped from the potential and remembered as a
*witness* so that :func:`reduce` cancels exactly that pair first.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .flips import flip, random_flip_walk
from .qp import (
    AsymmetricInput,
    GradedArrow,
    GradedQuiver,
    Key,
    Superpotential,
    UnknownVertex,
    qp_of,
    word_of,
)
from .surface import PolygonComplex, UnknownArc

__all__ = [
    "LoopedVertex",
    "MutationTrace",
    "CompatibilityReport",
    "mutate",
    "reduce",
    "reduction_diagnostics",
    "check_flip_compatibility",
    "compatibility_walk",
]


class LoopedVertex(ValueError):
    """Mutation at an arc glued to itself inside one polygon (a quiver loop)."""


@dataclass
class MutationTrace:
    vertex: int
    grade_shifts: list[tuple[GradedArrow, int, int]] = field(default_factory=list)
    composites_added: list[GradedArrow] = field(default_factory=list)
    cancelled_pairs: list[tuple[GradedArrow, GradedArrow]] = field(default_factory=list)
    dropped_terms: list[tuple[Key, ...]] = field(default_factory=list)
    added_terms: list[tuple[Key, ...]] = field(default_factory=list)
    # (composite index, parallel arrow index) in the mutated quiver
    witnesses: list[tuple[int, int]] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)


def _shift(a: GradedArrow, v: int, m: int) -> int:
    if a.dst == v:
        return (a.grade + 1) % (m + 1)
    if a.src == v:
        return (a.grade - 1) % (m + 1)
    return a.grade


def mutate(q: GradedQuiver, w: Superpotential, v: int):
    """Unreduced graded mutation at ``v``.

    Returns ``(quiver, potential, trace)``.  Raises :class:`UnknownVertex`,
    :class:`AsymmetricInput` or :class:`LoopedVertex`.
    """
    if v not in q.vertices:
        raise UnknownVertex(v)
    problems = q.symmetry_problems()
    if problems:
        raise AsymmetricInput("; ".join(problems))
    if v in q.looped:
        raise LoopedVertex(f"arc {v} is glued to itself; its quiver vertex carries a loop")
    m = q.m
    trace = MutationTrace(vertex=v)
    arrows = list(q.arrows)
    partner = list(q.partner)

    out: list[GradedArrow] = []
    for a in arrows:
        g = _shift(a, v, m)
        if g != a.grade:
            trace.grade_shifts.append((a, a.grade, g))
        out.append(GradedArrow(a.src, a.dst, g, a.origin))
    new_partner = list(partner)

    comp: dict[tuple[int, int], int] = {}
    for xa, a in enumerate(arrows):
        if a.dst != v or a.grade == m:
            continue
        for xb, b in enumerate(arrows):
            if b.src != v or b.grade != 0 or b.dst == a.src:
                continue
            n = len(out)
            out.append(GradedArrow(a.src, b.dst, a.grade))
            out.append(GradedArrow(b.dst, a.src, m - a.grade))
            new_partner += [n + 1, n]
            comp[(xa, xb)] = n
            trace.composites_added += [out[n], out[n + 1]]

    terms: list[tuple[int, ...]] = []
    # [ba] b* a*: composite, then back through v along the partners
    for (xa, xb), xc in comp.items():
        terms.append((xc, partner[xb], partner[xa]))
    for t in w.terms:
        outs = [x for x in t if arrows[x].src == v]
        if not outs:
            terms.append(t)
            continue
        k = t.index(outs[0])
        x_vp, x_pq, x_qv = t[k:] + t[:k]
        if arrows[x_vp].grade == 0:
            trace.dropped_terms.append(word_of(q, t))
            if (x_qv, x_vp) in comp:
                trace.witnesses.append((comp[(x_qv, x_vp)], partner[x_pq]))
            continue
        terms.append(t)
        p, qq = arrows[x_vp].dst, arrows[x_pq].dst
        x_pv = partner[x_vp]
        for xb, b in enumerate(arrows):
            if b.src == v and b.grade == 0 and b.dst not in (p, qq):
                if (x_qv, xb) in comp and (x_pv, xb) in comp:
                    terms.append((x_pq, comp[(x_qv, xb)], new_partner[comp[(x_pv, xb)]]))

    mq = GradedQuiver(m, q.vertices, tuple(out), tuple(new_partner), q.looped)
    if not mq.is_symmetric():  # pragma: no cover - construction keeps pairs
        raise AssertionError("mutation broke symmetry: " + "; ".join(mq.symmetry_problems()))
    base = set(w.terms)
    mw = Superpotential.from_terms(terms)
    trace.added_terms = [word_of(mq, t) for t in mw.terms if t not in base]
    return mq, mw, trace


def _cancel(alive, partner, x, y):
    for z in (x, y, partner[x], partner[y]):
        alive[z] = False


def reduction_diagnostics(q: GradedQuiver) -> list[str]:
    """Parallel arrows whose grades differ by 2 or more (never cancelled)."""
    by_pair: dict[tuple[int, int], set[int]] = {}
    for a in q.arrows:
        by_pair.setdefault((a.src, a.dst), set()).add(a.grade)
    out = []
    for (i, j), gs in sorted(by_pair.items()):
        gs = sorted(gs)
        if len(gs) > 1 and all(b - a >= 2 for a, b in zip(gs, gs[1:])):
            out.append(f"parallel arrows {i}->{j} with grades {gs} left in place")
    return out


def reduce(
    q: GradedQuiver,
    w: Superpotential,
    trace: Optional[MutationTrace] = None,
    *,
    rng: Optional[random.Random] = None,
):
    """Cancel parallel pairs of adjacent grades, with their partners.

    Witnessed pairs from ``trace`` go first; afterwards the lowest
    ``(i, j, r)`` having a parallel ``r + 1`` is cancelled, until none
    is left.  With ``rng`` the remaining pairs are picked at random
    instead (used to test order independence).  Terms touching a removed
    arrow are deleted.  Returns ``(quiver, potential)``.
    """
    problems = q.symmetry_problems()
    if problems:
        raise AsymmetricInput("; ".join(problems))
    arrows, partner = q.arrows, q.partner
    alive = [True] * len(arrows)
    log = trace.cancelled_pairs if trace is not None else None

    for x, y in (trace.witnesses if trace is not None else ()):
        a, b = arrows[x], arrows[y]
        if alive[x] and alive[y] and (a.src, a.dst) == (b.src, b.dst) and abs(a.grade - b.grade) == 1:
            _cancel(alive, partner, x, y)
            if log is not None:
                log.append((a, b))

    while True:
        live: dict[Key, list[int]] = {}
        for x, a in enumerate(arrows):
            if alive[x]:
                live.setdefault(a.key, []).append(x)
        pairs = [(k, (k[0], k[1], k[2] + 1)) for k in sorted(live) if (k[0], k[1], k[2] + 1) in live]
        if not pairs:
            break
        if rng is None:
            lo, hi = pairs[0]
            x, y = live[lo][0], live[hi][0]
        else:
            lo, hi = rng.choice(pairs)
            x, y = rng.choice(live[lo]), rng.choice(live[hi])
        _cancel(alive, partner, x, y)
        if log is not None:
            log.append((arrows[x], arrows[y]))

    keep = [x for x in range(len(arrows)) if alive[x]]
    ren = {x: k for k, x in enumerate(keep)}
    rq = GradedQuiver(
        q.m,
        q.vertices,
        tuple(arrows[x] for x in keep),
        tuple(ren[partner[x]] for x in keep),
        q.looped,
    )
    rw = Superpotential.from_terms(
        tuple(ren[x] for x in t) for t in w.terms if all(alive[x] for x in t)
    )
    if trace is not None:
        trace.diagnostics = reduction_diagnostics(rq)
    return rq, rw


@dataclass
class CompatibilityReport:
    arc: int
    in_scope: bool
    quivers_equal: bool = False
    potentials_equal: bool = False
    lhs: Optional[tuple[GradedQuiver, Superpotential]] = None
    rhs: Optional[tuple[GradedQuiver, Superpotential]] = None
    trace: Optional[MutationTrace] = None
    diff: dict = field(default_factory=dict)
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.in_scope and self.quivers_equal and self.potentials_equal

    def summary(self) -> str:
        if not self.in_scope:
            return f"arc {self.arc}: skipped ({self.reason})"
        if self.ok:
            return f"arc {self.arc}: equal"
        return f"arc {self.arc}: MISMATCH {self.diff}"


def _diff(lq, lw, rq, rw) -> dict:
    lc, rc = lq.counts(), rq.counts()
    lt, rt = lw.words(lq), rw.words(rq)
    out = {}
    if lc != rc:
        out["arrows_only_mutated"] = sorted((lc - rc).elements())
        out["arrows_only_flipped"] = sorted((rc - lc).elements())
    if lt != rt:
        out["terms_only_mutated"] = sorted((lt - rt).elements())
        out["terms_only_flipped"] = sorted((rt - lt).elements())
    return out


def check_flip_compatibility(cx: PolygonComplex, a: int) -> CompatibilityReport:
    """Compare reduce(mutate(QP(cx), a)) with reduce(QP(flip(cx, a)))."""
    if a not in cx.arc_ids:
        raise UnknownArc(a)
    q, w = qp_of(cx)
    if a in q.looped:
        return CompatibilityReport(a, in_scope=False, reason="arc glued to itself (looped vertex)")
    mq, mw, trace = mutate(q, w, a)
    lq, lw = reduce(mq, mw, trace)
    fq, fw = qp_of(flip(cx, a)[0])
    rq, rw = reduce(fq, fw)
    qe = lq == rq
    we = lw.words(lq) == rw.words(rq)
    return CompatibilityReport(
        a,
        in_scope=True,
        quivers_equal=qe,
        potentials_equal=we,
        lhs=(lq, lw),
        rhs=(rq, rw),
        trace=trace,
        diff=_diff(lq, lw, rq, rw),
    )


def compatibility_walk(cx: PolygonComplex, steps: int, seed: int) -> list[CompatibilityReport]:
    """Check every flip of a seeded random walk (same draws as random_flip_walk)."""
    walk: list = []
    random_flip_walk(cx, steps, seed, trace=walk)
    return [check_flip_compatibility(cur, a) for cur, a in walk]
