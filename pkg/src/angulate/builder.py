"""Constructing angulations.

Discs are handled geometrically: marked points ``0..c-1`` sit
counterclockwise on a circle, boundary edge ``k`` joins points ``k`` and
``k+1``, and arcs are chords.  Other unpunctured surfaces are reached
from a disc by gluing pairs of boundary edges, which is the inductive
cutting argument for the arc count run backwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arc_count import NoAngulation, angulation_exists, arc_count
from .surface import (
    PolygonComplex,
    Side,
    SurfaceSignature,
    arc,
    bnd,
    boundary_cycles,
    signature,
    validate,
)

__all__ = [
    "BadCount",
    "BoundExceeded",
    "BuildPlan",
    "disc_from_chords",
    "fan_disc",
    "glue_boundary_edges",
    "build",
    "build_plan",
    "enumerate_disc",
    "enumerate_disc_chords",
]

DEFAULT_ENUM_BOUND = 14


class BadCount(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


@dataclass
class BuildPlan:
    """Steps replayed from a disc to reach a target signature."""

    base_c: int
    steps: list[str] = field(default_factory=list)  # "join" | "handle"

    def signatures(self) -> list[tuple[int, int, int]]:
        g, b, c = 0, 1, self.base_c
        out = [(g, b, c)]
        for s in self.steps:
            if s == "join":
                b, c = b + 1, c - 2
            elif s == "handle":
                g, b, c = g + 1, b - 1, c - 2
            else:
                raise ValueError(s)
            out.append((g, b, c))
        return out


def _chord_side(u: int, w: int, c: int, arc_ids: dict) -> Side:
    u, w = min(u, w), max(u, w)
    if w == u + 1:
        return bnd(u)
    if (u, w) == (0, c - 1):
        return bnd(c - 1)
    return arc(arc_ids[(u, w)])


def disc_from_chords(
    m: int, c: int, chords: Iterable[tuple[int, int]], labels: Sequence[int] | None = None
) -> PolygonComplex:
    """Polygon complex of the c-gon cut along noncrossing ``chords``.

    ``labels[k]`` is the arc id of the k-th chord (default: its index).
    Raises :class:`BadCount` if the pieces are not all (m+2)-gons.
    """
    chords = [tuple(sorted(ch)) for ch in chords]
    if labels is None:
        labels = list(range(len(chords)))
    arc_ids = dict(zip(chords, labels))
    # split recursively: each cell is a sorted list of its vertices
    cells = [list(range(c))]
    for ch in chords:
        for idx, cell in enumerate(cells):
            if ch[0] in cell and ch[1] in cell:
                i, j = cell.index(ch[0]), cell.index(ch[1])
                if j - i < 2 or (i == 0 and j == len(cell) - 1):
                    continue
                cells[idx: idx + 1] = [cell[i: j + 1], cell[: i + 1] + cell[j:]]
                break
        else:
            raise BadCount(f"chord {ch} is not a diagonal of any cell")
    polys = []
    for cell in cells:
        if len(cell) != m + 2:
            raise BadCount(f"cell {cell} has {len(cell)} sides, expected {m + 2}")
        # counterclockwise vertex order; clockwise sides run backwards
        k = len(cell)
        polys.append(
            [_chord_side(cell[(t + 1) % k], cell[t], c, arc_ids) for t in reversed(range(k))]
        )
    return PolygonComplex(m, polys)


def fan_disc(m: int, c: int) -> PolygonComplex:
    """Disc angulation with every arc at marked point 0."""
    if m < 1 or c < m + 2 or (c - 2) % m:
        raise BadCount(f"no ({m}+2)-angulation of a {c}-gon")
    F = (c - 2) // m
    chords = [(0, j * m + 1) for j in range(1, F)]
    return disc_from_chords(m, c, chords)


def glue_boundary_edges(cx: PolygonComplex, e1: int, e2: int, new_arc: int) -> PolygonComplex:
    """Identify boundary edges ``e1`` and ``e2`` into a new arc."""
    polys = [
        [arc(new_arc) if (not s.is_arc and s.id in (e1, e2)) else s for s in poly]
        for poly in cx.polygons
    ]
    return PolygonComplex(cx.m, polys)


def _relabel_boundary(cx: PolygonComplex) -> PolygonComplex:
    ids = sorted(cx.boundary_ids)
    ren = {old: new for new, old in enumerate(ids)}
    return PolygonComplex(
        cx.m, [[s if s.is_arc else bnd(ren[s.id]) for s in poly] for poly in cx.polygons]
    )


def _glue_candidates(cx: PolygonComplex, target: SurfaceSignature, same_component: bool):
    """Valid gluings reaching ``target``, preferred ones first.

    Gluings leaving no arc with both sides in one polygon come first;
    within each group, lowest edge ids first.
    """
    cycles = boundary_cycles(cx)
    comp = {e: k for k, cyc in enumerate(cycles) for e in cyc}
    edges = sorted(comp)
    new_arc = max(cx.arc_ids, default=-1) + 1
    later = []
    for e1 in edges:
        for e2 in edges:
            if e2 <= e1 or (comp[e1] == comp[e2]) != same_component:
                continue
            out = glue_boundary_edges(cx, e1, e2, new_arc)
            if validate(out).ok and signature(out) == target:
                if _has_self_glued(out):
                    later.append(out)
                else:
                    yield _relabel_boundary(out)
    for out in later:
        yield _relabel_boundary(out)


def _has_self_glued(cx: PolygonComplex) -> bool:
    return any(len({p for p, _ in cx.occurrences(a)}) == 1 for a in cx.arc_ids)


def build_plan(sig: SurfaceSignature, m: int) -> BuildPlan:
    if sig.p:
        raise ValueError("builder constructs unpunctured surfaces only")
    if not angulation_exists(sig, m):
        raise NoAngulation(f"no ({m}+2)-angulation for {sig}")
    handles = ["handle"] * sig.g
    joins = ["join"] * (sig.b - 1 + sig.g)
    base_c = sig.c + 2 * (len(handles) + len(joins))
    return BuildPlan(base_c=base_c, steps=joins + handles)


def build(sig: SurfaceSignature, m: int) -> PolygonComplex:
    """Deterministic angulation of an unpunctured surface.

    Starts from the fan disc and glues boundary edges: a gluing on one
    boundary component splits it in two, a gluing across components
    merges them and adds a handle.  Gluings are tried depth-first: at
    each step the lowest pair of edge ids that reaches the expected
    signature, preferring pairs where no arc ends up with both sides in
    one polygon, backtracking if a later step gets stuck.
    """
    arc_count(sig, m)  # raises NoAngulation / NegativeCount
    plan = build_plan(sig, m)
    targets = [
        (SurfaceSignature(g, b, c, 0), step == "join")
        for step, (g, b, c) in zip(plan.steps, plan.signatures()[1:])
    ]

    def extend(cx: PolygonComplex, k: int):
        if k == len(targets):
            return cx
        target, same = targets[k]
        for nxt in _glue_candidates(cx, target, same):
            done = extend(nxt, k + 1)
            if done is not None:
                return done
        return None

    out = extend(fan_disc(m, plan.base_c), 0)
    if out is None:
        raise NoAngulation(f"no gluing sequence reaches {sig} for m={m}")
    return out


def _dissections(verts: tuple[int, ...], m: int):
    """All (m+2)-gon dissections of the convex polygon ``verts``, as chord sets."""
    k = len(verts)
    if k == m + 2:
        yield ()
        return
    if k < m + 2 or (k - 2) % m:
        return
    # the cell on side (verts[0], verts[-1]) picks m intermediate vertices
    last = k - 1

    def picks(start: int, left: int):
        if left == 0:
            if _gap_ok(last - start):
                yield ()
            return
        for nxt in range(start + 1, last):
            if _gap_ok(nxt - start):
                for rest in picks(nxt, left - 1):
                    yield (nxt,) + rest

    def _gap_ok(d: int) -> bool:
        return d == 1 or (d + 1 >= m + 2 and (d - 1) % m == 0)

    for mids in picks(0, m):
        idx = (0,) + mids + (last,)
        subs = []
        own = []
        for a, b in zip(idx, idx[1:]):
            if b - a > 1:
                own.append((verts[a], verts[b]))
                subs.append(verts[a: b + 1])

        def combine(j):
            if j == len(subs):
                yield ()
                return
            for d in _dissections(subs[j], m):
                for rest in combine(j + 1):
                    yield d + rest

        for inner in combine(0):
            yield tuple(own) + inner


def enumerate_disc_chords(m: int, c: int, bound: int = DEFAULT_ENUM_BOUND) -> list[tuple]:
    if m < 1 or c < m + 2 or (c - 2) % m:
        raise BadCount(f"no ({m}+2)-angulation of a {c}-gon")
    if c > bound:
        raise BoundExceeded(f"c={c} exceeds enumeration bound {bound}")
    return sorted(tuple(sorted(ch)) for ch in _dissections(tuple(range(c)), m))


def enumerate_disc(m: int, c: int, bound: int = DEFAULT_ENUM_BOUND) -> list[PolygonComplex]:
    """Every (m+2)-angulation of the labeled convex c-gon, sorted by chord set."""
    return [disc_from_chords(m, c, chords) for chords in enumerate_disc_chords(m, c, bound)]
