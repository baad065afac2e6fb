"""Twist and flip of an arc as surgery on polygon boundary words.

For an arc with occurrences ``o`` and ``o'``, the flip removes the side
immediately after ``o`` (clockwise) and reinserts it immediately before
``o'``, and symmetrically for the side after ``o'``.  In the two-polygon
case this is the usual picture: the two (m+2)-gons merge into a
(2m+2)-gon and the arc is redrawn with both endpoints advanced one corner
clockwise.  The same rule covers an arc glued to itself inside one
polygon, where it reproduces the twist on the universal cover.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .surface import (
    InvalidComplex,
    PolygonComplex,
    Side,
    UnknownArc,
    arc,
    validate,
)

__all__ = [
    "FlipRecord",
    "flip",
    "flip_inverse",
    "merged_boundary",
    "random_flip_walk",
    "twist_endpoints",
]


@dataclass(frozen=True)
class FlipRecord:
    flipped_arc: int
    merged_boundary: tuple[Side, ...]
    new_arc: int


def _occurrences(cx: PolygonComplex, a: int) -> list[tuple[int, int]]:
    occ = cx.occurrences(a)
    if not occ:
        raise UnknownArc(a)
    if len(occ) != 2:
        raise InvalidComplex(f"arc {a} occurs {len(occ)} times")
    return occ


def merged_boundary(cx: PolygonComplex, a: int) -> tuple[Side, ...]:
    """Cyclic word of the (2m+2)-gon obtained by deleting arc ``a``.

    Read on the universal cover: the sides of the lift through the first
    occurrence, then those of the lift through the second.  When the arc
    is glued to itself the word contains the neighbouring lifts of ``a``.
    """
    (p, t), (q, u) = _occurrences(cx, a)
    P, Q = cx.polygons[p], cx.polygons[q]
    rest_p = P[t + 1:] + P[:t]
    rest_q = Q[u + 1:] + Q[:u]
    return rest_p + rest_q


def _move(cx: PolygonComplex, a: int, direction: int, occ=None):
    """Corner advance of arc ``a``; returns the complex and where each
    occurrence (in the order of ``occ``) ended up."""
    if occ is None:
        occ = _occurrences(cx, a)
    polys = [list(poly) for poly in cx.polygons]
    me = arc(a)
    # tag the two occurrences so positions can be found after edits
    tags = [("occ", 0), ("occ", 1)]
    for (p, t), tag in zip(occ, tags):
        polys[p][t] = tag

    def pos(tag):
        for pi, poly in enumerate(polys):
            for ti, s in enumerate(poly):
                if s == tag:
                    return pi, ti
        raise AssertionError(tag)

    # pick up the neighbour of each occurrence (after it for +1, before it
    # for -1) before editing anything
    moved = []
    for tag in tags:
        pi, ti = pos(tag)
        k = len(polys[pi])
        ni = (ti + direction) % k
        nb = polys[pi][ni]
        if isinstance(nb, tuple) and nb and nb[0] == "occ":
            raise InvalidComplex(f"arc {a} has adjacent occurrences (closed vertex link)")
        moved.append((nb, ("moved", tag[1])))
        polys[pi][ni] = ("moved", tag[1])
    for pi in range(len(polys)):
        polys[pi] = [s for s in polys[pi] if not (isinstance(s, tuple) and s[:1] == ("moved",))]
    for (nb, _), tag in zip(moved, reversed(tags)):
        pi, ti = pos(tag)
        if direction > 0:
            polys[pi].insert(ti, nb)  # immediately before the partner
        else:
            polys[pi].insert(ti + 1, nb)  # immediately after the partner
    where = [pos(tag) for tag in tags]
    out = [[me if (isinstance(s, tuple) and s[:1] == ("occ",)) else s for s in poly] for poly in polys]
    return PolygonComplex(cx.m, out), where


def flip(cx: PolygonComplex, a: int) -> tuple[PolygonComplex, FlipRecord]:
    """Flip at arc ``a``: replace it by its clockwise twist.

    The arc keeps its id.  Returns the new complex and a record holding
    the merged (2m+2)-gon boundary.
    """
    if a not in cx.arc_ids:
        raise UnknownArc(a)
    rep = validate(cx)
    if not rep.ok:
        raise InvalidComplex("; ".join(rep.problems))
    word = merged_boundary(cx, a)
    out, _ = _move(cx, a, +1)
    return out, FlipRecord(flipped_arc=a, merged_boundary=word, new_arc=a)


def flip_inverse(cx: PolygonComplex, a: int) -> PolygonComplex:
    """Undo :func:`flip`: move the arc one corner counterclockwise."""
    if a not in cx.arc_ids:
        raise UnknownArc(a)
    rep = validate(cx)
    if not rep.ok:
        raise InvalidComplex("; ".join(rep.problems))
    return _move(cx, a, -1)[0]


def twist_endpoints(cx: PolygonComplex, a: int, times: int):
    """Twist arc ``a`` repeatedly, following each of its two occurrences.

    Returns the final complex and the positions ``(polygon, side)`` that
    the original first and second occurrence moved to.
    """
    if a not in cx.arc_ids:
        raise UnknownArc(a)
    occ = _occurrences(cx, a)
    cur = cx
    for _ in range(times):
        cur, occ = _move(cur, a, +1, occ)
    return cur, occ


def random_flip_walk(cx: PolygonComplex, steps: int, seed: int, *, trace: list | None = None) -> PolygonComplex:
    """Apply ``steps`` flips at arcs drawn with ``random.Random(seed)``.

    Every intermediate complex is validated.  If ``trace`` is given, the
    sequence of (complex before, flipped arc) is appended to it.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    cur = cx
    for _ in range(steps):
        arcs = sorted(cur.arc_ids)
        if not arcs:
            break
        a = rng.choice(arcs)
        if trace is not None:
            trace.append((cur, a))
        cur, _ = flip(cur, a)
        rep = validate(cur)
        if not rep.ok:
            raise InvalidComplex(f"walk produced invalid complex after flipping {a}: {rep.problems}")
    return cur
