"""Polygon-gluing model of an (m+2)-angulated marked surface.

A complex is a list of oriented polygons whose sides are either arcs
(each glued to exactly one other arc side, orientation reversed) or
boundary edges (each occurring once).  Side lists are read clockwise.
Marked points are never stored: they are the vertex classes obtained by
gluing polygon corners.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

__all__ = [
    "Side",
    "arc",
    "bnd",
    "PolygonComplex",
    "SurfaceSignature",
    "ValidationReport",
    "InvalidComplex",
    "UnknownArc",
    "validate",
    "signature",
    "arcs_of",
    "polygons_adjacent_to",
    "canonical_form",
]


class InvalidComplex(ValueError):
    """Raised when an operation needs a valid complex and did not get one."""


class UnknownArc(KeyError):
    pass


class Side(NamedTuple):
    kind: str  # "arc" or "bnd"
    id: int

    @property
    def is_arc(self) -> bool:
        return self.kind == "arc"

    def __repr__(self) -> str:
        return f"{'a' if self.is_arc else 'b'}{self.id}"


def arc(i: int) -> Side:
    return Side("arc", i)


def bnd(i: int) -> Side:
    return Side("bnd", i)


@dataclass(frozen=True)
class SurfaceSignature:
    """Genus, boundary components, boundary marked points, punctures."""

    g: int
    b: int
    c: int
    p: int = 0

    def problems(self) -> list[str]:
        out = []
        if self.g < 0:
            out.append(f"genus must be >= 0, got {self.g}")
        if self.b < 1:
            out.append(f"need at least one boundary component, got b={self.b}")
        if self.c < self.b:
            out.append(f"each boundary component needs a marked point (c={self.c} < b={self.b})")
        if self.p < 0:
            out.append(f"punctures must be >= 0, got {self.p}")
        return out

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.g, self.b, self.c, self.p)


@dataclass(frozen=True)
class PolygonComplex:
    m: int
    polygons: tuple[tuple[Side, ...], ...]

    def __init__(self, m: int, polygons: Iterable[Iterable[Side]]):
        object.__setattr__(self, "m", int(m))
        object.__setattr__(
            self, "polygons", tuple(tuple(Side(*s) for s in poly) for poly in polygons)
        )

    @cached_property
    def _index(self) -> dict[Side, tuple[tuple[int, int], ...]]:
        where: dict[Side, list[tuple[int, int]]] = {}
        for pi, poly in enumerate(self.polygons):
            for t, s in enumerate(poly):
                where.setdefault(s, []).append((pi, t))
        return {s: tuple(v) for s, v in where.items()}

    @property
    def arc_ids(self) -> frozenset[int]:
        return frozenset(s.id for s in self._index if s.kind == "arc")

    @property
    def boundary_ids(self) -> frozenset[int]:
        return frozenset(s.id for s in self._index if s.kind != "arc")

    @property
    def n_arcs(self) -> int:
        return len(self.arc_ids)

    def occurrences(self, arc_id: int) -> list[tuple[int, int]]:
        return list(self._index.get(Side("arc", arc_id), ()))

    def canonical(self) -> "PolygonComplex":
        return canonical_form(self)

    def same_as(self, other: "PolygonComplex") -> bool:
        """Equality up to polygon order and cyclic rotation of side lists."""
        return canonical_form(self) == canonical_form(other)


@dataclass
class ValidationReport:
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def _min_rotation(poly: tuple[Side, ...]) -> tuple[Side, ...]:
    if not poly:
        return poly
    return min(poly[k:] + poly[:k] for k in range(len(poly)))


def canonical_form(cx: PolygonComplex) -> PolygonComplex:
    polys = sorted(_min_rotation(p) for p in cx.polygons)
    return PolygonComplex(cx.m, polys)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def classes(self) -> int:
        return len({self.find(x) for x in self.parent})


def _corner_links(cx: PolygonComplex):
    """Corner (p, t) sits between side t and side t+1 of polygon p.

    Returns the union-find over corners after gluing and the corner
    list.  Side t runs
    from corner t-1 to corner t; reversed gluing of sides (p, t) and
    (q, u) identifies corner (p, t-1) with (q, u) and (p, t) with (q, u-1).
    """
    corners = [(p, t) for p, poly in enumerate(cx.polygons) for t in range(len(poly))]
    uf = _UnionFind(corners)
    for a in sorted(cx.arc_ids):
        occ = cx.occurrences(a)
        if len(occ) != 2:
            continue
        (p, t), (q, u) = occ
        kp, kq = len(cx.polygons[p]), len(cx.polygons[q])
        pairs = [((p, (t - 1) % kp), (q, u)), ((p, t), (q, (u - 1) % kq))]
        for x, y in pairs:
            uf.union(x, y)
    return uf, corners


def validate(cx: PolygonComplex) -> ValidationReport:
    """Check every structural invariant; never raises.

    Complexes are immutable, so the result is memoized on the instance.
    """
    cached = cx.__dict__.get("_report")
    if cached is None:
        cached = cx.__dict__["_report"] = tuple(_validate(cx).problems)
    return ValidationReport(list(cached))


def _validate(cx: PolygonComplex) -> ValidationReport:
    rep = ValidationReport()
    m = cx.m
    if not isinstance(m, int) or m < 1:
        rep.problems.append(f"m must be an integer >= 1, got {m!r}")
        return rep
    if not cx.polygons:
        rep.problems.append("complex has no polygons")
        return rep
    for pi, poly in enumerate(cx.polygons):
        if len(poly) != m + 2:
            rep.problems.append(f"polygon {pi} has {len(poly)} sides, expected {m + 2}")
        for s in poly:
            if s.kind not in ("arc", "bnd"):
                rep.problems.append(f"polygon {pi} has side of unknown kind {s.kind!r}")
            if not isinstance(s.id, int) or s.id < 0:
                rep.problems.append(f"polygon {pi} has bad side id {s.id!r}")
    if rep.problems:
        return rep

    counts = Counter(s for poly in cx.polygons for s in poly)
    for s, k in sorted(counts.items()):
        if s.is_arc and k != 2:
            rep.problems.append(f"arc multiplicity: arc {s.id} occurs {k} times, expected 2")
        if not s.is_arc and k != 1:
            rep.problems.append(f"boundary multiplicity: edge {s.id} occurs {k} times, expected 1")
    if rep.problems:
        return rep

    # connectivity of the polygon adjacency graph
    uf_poly = _UnionFind(range(len(cx.polygons)))
    for a in cx.arc_ids:
        (p, _), (q, _) = cx.occurrences(a)
        uf_poly.union(p, q)
    if uf_poly.classes() != 1:
        rep.problems.append(f"complex is disconnected ({uf_poly.classes()} components)")

    # every glued vertex must reach the boundary (no interior vertices,
    # i.e. no punctures); a vertex link then is an interval
    uf, corners = _corner_links(cx)
    touches = set()
    for p, poly in enumerate(cx.polygons):
        k = len(poly)
        for t, s in enumerate(poly):
            if not s.is_arc:
                touches.add(uf.find((p, (t - 1) % k)))
                touches.add(uf.find((p, t)))
    interior = {uf.find(c) for c in corners} - touches
    if interior:
        rep.problems.append(
            f"{len(interior)} glued vertex class(es) avoid the boundary (puncture or closed link)"
        )
    return rep


def _require_valid(cx: PolygonComplex) -> None:
    rep = validate(cx)
    if not rep.ok:
        raise InvalidComplex("; ".join(rep.problems))


def vertex_classes(cx: PolygonComplex) -> dict[tuple[int, int], tuple[int, int]]:
    """Map each corner to a representative corner of its marked point."""
    uf, corners = _corner_links(cx)
    return {c: uf.find(c) for c in corners}


def euler_data(cx: PolygonComplex) -> tuple[int, int, int]:
    """(V, E, F) of the glued CW-complex."""
    vc = vertex_classes(cx)
    V = len(set(vc.values()))
    E = len(cx.arc_ids) + len(cx.boundary_ids)
    F = len(cx.polygons)
    return V, E, F


def boundary_cycles(cx: PolygonComplex) -> list[list[int]]:
    """Boundary edges grouped into cycles, each listed in traversal order."""
    vc = vertex_classes(cx)
    start, end = {}, {}
    for p, poly in enumerate(cx.polygons):
        k = len(poly)
        for t, s in enumerate(poly):
            if not s.is_arc:
                start[s.id] = vc[(p, (t - 1) % k)]
                end[s.id] = vc[(p, t)]
    by_start = {}
    for e, v in start.items():
        by_start.setdefault(v, []).append(e)
    seen = set()
    cycles = []
    for e0 in sorted(start):
        if e0 in seen:
            continue
        cyc = []
        e = e0
        while e not in seen:
            seen.add(e)
            cyc.append(e)
            nxt = by_start.get(end[e], [])
            if len(nxt) != 1:
                break
            e = nxt[0]
        cycles.append(cyc)
    return cycles


def signature(cx: PolygonComplex) -> SurfaceSignature:
    """Topological signature (g, b, c, 0) computed from the glued complex."""
    _require_valid(cx)
    V, E, F = euler_data(cx)
    b = len(boundary_cycles(cx))
    chi = V - E + F
    two_g = 2 - b - chi
    if two_g < 0 or two_g % 2:
        raise InvalidComplex(f"Euler characteristic {chi} inconsistent with b={b}")
    return SurfaceSignature(g=two_g // 2, b=b, c=V, p=0)


def arcs_of(cx: PolygonComplex) -> list[int]:
    return sorted(cx.arc_ids)


def polygons_adjacent_to(cx: PolygonComplex, arc_id: int) -> list[tuple[int, int]]:
    """The two (polygon index, side position) occurrences of an arc."""
    occ = cx.occurrences(arc_id)
    if not occ:
        raise UnknownArc(arc_id)
    return occ
