"""Graded quiver with superpotential of an (m+2)-angulation.

Vertices are arcs.  Inside one polygon, an arc side at position ``s``
and another at position ``t`` give an arrow of grade ``(t - s - 1) mod
(m + 2)``, the number of sides strictly between them clockwise.  Every
occurrence pair is kept, so the arrows form a multiset: two arcs that
share two polygons have doubled arrows.

The symmetric partner of an arrow is tracked per instance.  For an
extracted arrow it is the reversed occurrence pair in the same polygon;
its grade is ``m - r`` because the two grades add up to the ``m + 2``
sides minus the two arc sides themselves.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .flips import twist_endpoints
from .surface import InvalidComplex, PolygonComplex, UnknownArc, arc, validate

__all__ = [
    "AsymmetricInput",
    "UnknownVertex",
    "GradedArrow",
    "GradedQuiver",
    "Superpotential",
    "HypothesisReport",
    "quiver_of",
    "potential_of",
    "qp_of",
    "oriented_angle_check",
    "check_hypotheses",
    "word_of",
    "canonical_word",
]

Key = tuple[int, int, int]


class AsymmetricInput(ValueError):
    """An arrow has no symmetric partner (j, i, m - r)."""


class UnknownVertex(KeyError):
    pass


@dataclass(frozen=True)
class GradedArrow:
    src: int
    dst: int
    grade: int
    # (polygon, src position, dst position) for extracted arrows
    origin: Optional[tuple] = None

    def __post_init__(self):
        if self.src == self.dst:
            raise ValueError(f"loop at vertex {self.src} is not allowed")

    @property
    def key(self) -> Key:
        return (self.src, self.dst, self.grade)

    def __repr__(self) -> str:
        return f"{self.src}->{self.dst}:{self.grade}"


def _pair_up(m: int, arrows: Sequence[GradedArrow]) -> tuple[int, ...]:
    """Greedy partner matching by key, for quivers given without origins."""
    free: dict[Key, list[int]] = {}
    for x, a in enumerate(arrows):
        free.setdefault(a.key, []).append(x)
    partner = [-1] * len(arrows)
    for x, a in enumerate(arrows):
        if partner[x] >= 0:
            continue
        want = (a.dst, a.src, m - a.grade)
        pool = [y for y in free.get(want, []) if partner[y] < 0 and y != x]
        if not pool:
            raise AsymmetricInput(f"arrow {a!r} has no partner {want[0]}->{want[1]}:{want[2]}")
        y = pool[0]
        partner[x], partner[y] = y, x
    return tuple(partner)


@dataclass(frozen=True, eq=False)
class GradedQuiver:
    """Multiset of graded arrows with an explicit symmetric pairing.

    Equality compares vertex sets and arrow multisets by
    ``(src, dst, grade)``; origins and the pairing are bookkeeping.
    ``looped`` lists arcs glued to themselves inside one polygon, whose
    self-arrows were discarded.
    """

    m: int
    vertices: frozenset
    arrows: tuple[GradedArrow, ...] = ()
    partner: tuple[int, ...] = ()
    looped: frozenset = field(default_factory=frozenset)

    @classmethod
    def build(
        cls,
        m: int,
        vertices: Iterable[int],
        arrows: Iterable[GradedArrow],
        partner: Optional[Sequence[int]] = None,
        looped: Iterable[int] = (),
    ) -> "GradedQuiver":
        arrows = tuple(arrows)
        if partner is None:
            partner = _pair_up(m, arrows)
        return cls(m, frozenset(vertices), arrows, tuple(partner), frozenset(looped))

    def counts(self) -> Counter:
        return Counter(a.key for a in self.arrows)

    def q(self, i: int, j: int, r: int) -> int:
        """Number of arrows i -> j of grade r."""
        return self.counts()[(i, j, r)]

    def symmetry_problems(self) -> list[str]:
        out = []
        if len(self.partner) != len(self.arrows):
            return ["partner table has wrong length"]
        for x, a in enumerate(self.arrows):
            y = self.partner[x]
            if not 0 <= y < len(self.arrows) or self.partner[y] != x or y == x:
                out.append(f"arrow {a!r} is not paired")
                continue
            b = self.arrows[y]
            if b.key != (a.dst, a.src, self.m - a.grade):
                out.append(f"arrow {a!r} paired with {b!r}")
        return out

    def is_symmetric(self) -> bool:
        return not self.symmetry_problems()

    def __eq__(self, other):
        if not isinstance(other, GradedQuiver):
            return NotImplemented
        return (
            self.m == other.m
            and self.vertices == other.vertices
            and self.counts() == other.counts()
        )

    def __hash__(self):
        return hash((self.m, self.vertices, frozenset(self.counts().items())))

    def __repr__(self) -> str:
        arrows = ", ".join(
            f"{i}->{j}:{r}" + (f"x{k}" if k > 1 else "") for (i, j, r), k in sorted(self.counts().items())
        )
        return f"GradedQuiver(m={self.m}, vertices={sorted(self.vertices)}, arrows=[{arrows}])"


def canonical_word(word: Sequence[Key]) -> tuple[Key, ...]:
    word = tuple(word)
    return min(word[k:] + word[:k] for k in range(len(word))) if word else word


def _canonical_indices(term: Sequence[int]) -> tuple[int, ...]:
    term = tuple(term)
    return min(term[k:] + term[:k] for k in range(len(term)))


@dataclass(frozen=True)
class Superpotential:
    """Sum of cyclic words, each a tuple of arrow indices into a quiver.

    Terms carry no coefficients here; the Ginzburg construction assigns
    each term a sign (see :func:`angulate.ginzburg.double`).  Rotations
    of the same instance word are stored once.
    """

    terms: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[Sequence[int]]) -> "Superpotential":
        seen = set()
        out = []
        for t in terms:
            c = _canonical_indices(t)
            if c not in seen:
                seen.add(c)
                out.append(c)
        return cls(tuple(out))

    def words(self, q: GradedQuiver) -> Counter:
        """Multiset of terms as rotation-canonical words of arrow keys."""
        return Counter(word_of(q, t) for t in self.terms)

    def __len__(self) -> int:
        return len(self.terms)


def word_of(q: GradedQuiver, term: Sequence[int]) -> tuple[Key, ...]:
    return canonical_word([q.arrows[x].key for x in term])


def _require_valid(cx: PolygonComplex) -> None:
    rep = validate(cx)
    if not rep.ok:
        raise InvalidComplex("; ".join(rep.problems))


def _looped_arcs(cx: PolygonComplex) -> frozenset:
    return frozenset(a for a in cx.arc_ids if len({p for p, _ in cx.occurrences(a)}) == 1)


def _extract(cx: PolygonComplex):
    # memoized: complexes and quivers are immutable
    cached = cx.__dict__.get("_extract")
    if cached is None:
        cached = cx.__dict__["_extract"] = _extract_uncached(cx)
    return cached


def _extract_uncached(cx: PolygonComplex):
    arrows: list[GradedArrow] = []
    index: dict[tuple[int, int, int], int] = {}
    for pi, poly in enumerate(cx.polygons):
        k = len(poly)
        for s, a in enumerate(poly):
            for t, b in enumerate(poly):
                if s != t and a.is_arc and b.is_arc and a.id != b.id:
                    index[(pi, s, t)] = len(arrows)
                    arrows.append(GradedArrow(a.id, b.id, (t - s - 1) % k, (pi, s, t)))
    partner = [index[(pi, t, s)] for (pi, s, t) in (a.origin for a in arrows)]
    q = GradedQuiver(cx.m, cx.arc_ids, tuple(arrows), tuple(partner), _looped_arcs(cx))
    return q, index


def quiver_of(cx: PolygonComplex) -> GradedQuiver:
    """Graded quiver of the angulation (multiset of arrows)."""
    _require_valid(cx)
    return _extract(cx)[0]


def _cross_cycles(q: GradedQuiver) -> list[tuple[int, int, int]]:
    out = []
    by_src: dict[int, list[int]] = {}
    for x, a in enumerate(q.arrows):
        by_src.setdefault(a.src, []).append(x)
    for x, a in enumerate(q.arrows):
        for y in by_src.get(a.dst, []):
            b = q.arrows[y]
            for z in by_src.get(b.dst, []):
                c = q.arrows[z]
                if c.dst == a.src and a.grade + b.grade + c.grade == q.m - 1:
                    out.append((x, y, z))
    return out


def potential_of(
    cx: PolygonComplex, q: Optional[GradedQuiver] = None, *, cross_polygon: bool = False
) -> Superpotential:
    """Superpotential: the 3-cycles of degree m-1.

    By default only cycles inside one polygon are taken, one per
    clockwise triple of distinct arcs (every such triple has degree
    m-1).  ``cross_polygon=True`` takes every 3-cycle of degree m-1 in
    the quiver, including accidental ones through several polygons.
    ``q`` must be the quiver returned by :func:`quiver_of` for ``cx``.
    """
    _require_valid(cx)
    q2, index = _extract(cx)
    if q is None:
        q = q2
    elif [a.key for a in q.arrows] != [a.key for a in q2.arrows]:
        raise ValueError("quiver does not belong to this complex")
    if cross_polygon:
        return Superpotential.from_terms(_cross_cycles(q))
    terms = []
    for pi, poly in enumerate(cx.polygons):
        pos = [t for t, s in enumerate(poly) if s.is_arc]
        for x, y, z in itertools.combinations(pos, 3):
            if len({poly[x].id, poly[y].id, poly[z].id}) == 3:
                terms.append((index[(pi, x, y)], index[(pi, y, z)], index[(pi, z, x)]))
    return Superpotential.from_terms(terms)


def qp_of(cx: PolygonComplex, *, cross_polygon: bool = False) -> tuple[GradedQuiver, Superpotential]:
    q = quiver_of(cx)
    return q, potential_of(cx, q, cross_polygon=cross_polygon)


def oriented_angle_check(cx: PolygonComplex, i: int, j: int, r: int) -> bool:
    """Does the r-fold twist of arc i share an oriented angle with j?

    The two endpoints of ``i`` are advanced ``r`` corners clockwise and
    followed through the surgery; the answer is whether ``j`` is the side
    immediately clockwise of one of them.
    """
    if i == j:
        raise ValueError("loops are excluded: i and j must differ")
    for a in (i, j):
        if a not in cx.arc_ids:
            raise UnknownArc(a)
    if not 0 <= r <= cx.m:
        raise ValueError(f"r must lie in 0..{cx.m}")
    _require_valid(cx)
    moved, ends = twist_endpoints(cx, i, r)
    for p, t in ends:
        poly = moved.polygons[p]
        if poly[(t + 1) % len(poly)] == arc(j):
            return True
    return False


@dataclass
class HypothesisReport:
    grades_ok: bool
    symmetric: bool
    degrees_ok: bool
    d_squared_ok: bool
    cross_polygon_terms: int = 0
    looped_vertices: list[int] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.grades_ok and self.symmetric and self.degrees_ok and self.d_squared_ok

    def __bool__(self) -> bool:
        return self.ok


def check_hypotheses(q: GradedQuiver, w: Superpotential) -> HypothesisReport:
    """Grades in 0..m, r <-> m-r symmetry, terms of degree m-1, d^2 = 0.

    Terms whose arrows come from different polygons are counted in
    ``cross_polygon_terms``.  Arcs glued to themselves are listed in
    ``looped_vertices``: their self-arrows are dropped, and d^2 can fail
    on such complexes.
    """
    from .ginzburg import double, verify_d_squared

    problems: list[str] = []
    bad = [a for a in q.arrows if not 0 <= a.grade <= q.m]
    grades_ok = not bad
    problems += [f"grade out of range: {a!r}" for a in bad]
    sym = q.symmetry_problems()
    problems += sym
    degrees_ok = True
    cross = 0
    for t in w.terms:
        word = [q.arrows[x] for x in t]
        if sum(a.grade for a in word) != q.m - 1:
            degrees_ok = False
            problems.append(f"term {word} has degree {sum(a.grade for a in word)}, expected {q.m - 1}")
        if any(word[k].dst != word[(k + 1) % len(word)].src for k in range(len(word))):
            degrees_ok = False
            problems.append(f"term {word} is not a cycle")
        polys = {a.origin[0] if a.origin else None for a in word}
        if len(polys) != 1 or None in polys:
            cross += 1
    d_ok = False
    if grades_ok and not sym and degrees_ok:
        rep = verify_d_squared(double(q, w))
        d_ok = rep.ok
        if not d_ok:
            problems.append(f"d^2 != 0 on {len(rep.failures)} generator(s)")
    return HypothesisReport(grades_ok, not sym, degrees_ok, d_ok, cross, sorted(q.looped), problems)
