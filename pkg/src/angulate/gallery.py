"""Two small worked examples used throughout the tests and demos.

* ``decagon()``: a 4-angulation (m=2) of the disc with 10 marked points,
  four squares and arcs 1, 2, 3.  Its quiver is
  ``1->2:0, 2->1:2, 2->3:0, 3->2:2, 3->1:1, 1->3:1`` with the single
  potential term through ``3->1:1, 1->2:0, 2->3:0``.
* ``torus()``: a 4-angulation of the torus with one boundary component
  and two marked points: two squares, each bounded by arcs 1, 3, 2 and
  one boundary edge.
* ``square()``: the disc with 4 marked points, a single square, no arcs.
"""

from __future__ import annotations

from .builder import disc_from_chords
from .surface import PolygonComplex, arc, bnd

__all__ = ["decagon", "torus", "square", "self_glued_annulus"]


def decagon() -> PolygonComplex:
    return disc_from_chords(2, 10, [(3, 6), (0, 3), (0, 7)], [1, 2, 3])


def torus() -> PolygonComplex:
    return PolygonComplex(
        2,
        [
            [arc(1), bnd(0), arc(3), arc(2)],
            [arc(1), bnd(1), arc(3), arc(2)],
        ],
    )


def square(m: int = 2) -> PolygonComplex:
    return PolygonComplex(m, [[bnd(i) for i in range(m + 2)]])


def self_glued_annulus() -> PolygonComplex:
    """One square whose arc 0 is glued to itself: an annulus, c=2."""
    return PolygonComplex(2, [[arc(0), bnd(0), arc(0), bnd(1)]])
