"""Combinatorics of (m+2)-angulations of marked surfaces.

Polygon complexes, arc counts, flips, construction and enumeration of
angulations, the graded quiver with superpotential of an angulation,
its graded mutation and reduction, and Ginzburg dg presentations.
"""

from .arc_count import (
    ArcCountResult,
    InvalidSignature,
    NegativeCount,
    NoAngulation,
    angulation_exists,
    arc_count,
    arc_count_formula,
)
from .builder import BadCount, BoundExceeded, build, disc_from_chords, enumerate_disc, fan_disc
from .flips import FlipRecord, flip, flip_inverse, random_flip_walk
from .ginzburg import double, export_presentation, import_presentation, verify_d_squared
from .mutation import (
    CompatibilityReport,
    LoopedVertex,
    MutationTrace,
    check_flip_compatibility,
    compatibility_walk,
    mutate,
    reduce,
)
from .qp import (
    AsymmetricInput,
    GradedArrow,
    GradedQuiver,
    Superpotential,
    UnknownVertex,
    check_hypotheses,
    oriented_angle_check,
    potential_of,
    qp_of,
    quiver_of,
)
from .surface import (
    InvalidComplex,
    PolygonComplex,
    Side,
    SurfaceSignature,
    UnknownArc,
    arc,
    bnd,
    canonical_form,
    signature,
    validate,
)

from . import gallery

__version__ = "0.1.0"
