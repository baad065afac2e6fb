"""
Flips are mutations
===================

Mutating the quiver with potential of an angulation at a vertex and
cancelling the redundant arrows gives the quiver with potential of the
flipped angulation.
"""

from angulate import SurfaceSignature, build, check_flip_compatibility, compatibility_walk, mutate, qp_of, reduce
from angulate.gallery import decagon

q, w = qp_of(decagon())
mq, mw, trace = mutate(q, w, 2)
print("unreduced mutation at 2:", sorted(mq.counts().items()))
print("dropped terms:", trace.dropped_terms)

rq, rw = reduce(mq, mw, trace)
print("cancelled pairs:", trace.cancelled_pairs)
print("reduced:", sorted(rq.counts().items()), "potential terms:", len(rw.terms))

rep = check_flip_compatibility(decagon(), 2)
print(rep.summary())

# The same holds along random walks on other surfaces.
annulus = build(SurfaceSignature(0, 2, 6, 0), 3)
reports = compatibility_walk(annulus, 40, seed=1)
print(sum(r.ok for r in reports), "of", len(reports), "flips match;",
      sum(not r.in_scope for r in reports), "at looped vertices")
