"""
Graded quivers with superpotential
==================================

Arcs become vertices. Two arcs on the same polygon give a pair of
arrows, graded by the number of sides between them.
"""

from angulate import check_hypotheses, oriented_angle_check, qp_of
from angulate.formats import export_dot
from angulate.gallery import decagon, torus

q, w = qp_of(decagon())
print("decagon arrows:", sorted(q.counts().items()))
print("potential:", list(w.words(q)))

# The grades can be read off by twisting: the r-fold twist of arc 1
# shares an angle with arc 2 exactly when there is an arrow 1 -> 2 of grade r.
for r in range(3):
    print(f"twist^{r}(1) meets 2: {oriented_angle_check(decagon(), 1, 2, r)}, arrows: {q.q(1, 2, r)}")

# The torus quiver has each arrow twice, once per square.
tq, tw = qp_of(torus())
print("torus arrows:", sorted(tq.counts().items()))

rep = check_hypotheses(tq, tw)
print("hypotheses hold on the torus:", rep.ok)

print(export_dot(q))
