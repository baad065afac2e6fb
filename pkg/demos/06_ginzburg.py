"""
Ginzburg presentations
======================

The doubled quiver carries a differential built from the potential.
Squaring it to zero is a symbolic check on the potential.
"""

from angulate import double, export_presentation, qp_of, verify_d_squared
from angulate.gallery import torus

q, w = qp_of(torus())
p = double(q, w)

for g in p.generators:
    print(f"{g.name:>5} {g.kind:8} degree {g.degree:3}  {g.src}->{g.dst}")

loop = p.generator("t1")
print("d(t1) has", len(p.differential["t1"]), "paths of degree", loop.degree + 1)

# Each potential term carries a sign; they are chosen so that d^2 = 0.
print("term signs:", p.term_signs)
rep = verify_d_squared(p)
print("degrees pair to -m:", rep.pair_degrees_ok, " homogeneous:", rep.homogeneous, " d^2 = 0:", rep.d_squared_zero)

print(export_presentation(p)[:300], "...")
