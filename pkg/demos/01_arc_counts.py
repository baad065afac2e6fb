"""
Counting arcs
=============

Every (m+2)-angulation of a marked surface has the same number of arcs.
The count depends only on the signature (g, b, c, p) and on m.
"""

from angulate import SurfaceSignature, angulation_exists, arc_count, arc_count_formula

# The torus with one boundary component and two marked points has a
# 4-angulation (m = 2) with three arcs.
torus = SurfaceSignature(g=1, b=1, c=2, p=0)
print("torus, m=2:", arc_count(torus, 2))

# With a puncture and a single marked point there are five arcs.
print("punctured torus, m=2:", arc_count(SurfaceSignature(1, 1, 1, 1), 2))

# Existence is a congruence: c + 2b + 4g - 4 + p must be divisible by m.
for c in range(3, 9):
    sig = SurfaceSignature(0, 1, c, 0)
    print(f"disc with {c} marked points has a 4-angulation: {angulation_exists(sig, 2)}")

# The formula is evaluated exactly, so a failed congruence shows up as a
# fraction rather than as a rounding artefact.
print("formula for the pentagon, m=2:", arc_count_formula(0, 1, 5, 0, 2))

# Cutting along an arc changes the signature and drops the count by one
# (or by two for an arc around a puncture).
n = arc_count_formula(1, 1, 2, 0, 2)
print("handle cut:", arc_count_formula(0, 2, 4, 0, 2), "=", n - 1)
