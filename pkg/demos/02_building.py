"""
Building angulations
====================

Discs are cut along chords. Other unpunctured surfaces are glued
together from a disc, one pair of boundary edges at a time.
"""

from angulate import SurfaceSignature, build, enumerate_disc, fan_disc, signature, validate
from angulate.builder import build_plan

# A fan: all arcs of the decagon start at marked point 0.
fan = fan_disc(2, 10)
print("fan decagon:", fan)
print("signature:", signature(fan))

# Labelled enumeration reproduces the Fuss-Catalan numbers.
for m, c in [(1, 6), (2, 6), (2, 8), (3, 11)]:
    print(f"m={m}, c={c}: {len(enumerate_disc(m, c))} angulations")

# A genus-one surface with two boundary components.
sig = SurfaceSignature(1, 2, 4, 0)
plan = build_plan(sig, 2)
print("plan from a", plan.base_c, "gon:", plan.steps)
cx = build(sig, 2)
print(cx)
print("valid:", validate(cx).ok, "signature:", signature(cx), "arcs:", cx.n_arcs)
