"""
Flips and flip walks
====================

Flipping an arc slides both of its endpoints one corner clockwise inside
the (2m+2)-gon made by the two polygons that share it.
"""

from angulate import flip, flip_inverse, random_flip_walk, signature
from angulate.gallery import decagon, torus

dec = decagon()
print("decagon:", dec)

new, record = flip(dec, 2)
print("merged boundary around arc 2:", record.merged_boundary)
print("after the flip:", new)

# The inverse moves the arc counterclockwise again.
print("inverse restores it:", flip_inverse(new, 2).same_as(dec))

# A long seeded walk on the torus never leaves its signature.
walked = random_flip_walk(torus(), 100, seed=7)
print("torus after 100 flips:", walked.canonical())
print("signature:", signature(walked))
