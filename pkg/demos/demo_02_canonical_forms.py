"""
Canonical forms and stabilizers
===============================

The canonical form of a weighted graph is its lexicographically largest
relabeling.  Two vectors lie in the same S_n orbit iff their canonical
forms agree.
"""

import random

from tricone.families import star_facet
from tricone.symmetry import (VertexPermutation, canonical_form, canonical_labeling,
                              orbit_size, permute, stabilizer_order)
from tricone.graphcore import WeightedGraph
from tricone.tables import TAU9_ASYMMETRIC

rng = random.Random(0)
star = star_facet(6, center=6, neg=1).vector
print("star on 6 vertices:", star.as_ints())

#%%
# Shuffle the labels a few times; the canonical form never moves.
for _ in range(3):
    alpha = VertexPermutation.random(6, rng)
    y = permute(star, alpha)
    print(alpha.images, y.as_ints(), "->", canonical_form(y).as_ints())

#%%
# The labeling that produces the canonical form, and the symmetry counts.
print("labeling:", canonical_labeling(star).images)
print("stabilizer", stabilizer_order(star), "orbit", orbit_size(star))

#%%
# A facet of tau_9 with no symmetry at all: its orbit has 9! members.
y9 = WeightedGraph.from_vector(TAU9_ASYMMETRIC)
print("tau_9 example: stabilizer", stabilizer_order(y9), "orbit", orbit_size(y9))
