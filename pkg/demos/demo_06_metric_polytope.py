"""
The metric polytope near (2/3, ..., 2/3)
========================================

The dual cone of tau_n is localised at the vertex (2/3, ..., 2/3) of the
metric polytope, where every perimeter inequality is tight.
"""

import random
from fractions import Fraction

from tricone.graphcore import WeightedGraph, num_edges
from tricone.membership import metric_polytope_contains

n = 6
v = WeightedGraph(n, tuple([Fraction(2, 3)] * num_edges(n)))
r = metric_polytope_contains(v)
print("in met_6:", r.in_metric_polytope, " tight perimeters:", len(r.tight_perimeters))

#%%
# Small random moves only ever break perimeter inequalities.
rng = random.Random(1)
for _ in range(5):
    d = [Fraction(2, 3) + Fraction(rng.choice((-1, 0, 1)), 50) for _ in range(num_edges(n))]
    r = metric_polytope_contains(WeightedGraph(n, tuple(d)))
    print(len(r.perimeter_violations), "perimeter,", len(r.triangle_violations), "triangle")
