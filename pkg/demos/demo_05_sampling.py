"""
Random facets beyond n = 8
==========================

Minimising a random linear objective over a cross-section of the dual
cone lands on a facet normal.  Full enumeration is out of reach at n = 9,
but sampling and exact verification are cheap.
"""

from collections import Counter

from tricone.conefacets import is_facet_normal, sample_facet
from tricone.graphcore import WeightedGraph
from tricone.symmetry import canonical_form, stabilizer_order

seen = Counter()
for seed in range(30):
    f = sample_facet(9, seed)
    assert is_facet_normal(f.vector).is_facet
    seen[canonical_form(f.vector).as_ints()] += 1

#%%
# Cut-like and trivial facets turn up most often; the rest are spread
# thinly over many classes.
for rep, k in seen.most_common():
    print(f"{k:3d}  stab {stabilizer_order(WeightedGraph(9, rep)):6d}  {rep}")
