"""
Facets of tau_5, tau_6 and tau_7
================================

Enumerate every facet of the triangle cone for small n and group them
into isomorphism classes.
"""

# tau_n lives in R^{C(n,2)}; its facets are the extreme rays of the dual
# cone {y : y^T W >= 0}, with W the edge/triangle inclusion matrix.
import time

from tricone.conefacets import enumerate_facets, facet_degree
from tricone.graphcore import build_incidence_matrix
from tricone.symmetry import classify

W = build_incidence_matrix(6)
print("W for n=6:", W.shape)

#%%
# For n = 5 there are ten facets, and all of them are (2,3)-cuts.
cone5 = enumerate_facets(5)
for y in cone5.vectors():
    print(y)

#%%
# For n = 6 and 7 the classes come out in lexicographic order of their
# canonical representatives, together with class size, stabilizer order,
# mod-3 category and degree in the facet graph.
for n in (6, 7):
    t0 = time.perf_counter()
    cone = enumerate_facets(n)
    classes = classify(cone.facets)
    print(f"\ntau_{n}: {len(cone)} facets, {len(classes)} classes "
          f"({time.perf_counter() - t0:.2f} s)")
    for c in classes:
        deg = facet_degree(cone.facets[cone.index(c.canonical_rep)], cone)
        print(f"  {c.as_ints()}  # {c.count:4d}  stab {c.stabilizer_order:3d}"
              f"  cat {c.category}  deg {deg}")
