"""
Fractional triangle decompositions with certificates
====================================================

Deciding g in tau_n is a linear feasibility problem.  The exact simplex
returns either triangle weights or a separating vector, and both can be
checked without trusting the solver.
"""

from tricone.families import c4_opposite_cut, lex_product_c4
from tricone.graphcore import WeightedGraph, inner_product
from tricone.membership import decide_membership, facetize, verify_certificate

#%%
# K_7 decomposes.  The LP stops at a vertex, here a Steiner triple system.
k7 = WeightedGraph.ones(7)
r = decide_membership(k7)
print(r.verdict, {K: str(x) for K, x in r.coefficients.items()})
print("certificate checks:", verify_certificate(k7, r))

#%%
# C_4 . K_3 on 12 vertices has even degrees and 48 edges, yet is not in
# tau_12.  The Farkas vector proves it.
g = lex_product_c4(0)
r = decide_membership(g)
print(r.verdict, "<s, g> =", inner_product(r.separator, g),
      "verified:", verify_certificate(g, r))

#%%
# The (6,6)-cut that puts opposite blocks together is an explicit facet
# witness, and facetize finds a facet normal that separates as well.
print("opposite-block cut:", inner_product(c4_opposite_cut(0), g))
y = facetize(g)
print("facet separator value:", inner_product(y, g))
