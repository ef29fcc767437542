"""
Facet families and vertex splitting
===================================

Stars, cuts and binary stars are infinite families of facets.  Vertex
splitting lifts a facet of tau_n to one of tau_{n+1}.
"""

from tricone.conefacets import is_facet_normal
from tricone.errors import HypothesisError
from tricone.families import (binary_star_facet, binary_star_witness_graph, cut_facet,
                              mod3_category, sign_extremes_check, star_facet, vertex_split)
from tricone.graphcore import inner_product
from tricone.symmetry import canonical_form

for name, f in [("star_7", star_facet(7)), ("cut (3,4)", cut_facet((7, {1, 2, 3}))),
                ("binary star_8", binary_star_facet(8, {3, 4, 5}, {6, 7, 8}))]:
    ext = sign_extremes_check(f)
    print(f"{name:14s} category {mod3_category(f)}  a={ext.a} b={ext.b}  ratio {ext.ratio}")

#%%
# The binary star separates the graph built around it.
A, B = {3, 4, 5}, {6, 7, 8}
G = binary_star_witness_graph(8, A, B)
print("<binary star, 1_G> =", inner_product(binary_star_facet(8, A, B).vector, G))

#%%
# Splitting vertex 5 of a (2,3)-cut with 5 on the small side gives a (3,3)-cut.
lifted = vertex_split(cut_facet((5, {1, 5})))
print(lifted.as_ints(), "->", canonical_form(lifted.vector).as_ints())

#%%
# The hypothesis needs a positive triangle away from the split vertex.
try:
    vertex_split(star_facet(6, center=6))
except HypothesisError as exc:
    print("refused:", exc)
z = vertex_split(star_facet(6, center=1, neg=2))
print("star centred at 1 lifts:", is_facet_normal(z.vector).is_facet)
