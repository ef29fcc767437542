"""Exact tools for the cone tau_n generated by the triangles of K_n.

Facet enumeration by double description, canonical forms under S_n,
the known facet families, and LP membership with exact certificates.
"""
from .conefacets import (ConeDescription, FacetNormal, FacetReport, are_adjacent,
                         double_description, enumerate_facets, facet_degree, facet_normal,
                         is_facet_normal, is_supporting, sample_facet, verify_facets)
from .errors import (HypothesisError, IntegrityError, InvalidInputError, SingularMatrixError,
                     VerificationError)
from .exactalg import (Polynomial, RationalMatrix, char_poly, invert, nullspace, rank,
                       solve, standard_form)
from .families import (CutPartition, binary_star_facet, cut_facet, lex_product_c4,
                       mod3_category, sign_extremes_check, star_facet, trivial_facet,
                       vertex_split, w5_inverse, zero_sum_edge_cover_check)
from .graphcore import (Edge, WeightedGraph, build_incidence_matrix, edge_index,
                        index_to_edge, index_to_triangle, triangle_index)
from .membership import (MembershipResult, decide_membership, facetize,
                         metric_polytope_contains, verify_certificate)
from .symmetry import (FacetClass, VertexPermutation, canonical_form, classify, permute,
                       stabilizer_order)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
