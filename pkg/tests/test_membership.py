import random
from dataclasses import replace
from fractions import Fraction

import pytest

from tricone.errors import InvalidInputError
from tricone.families import lex_product_c4
from tricone.graphcore import (WeightedGraph, graph_from_edge_set, incidence_vector,
                               inner_product, triangle_list, triangle_sums)
from tricone.membership import (MembershipResult, decide_membership, facetize,
                                metric_polytope_contains, minimize_over_cross_section,
                                verify_certificate)
from tricone.conefacets import is_facet_normal


def test_complete_graph_is_member():
    g = WeightedGraph.ones(7)
    r = decide_membership(g)
    assert r.is_member and verify_certificate(g, r)
    uniform = MembershipResult("member", {K: Fraction(1, 5) for K in triangle_list(7)})
    assert verify_certificate(g, uniform)


def test_tampered_member_certificate():
    g = WeightedGraph.ones(7)
    r = decide_membership(g)
    K = next(iter(r.coefficients))
    bad = dict(r.coefficients)
    bad[K] = -bad[K]
    assert not verify_certificate(g, replace(r, coefficients=bad))


def test_c4_k3_is_not_member():
    g = lex_product_c4(0)
    r = decide_membership(g)
    assert not r.is_member and verify_certificate(g, r)
    s = r.separator
    assert min(triangle_sums(s)) >= 0 and inner_product(s, g) < 0
    scaled = replace(r, separator=Fraction(7, 3) * s)
    assert verify_certificate(g, scaled)


def test_degree_one_vertex_forces_non_member():
    edges = {(u, v) for u in range(1, 6) for v in range(u + 1, 6)} | {(1, 6)}
    g = graph_from_edge_set(6, edges)
    r = decide_membership(g)
    assert not r.is_member and verify_certificate(g, r)


def test_sum_of_triangles_is_member():
    rng = random.Random(9)
    for _ in range(20):
        g = WeightedGraph.zeros(6)
        for _ in range(4):
            g = g + rng.randint(1, 3) * incidence_vector(rng.choice(triangle_list(6)), 6)
        r = decide_membership(g)
        assert r.is_member and verify_certificate(g, r)


def test_certificate_for_wrong_graph_fails():
    r = decide_membership(WeightedGraph.ones(6))
    assert not verify_certificate(WeightedGraph.ones(6) * 2 + incidence_vector((1, 2, 3), 6)
                                  - WeightedGraph.ones(6) * 2, r)


def test_facetize_returns_a_separating_facet():
    g = lex_product_c4(0)
    y = facetize(g)
    assert is_facet_normal(y).is_facet and inner_product(y, g) < 0
    assert facetize(WeightedGraph.ones(6)) is None


def test_cross_section_vertex_is_normalised():
    y = minimize_over_cross_section(6, list(range(-7, 8)))
    assert sum(y) == 1
    assert min(triangle_sums(WeightedGraph(6, tuple(y)))) >= 0


def test_metric_polytope():
    v = WeightedGraph(5, tuple([Fraction(2, 3)] * 10))
    r = metric_polytope_contains(v)
    assert r.in_metric_polytope and len(r.tight_perimeters) == 10
    assert metric_polytope_contains(WeightedGraph.zeros(5)).in_metric_polytope
    d = WeightedGraph(4, (3, 1, 1, 1, 1, 1))
    r = metric_polytope_contains(d)
    assert not r.in_metric_cone
    assert (1, 2, 3) in r.triangle_violations
    with pytest.raises(InvalidInputError):
        metric_polytope_contains(WeightedGraph.zeros(2))


def test_membership_needs_three_vertices():
    with pytest.raises(InvalidInputError):
        decide_membership(WeightedGraph.zeros(2))
