from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tricone.errors import InvalidInputError
from tricone.families import cut_vector, star_facet
from tricone.graphcore import (Edge, WeightedGraph, build_incidence_matrix, edge_index,
                               graph_from_edges, incidence_vector, index_to_edge,
                               index_to_triangle, inner_product, n_from_length,
                               triangle_index, triangle_list, triangle_sums)


@pytest.mark.parametrize("e,i", [((1, 2), 0), ((1, 5), 6), ((5, 1), 6), ((4, 5), 9)])
def test_edge_index(e, i):
    assert edge_index(e, 5) == i


def test_star_weight_lands_on_edge_1_5():
    y = WeightedGraph.from_vector([1, 1, 0, 1, 0, 0, -1, 0, 0, 0])
    assert y.weight(1, 5) == -1
    assert index_to_edge(6, 5) == Edge(1, 5)


@pytest.mark.parametrize("i,e", [(0, (1, 2)), (6, (1, 5)), (9, (4, 5))])
def test_index_to_edge(i, e):
    assert index_to_edge(i, 5) == e


@pytest.mark.parametrize("bad", [(1, 1), (0, 2), (2, 6), (1, 2, 3)])
def test_edge_index_rejects(bad):
    with pytest.raises(InvalidInputError):
        edge_index(bad, 5)


@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, comb(n, 2) - 1))))
def test_edge_roundtrip(arg):
    n, i = arg
    assert edge_index(index_to_edge(i, n), n) == i


@given(st.integers(3, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, comb(n, 3) - 1))))
def test_triangle_roundtrip(arg):
    n, i = arg
    assert triangle_index(index_to_triangle(i, n), n) == i


def test_colex_order_of_triangles():
    assert triangle_list(5)[:4] == ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))


def test_incidence_vectors():
    v = incidence_vector((1, 2, 3), 5)
    assert [i for i, w in enumerate(v.weights) if w] == [0, 1, 2]
    v = incidence_vector((3, 4, 5), 5)
    idx = {edge_index(e, 5) for e in ((3, 4), (3, 5), (4, 5))}
    assert {i for i, w in enumerate(v.weights) if w} == idx
    total = WeightedGraph.zeros(5)
    for K in triangle_list(5):
        total = total + incidence_vector(K, 5)
    assert total.weights == (3,) * 10


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_incidence_matrix_shape_and_sums(n):
    W = build_incidence_matrix(n)
    assert W.shape == (comb(n, 2), comb(n, 3))
    assert (W.sum(axis=0) == 3).all()
    assert (W.sum(axis=1) == n - 2).all()
    assert not W.flags.writeable


def test_incidence_matrix_n5_is_square():
    assert build_incidence_matrix(5).shape == (10, 10)


def test_inner_products():
    s6 = star_facet(6, 6, 1).vector
    assert inner_product(s6, incidence_vector((1, 2, 6), 6)) == 0
    assert inner_product(s6, incidence_vector((2, 3, 6), 6)) == 2
    cut = cut_vector(6, {1, 2, 3})
    assert inner_product(cut, incidence_vector((1, 2, 3), 6)) == 6


def test_inner_product_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        inner_product(WeightedGraph.ones(5), WeightedGraph.ones(6))


def test_graph_from_edges():
    g = graph_from_edges(5, [((1, 2), 1)])
    assert g.weights[0] == 1 and sum(g.weights) == 1
    k5 = graph_from_edges(5, [((u, v), 1) for u in range(1, 6) for v in range(u + 1, 6)])
    assert k5 == WeightedGraph.ones(5)
    with pytest.raises(InvalidInputError):
        graph_from_edges(5, [((1, 2), 1), ((1, 2), 2)])


def test_weighted_graph_rejects_floats_and_bad_length():
    with pytest.raises(InvalidInputError):
        WeightedGraph.from_vector([0.5] * 10)
    with pytest.raises(InvalidInputError):
        n_from_length(7)


def test_weighted_graph_arithmetic():
    a = WeightedGraph.from_vector([1, 2, 3])
    b = WeightedGraph.from_vector([Fraction(1, 2), 0, -1])
    assert (a + b).weights == (Fraction(3, 2), 2, 2)
    assert (a - a).is_zero()
    assert (2 * b).weights == (1, 0, -2)
    assert a.is_integral() and not b.is_integral()


def test_triangle_sums_match_matrix():
    rng = np.random.default_rng(1)
    w = rng.integers(-3, 4, size=15)
    y = WeightedGraph.from_vector([int(x) for x in w])
    assert [int(v) for v in triangle_sums(y)] == list(w @ build_incidence_matrix(6))
