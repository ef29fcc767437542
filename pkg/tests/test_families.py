from fractions import Fraction
from itertools import combinations

import pytest

from tricone.conefacets import facet_normal, is_facet_normal
from tricone.errors import HypothesisError, IntegrityError, InvalidInputError
from tricone.families import (CutPartition, arithmetic_conditions, binary_star_facet,
                              binary_star_witness_graph, c4_opposite_cut, cut_facet,
                              lex_product_c4, mod3_category, nonpositive_support_check,
                              sign_extremes_check, star_facet, trivial_facet, vertex_split,
                              w5_inverse, zero_sum_edge_cover_check)
from tricone.graphcore import WeightedGraph, edge_index, inner_product
from tricone.symmetry import canonical_form, orbit_size
from tricone.tables import TAU6, TAU7, TAU8


def test_trivial_facets():
    t = trivial_facet(6)
    assert t.as_ints() == (1,) + (0,) * 14
    # tau_5 has only the (2,3)-cuts; the unit vector on {4,5} has 7 zero triangles
    rep = is_facet_normal(WeightedGraph.from_vector([0] * 9 + [1]))
    assert not rep.is_facet and rep.zero_count == 7
    with pytest.raises(InvalidInputError):
        trivial_facet(5, (4, 5))
    assert orbit_size(t.vector) == 15 and orbit_size(trivial_facet(7).vector) == 21


def test_star_facets():
    assert canonical_form(star_facet(6, 6, 1).vector).as_ints() == TAU6[1][0]
    assert canonical_form(star_facet(7, 7, 1).vector).as_ints() == TAU7[2][0]
    with pytest.raises(InvalidInputError):
        star_facet(5, 5, 1)


def test_cut_facets(cones):
    assert cut_facet((5, {1, 2})).as_ints() in set(cones(5).vectors())
    c = cut_facet(CutPartition(6, frozenset({1, 2, 3})))
    assert canonical_form(c.vector).as_ints() == TAU6[2][0] and orbit_size(c.vector) == 10
    with pytest.raises(InvalidInputError):
        CutPartition(6, frozenset({1}))


def test_binary_stars():
    y = binary_star_facet(8, {3, 4, 5}, {6, 7, 8})
    assert canonical_form(y.vector).as_ints() in {r for r, _, _ in TAU8}
    y9 = binary_star_facet(9, {3, 4, 5}, {6, 7, 8, 9})
    assert is_facet_normal(y9.vector).is_facet
    with pytest.raises(InvalidInputError):
        binary_star_facet(8, {3, 4}, {5, 6, 7, 8})


@pytest.mark.parametrize("n,A", [(8, {3, 4, 5}), (9, {3, 4, 5}), (10, {3, 4, 5, 6})])
def test_binary_star_witness(n, A):
    B = set(range(3, n + 1)) - A
    y = binary_star_facet(n, A, B).vector
    assert inner_product(y, binary_star_witness_graph(n, A, B)) == -1


def test_vertex_split_cut_to_cut():
    y = cut_facet((5, {1, 5}))
    z = vertex_split(y)
    assert z.vector.weight(5, 6) == 2
    assert canonical_form(z.vector).as_ints() == TAU6[2][0]


def test_vertex_split_star():
    # centred at 6, every triangle inside [5] is zero-sum
    with pytest.raises(HypothesisError):
        vertex_split(star_facet(6, 6, 1))
    z = vertex_split(star_facet(6, 1, 2))
    assert canonical_form(z.vector).as_ints() in {r for r, _, _ in TAU7}
    assert is_facet_normal(z.vector).is_facet


@pytest.mark.parametrize("n,A", [(5, {1, 5}), (6, {1, 2, 6}), (7, {1, 2, 3, 7}), (7, {1, 7})])
def test_vertex_split_of_cut_extends_the_side(n, A):
    assert vertex_split(cut_facet((n, A))) == cut_facet((n + 1, A | {n + 1}))


def test_vertex_split_hypothesis_failure():
    y = cut_facet((5, {1, 2}))   # 5 in B = {3,4,5}; every triangle in [4] has sum 0
    with pytest.raises(HypothesisError):
        vertex_split(y)


def test_lex_product_c4():
    g = lex_product_c4(0)
    assert g.n == 12 and sum(g.weights) == 48
    deg = [sum(g.weight(u, v) for v in range(1, 13) if v != u) for u in range(1, 13)]
    assert set(deg) == {8}
    assert inner_product(c4_opposite_cut(0), g) == -12
    g1 = lex_product_c4(1)
    assert g1.n == 36
    info = arithmetic_conditions(g1)
    assert info["min_degree"] == 26 and info["even_degrees"] and info["edges_divisible_by_3"]


def test_mod3_categories():
    assert mod3_category(star_facet(7)) == 0
    assert mod3_category(cut_facet((7, {1, 2, 3}))) == 2
    assert mod3_category(facet_normal(list(TAU7[6][0]))) == 1
    with pytest.raises(IntegrityError):
        mod3_category(WeightedGraph.from_vector([1, 2, 1]))
    with pytest.raises(InvalidInputError):
        mod3_category(WeightedGraph.from_vector([2, 4, 2]))


def test_sign_extremes():
    r = sign_extremes_check(cut_facet((6, {1, 2, 3})))
    assert (r.a, r.b, r.bounds_hold, r.ratio) == (2, -1, True, 2)
    r = sign_extremes_check(facet_normal(list(TAU8[-1][0])))
    assert (r.a, r.b, r.bounds_hold) == (8, -4, True)
    assert not sign_extremes_check(trivial_facet(6)).applicable


def test_nonpositive_support():
    r = nonpositive_support_check(cut_facet((6, {1, 2})))
    assert r.bipartite and r.complete_bipartite
    r = nonpositive_support_check(star_facet(6))
    assert not r.bipartite and r.implication_holds
    for table in (TAU6, TAU7, TAU8):
        for rep, _, _ in table:
            assert nonpositive_support_check(WeightedGraph.from_vector(rep)).implication_holds


def test_edge_cover():
    assert zero_sum_edge_cover_check(star_facet(6))
    assert not zero_sum_edge_cover_check(trivial_facet(6))
    for rep, _, _ in TAU8[1:]:
        assert zero_sum_edge_cover_check(WeightedGraph.from_vector(rep))


def test_w5_inverse_entries():
    U = w5_inverse()
    k123 = 0
    assert U.entries[k123][edge_index((4, 5), 5)] == Fraction(1, 3)
    assert U.entries[k123][edge_index((1, 4), 5)] == Fraction(-1, 6)


def test_ten_distinct_23_cuts():
    cuts = [cut_facet((5, set(A))) for A in combinations(range(1, 6), 2)]
    assert len({c.as_ints() for c in cuts}) == 10
