from itertools import combinations

import numpy as np
import pytest

from tricone.conefacets import (ConeDescription, DDStats, are_adjacent, double_description,
                                enumerate_facets, facet_degree, facet_normal, is_facet_normal,
                                is_supporting, sample_facet, verify_facets)
from tricone.errors import InvalidInputError, VerificationError
from tricone.families import cut_facet, star_facet, trivial_facet
from tricone.graphcore import WeightedGraph, build_incidence_matrix, edge_list
from tricone.symmetry import canonical_form
from tricone.tables import TAU7, TAU9_ASYMMETRIC


def test_is_supporting():
    assert is_supporting(WeightedGraph.ones(6))
    assert is_supporting(star_facet(6).vector)
    A = {1, 2}
    y = WeightedGraph(5, tuple(1 if (u in A) == (v in A) else -1 for u, v in edge_list(5)))
    assert not is_supporting(y)


def test_star_zero_set():
    rep = is_facet_normal(star_facet(6, 6, 1).vector)
    assert rep.is_facet
    zero = set(rep.zero_triangles)
    assert all(K in zero for K in combinations(range(1, 6), 3))
    assert all((1, k, 6) in zero for k in range(2, 6))


def test_non_facets():
    rep = is_facet_normal(WeightedGraph.ones(6))
    assert not rep.is_facet and rep.zero_count == 0 and rep.zero_rank == 0
    with pytest.raises(InvalidInputError):
        is_facet_normal(WeightedGraph.zeros(6))
    with pytest.raises(VerificationError):
        facet_normal([1] * 15)


def test_published_tau9_vector_is_facet():
    rep = is_facet_normal(WeightedGraph.from_vector(TAU9_ASYMMETRIC))
    assert rep.is_facet and rep.zero_rank == 35


@pytest.mark.parametrize("n,count", [(5, 10), (6, 70), (7, 896)])
def test_enumeration_counts(cones, n, count):
    assert len(cones(n)) == count


def test_tau5_is_all_23_cuts(cones):
    cuts = {cut_facet((5, set(A))).as_ints() for A in combinations(range(1, 6), 2)}
    assert set(cones(5).vectors()) == cuts


@pytest.mark.parametrize("n", [5, 6, 7])
def test_orderings_and_adjacency_modes_agree(cones, n):
    ref = set(cones(n).vectors())
    alt = enumerate_facets(n, ordering="most-violated", adjacency="algebraic" if n < 7 else
                           "combinatorial")
    assert set(alt.vectors()) == ref


def test_algebraic_adjacency_tau7(cones):
    assert set(enumerate_facets(7, adjacency="algebraic").vectors()) == set(cones(7).vectors())


def test_progress_lines(capsys):
    stats = DDStats()
    enumerate_facets(6, progress=True, stats=stats)
    err = capsys.readouterr().err
    assert "[tau_6] inserted" in err and stats.steps


def test_double_description_simple_cone():
    # the positive orthant of R^3: dual rays are the unit vectors
    rays, _ = double_description(np.eye(3, dtype=np.int64))
    assert sorted(map(tuple, rays.tolist())) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_verify_facets_catches_a_bad_ray():
    rays = np.array([[1] * 10], dtype=np.int64)
    with pytest.raises(VerificationError):
        verify_facets(5, rays, np.array([0], dtype=np.uint64))


def test_enumerate_range():
    with pytest.raises(InvalidInputError):
        enumerate_facets(4)
    with pytest.raises(InvalidInputError):
        enumerate_facets(9)


def test_adjacency(cones):
    fs = cones(5).facets
    assert all(are_adjacent(a, b) for a, b in combinations(fs, 2))
    with pytest.raises(InvalidInputError):
        are_adjacent(fs[0], fs[0])


def test_adjacency_consistent_with_degrees(cones):
    cone6 = cones(6)
    t, s = trivial_facet(6), star_facet(6, 6, 1)
    flags = [are_adjacent(t, f) for f in cone6.facets if f.as_ints() != t.as_ints()]
    assert sum(flags) == facet_degree(t, cone6) == 32
    assert isinstance(are_adjacent(t, s), bool)


@pytest.mark.parametrize("make,deg", [(lambda: trivial_facet(6), 32), (lambda: star_facet(6), 14),
                                      (lambda: cut_facet((6, {1, 2, 3})), 57)])
def test_degrees_tau6(cones, make, deg):
    assert facet_degree(make(), cones(6)) == deg


def test_cone_index():
    cone = ConeDescription(5, [cut_facet((5, {1, 2}))])
    assert cone.index(cut_facet((5, {1, 2})).vector) == 0
    with pytest.raises(InvalidInputError):
        cone.index(cut_facet((5, {1, 3})))


def test_sample_tau5(cones):
    vecs = set(cones(5).vectors())
    assert all(sample_facet(5, s).as_ints() in vecs for s in range(20))


def test_sample_tau7_lands_in_table2():
    reps = {r for r, _, _ in TAU7}
    for s in range(200):
        assert canonical_form(sample_facet(7, s).vector).as_ints() in reps


def test_sample_is_deterministic():
    assert sample_facet(9, 3) == sample_facet(9, 3)
    assert is_facet_normal(sample_facet(9, 3).vector).is_facet


def test_incidence_constraints_fit_bitmasks():
    assert build_incidence_matrix(8).shape[1] == 56
