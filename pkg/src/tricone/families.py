"""Named facet families, counterexample graphs, vertex splitting and structural checks."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import networkx as nx

from . import exactalg
from .conefacets import FacetNormal, facet_normal, triangle_values
from .errors import HypothesisError, IntegrityError, InvalidInputError
from .exactalg import RationalMatrix
from .graphcore import (WeightedGraph, build_incidence_matrix, edge_index, edge_list,
                        graph_from_edge_set, graph_from_edges, num_edges, triangle_list)


def _vector(y) -> WeightedGraph:
    return y.vector if isinstance(y, FacetNormal) else y


def trivial_facet(n: int, e: Iterable[int] = (1, 2)) -> FacetNormal:
    """The unit vector on edge e.  Not a facet for n = 5, where only (2,3)-cuts are."""
    if n < 6:
        raise InvalidInputError("single-edge facet normals need n >= 6")
    return facet_normal(graph_from_edges(n, [(tuple(e), 1)]))


def star_facet(n: int, center: int | None = None, neg: int = 1) -> FacetNormal:
    """-1 on {neg, center}, +1 on every other edge at ``center``."""
    if n < 6:
        raise InvalidInputError("star facets need n >= 6")
    center = n if center is None else center
    if center == neg or not (1 <= center <= n and 1 <= neg <= n):
        raise InvalidInputError("center and negative leaf must be distinct vertices of [n]")
    edges = [((i, center), -1 if i == neg else 1) for i in range(1, n + 1) if i != center]
    return facet_normal(graph_from_edges(n, edges))


@dataclass(frozen=True)
class CutPartition:
    n: int
    A: frozenset[int]

    def __post_init__(self):
        A = frozenset(int(a) for a in self.A)
        object.__setattr__(self, "A", A)
        if not A <= set(range(1, self.n + 1)):
            raise InvalidInputError("cut side is not a subset of [n]")
        if len(A) < 2 or self.n - len(A) < 2:
            raise InvalidInputError("both sides of a cut facet need at least two vertices")

    @property
    def B(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.A


def cut_vector(n: int, A: Iterable[int]) -> WeightedGraph:
    """2 inside each side of (A, [n] \\ A), -1 across.  No size checks."""
    A = set(A)
    return WeightedGraph(n, tuple(2 if ((u in A) == (v in A)) else -1 for u, v in edge_list(n)))


def cut_facet(p: CutPartition | tuple[int, Iterable[int]]) -> FacetNormal:
    if not isinstance(p, CutPartition):
        p = CutPartition(p[0], frozenset(p[1]))
    if p.n < 5:
        raise InvalidInputError("cut facets need n >= 5")
    return facet_normal(cut_vector(p.n, p.A))


def binary_star_vector(n: int, A: Iterable[int], B: Iterable[int]) -> WeightedGraph:
    A, B = set(A), set(B)
    edges = [((1, 2), -1)] + [((1, a), 1) for a in sorted(A)] + [((2, b), 1) for b in sorted(B)]
    return graph_from_edges(n, edges)


def binary_star_facet(n: int, A: Iterable[int], B: Iterable[int]) -> FacetNormal:
    """-1 on {1,2}; +1 on {1,a} (a in A) and {2,b} (b in B)."""
    A, B = set(A), set(B)
    if n < 8:
        raise InvalidInputError("binary star facets need n >= 8")
    if A & B or A | B != set(range(3, n + 1)):
        raise InvalidInputError("A and B must partition {3, ..., n}")
    if len(A) < 3 or len(B) < 3:
        raise InvalidInputError("both leaf sets of a binary star need at least three vertices")
    return facet_normal(binary_star_vector(n, A, B))


def binary_star_witness_graph(n: int, A: Iterable[int], B: Iterable[int]) -> WeightedGraph:
    """K_{n-2} on A u B, A joined to 2, B joined to 1, plus the edge {1,2}."""
    A, B = set(A), set(B)
    edges = set(combinations(sorted(A | B), 2))
    edges |= {(2, a) for a in A} | {(1, b) for b in B} | {(1, 2)}
    return graph_from_edge_set(n, edges)


def vertex_split(y: FacetNormal | WeightedGraph) -> FacetNormal:
    """Lift a facet normal of tau_n to tau_{n+1} by duplicating vertex n.

    The new vertex n+1 copies the weights of n towards [n-1], and the edge
    {n, n+1} gets -2 * min_i y({i, n}).  Requires a triangle inside [n-1]
    with positive weight.
    """
    y = _vector(y)
    n = y.n
    if n < 5:
        raise InvalidInputError("vertex splitting needs n >= 5")
    inner = [K for K, v in zip(triangle_list(n), triangle_values(y)) if K[2] < n and v > 0]
    if not inner:
        raise HypothesisError(f"no positive triangle inside [{n - 1}]; vertex splitting does not apply")
    col = [y.weight(i, n) for i in range(1, n)]
    w = list(y.weights) + col + [-2 * min(col)]
    return facet_normal(WeightedGraph(n + 1, tuple(w)))


def lex_product_c4(m: int) -> WeightedGraph:
    """1_G for G = C_4 . K_{6m+3}: four cliques of size 6m+3 in a cyclic arrangement."""
    if m < 0:
        raise InvalidInputError("m must be nonnegative")
    s = 6 * m + 3
    blocks = [range(b * s + 1, (b + 1) * s + 1) for b in range(4)]
    edges = set()
    for b in range(4):
        edges.update(combinations(blocks[b], 2))
        nb = blocks[(b + 1) % 4]
        edges.update((min(u, v), max(u, v)) for u in blocks[b] for v in nb)
    return graph_from_edge_set(4 * s, edges)


def c4_opposite_cut(m: int) -> WeightedGraph:
    """The (n/2, n/2)-cut putting opposite blocks of C_4 . K_{6m+3} on the same side."""
    s = 6 * m + 3
    A = list(range(1, s + 1)) + list(range(2 * s + 1, 3 * s + 1))
    return cut_vector(4 * s, A)


def arithmetic_conditions(g: WeightedGraph) -> dict:
    """Necessary conditions for an exact triangle decomposition of a simple graph."""
    deg = [0] * (g.n + 1)
    for (u, v), w in g.items():
        deg[u] += w
        deg[v] += w
    total = sum(g.weights)
    return {
        "even_degrees": all(d % 2 == 0 for d in deg[1:]),
        "edges_divisible_by_3": total % 3 == 0,
        "min_degree": min(deg[1:]),
    }


# ---------------------------------------------------------------------------
# structural checks


def mod3_category(y: FacetNormal | WeightedGraph) -> int:
    """0 if some entry is 0 mod 3, otherwise the common residue (1 or 2)."""
    y = _vector(y)
    if not exactalg.is_standard_form(y):
        raise InvalidInputError("mod-3 category is defined for standard-form vectors")
    res = {w.numerator % 3 for w in y.weights}
    if 0 in res:
        return 0
    if len(res) != 1:
        raise IntegrityError(f"mixed nonzero residues mod 3 in {y}")
    return res.pop()


@dataclass(frozen=True)
class SignExtremes:
    applicable: bool
    a: Fraction | None = None
    b: Fraction | None = None
    bounds_hold: bool | None = None

    @property
    def ratio(self) -> Fraction | None:
        """a / (-b); the proven bounds say 1/2 <= ratio <= 2."""
        return None if not self.applicable else self.a / -self.b


def sign_extremes_check(y: FacetNormal | WeightedGraph) -> SignExtremes:
    y = _vector(y)
    pos = [w for w in y.weights if w > 0]
    neg = [w for w in y.weights if w < 0]
    if not neg or not pos:
        return SignExtremes(False)
    a, b = max(pos), min(neg)
    return SignExtremes(True, a, b, -b / 2 <= a <= -2 * b)


@dataclass(frozen=True)
class SupportReport:
    bipartite: bool
    complete_bipartite: bool | None

    @property
    def implication_holds(self) -> bool:
        return not self.bipartite or bool(self.complete_bipartite)


def nonpositive_support_graph(y: FacetNormal | WeightedGraph) -> nx.Graph:
    y = _vector(y)
    G = nx.Graph()
    G.add_nodes_from(range(1, y.n + 1))
    G.add_edges_from(e for e, w in y.items() if w <= 0)
    return G


def nonpositive_support_check(y: FacetNormal | WeightedGraph) -> SupportReport:
    """Is the graph of entries <= 0 bipartite, and if so complete bipartite?"""
    G = nonpositive_support_graph(y)
    if not nx.is_bipartite(G):
        return SupportReport(False, None)
    # a complete bipartite graph is connected with a unique bipartition (or edgeless on <= 1 side)
    if not nx.is_connected(G):
        return SupportReport(True, False)
    left, right = nx.bipartite.sets(G)
    complete = G.number_of_edges() == len(left) * len(right)
    return SupportReport(True, complete)


def zero_sum_edge_cover_check(y: FacetNormal | WeightedGraph) -> bool:
    """Every edge lies in some triangle K with <y, 1_K> = 0."""
    y = _vector(y)
    covered = [False] * num_edges(y.n)
    for (a, b, c), v in zip(triangle_list(y.n), triangle_values(y)):
        if v == 0:
            for e in ((a, b), (a, c), (b, c)):
                covered[edge_index(e, y.n)] = True
    return all(covered)


def is_trivial(y: FacetNormal | WeightedGraph) -> bool:
    y = _vector(y)
    return sum(1 for w in y.weights if w != 0) == 1


def w5_inverse() -> RationalMatrix:
    """Closed-form inverse of the 10 x 10 inclusion matrix for n = 5.

    Rows are indexed by colex triangles, columns by colex edges; the entry is
    1/3 when |K & e| is 0 or 2 and -1/6 otherwise.
    """
    third, sixth = Fraction(1, 3), Fraction(-1, 6)
    U = RationalMatrix([[third if len(set(K) & set(e)) in (0, 2) else sixth
                         for e in edge_list(5)] for K in triangle_list(5)])
    if U @ RationalMatrix(build_incidence_matrix(5)) != RationalMatrix.identity(10):
        raise IntegrityError("closed-form inverse of W_5 failed U W = I")
    return U
