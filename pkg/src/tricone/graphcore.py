"""Colex coordinates for edge-weighted graphs on [n] and the triangle inclusion matrix.

A weighted graph on the vertex set {1, ..., n} is a vector of C(n, 2) exact
rationals.  Coordinates are ordered colexicographically on vertex pairs:
{1,2}, {1,3}, {2,3}, {1,4}, {2,4}, {3,4}, {1,5}, ...  Triangles (3-subsets)
use the same colex convention, and the inclusion matrix W has one row per
edge and one column per triangle with W[e, K] = 1 iff e is a subset of K.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, isqrt
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidInputError


class Edge(NamedTuple):
    u: int
    v: int


Triangle = tuple[int, int, int]


def _as_edge(e: Iterable[int], n: int) -> Edge:
    t = sorted(int(x) for x in e)
    if len(t) != 2 or not 1 <= t[0] < t[1] <= n:
        raise InvalidInputError(f"invalid edge {tuple(t)} for n={n}")
    return Edge(*t)


def _as_triangle(K: Iterable[int], n: int) -> Triangle:
    t = tuple(sorted(int(x) for x in K))
    if len(t) != 3 or not 1 <= t[0] < t[1] < t[2] <= n:
        raise InvalidInputError(f"invalid triangle {tuple(K)} for n={n}")
    return t


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def n_from_length(length: int) -> int:
    """Invert C(n, 2) = length."""
    n = (1 + isqrt(1 + 8 * length)) // 2
    if num_edges(n) != length or n < 2:
        raise InvalidInputError(f"{length} is not a binomial coefficient C(n,2)")
    return n


def edge_index(e: Iterable[int], n: int) -> int:
    """Position of ``e`` in colex order (0-based): C(v-1, 2) + (u-1)."""
    u, v = _as_edge(e, n)
    return comb(v - 1, 2) + (u - 1)


def index_to_edge(i: int, n: int) -> Edge:
    if not 0 <= i < num_edges(n):
        raise InvalidInputError(f"edge index {i} out of range for n={n}")
    return edge_list(n)[i]


def triangle_index(K: Iterable[int], n: int) -> int:
    a, b, c = _as_triangle(K, n)
    return comb(c - 1, 3) + comb(b - 1, 2) + (a - 1)


def index_to_triangle(i: int, n: int) -> Triangle:
    if not 0 <= i < comb(n, 3):
        raise InvalidInputError(f"triangle index {i} out of range for n={n}")
    return triangle_list(n)[i]


@lru_cache(maxsize=None)
def edge_list(n: int) -> tuple[Edge, ...]:
    return tuple(Edge(u, v) for v in range(2, n + 1) for u in range(1, v))


@lru_cache(maxsize=None)
def triangle_list(n: int) -> tuple[Triangle, ...]:
    return tuple((a, b, c) for c in range(3, n + 1)
                 for b in range(2, c) for a in range(1, b))


@lru_cache(maxsize=None)
def pair_index_table(n: int) -> np.ndarray:
    """(n+1) x (n+1) table with T[u, v] = edge_index({u, v}); -1 on the diagonal."""
    T = np.full((n + 1, n + 1), -1, dtype=np.int64)
    for i, (u, v) in enumerate(edge_list(n)):
        T[u, v] = T[v, u] = i
    T.flags.writeable = False
    return T


@lru_cache(maxsize=None)
def triangle_edge_indices(n: int) -> np.ndarray:
    """m x 3 array: the three edge coordinates of each colex triangle."""
    T = pair_index_table(n)
    out = np.array([[T[a, b], T[a, c], T[b, c]] for a, b, c in triangle_list(n)],
                   dtype=np.int64).reshape(-1, 3)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def build_incidence_matrix(n: int) -> np.ndarray:
    """The C(n,2) x C(n,3) inclusion matrix W (read-only int64 array)."""
    if n < 3:
        raise InvalidInputError("the inclusion matrix needs n >= 3")
    W = np.zeros((num_edges(n), comb(n, 3)), dtype=np.int64)
    for j, idx in enumerate(triangle_edge_indices(n)):
        W[idx, j] = 1
    W.flags.writeable = False
    return W


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise InvalidInputError("floating-point weights are not accepted; use Fraction or str")
    return Fraction(x)


@dataclass(frozen=True)
class WeightedGraph:
    """Exact edge weights on the complete graph K_n, stored densely in colex order."""

    n: int
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(_to_fraction(x) for x in self.weights)
        if self.n < 2 or len(w) != num_edges(self.n):
            raise InvalidInputError(
                f"expected {num_edges(self.n)} weights for n={self.n}, got {len(w)}")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_vector(cls, values: Sequence, n: int | None = None) -> "WeightedGraph":
        values = list(values)
        if n is None:
            n = n_from_length(len(values))
        return cls(n, tuple(values))

    @classmethod
    def zeros(cls, n: int) -> "WeightedGraph":
        return cls(n, (0,) * num_edges(n))

    @classmethod
    def ones(cls, n: int) -> "WeightedGraph":
        return cls(n, (1,) * num_edges(n))

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, e) -> Fraction:
        if isinstance(e, (int, np.integer)):
            return self.weights[e]
        return self.weights[edge_index(e, self.n)]

    def weight(self, u: int, v: int) -> Fraction:
        return self.weights[edge_index((u, v), self.n)]

    def items(self):
        return zip(edge_list(self.n), self.weights)

    def is_zero(self) -> bool:
        return not any(self.weights)

    def is_integral(self) -> bool:
        return all(w.denominator == 1 for w in self.weights)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise InvalidInputError("weighted graph has non-integer weights")
        return tuple(w.numerator for w in self.weights)

    def _check(self, other: "WeightedGraph"):
        if not isinstance(other, WeightedGraph) or other.n != self.n:
            raise InvalidInputError("weighted graphs live on different vertex sets")

    def __add__(self, other: "WeightedGraph") -> "WeightedGraph":
        self._check(other)
        return WeightedGraph(self.n, tuple(a + b for a, b in zip(self.weights, other.weights)))

    def __sub__(self, other: "WeightedGraph") -> "WeightedGraph":
        self._check(other)
        return WeightedGraph(self.n, tuple(a - b for a, b in zip(self.weights, other.weights)))

    def __neg__(self) -> "WeightedGraph":
        return WeightedGraph(self.n, tuple(-a for a in self.weights))

    def __mul__(self, q) -> "WeightedGraph":
        q = _to_fraction(q)
        return WeightedGraph(self.n, tuple(q * a for a in self.weights))

    __rmul__ = __mul__

    def __repr__(self):
        body = ", ".join(str(w) for w in self.weights)
        return f"WeightedGraph(n={self.n}, ({body}))"


def inner_product(y: WeightedGraph, g: WeightedGraph) -> Fraction:
    if y.n != g.n:
        raise InvalidInputError(f"dimension mismatch: n={y.n} vs n={g.n}")
    return sum((a * b for a, b in zip(y.weights, g.weights)), Fraction(0))


def incidence_vector(K: Iterable[int], n: int) -> WeightedGraph:
    """The 0/1 vector of the three edges of triangle ``K``."""
    a, b, c = _as_triangle(K, n)
    w = [0] * num_edges(n)
    for e in ((a, b), (a, c), (b, c)):
        w[edge_index(e, n)] = 1
    return WeightedGraph(n, tuple(w))


def graph_from_edges(n: int, edges: Iterable[tuple[Iterable[int], object]]) -> WeightedGraph:
    """Dense weighted graph from (edge, weight) pairs; unlisted edges get weight 0."""
    w: list = [0] * num_edges(n)
    seen = set()
    for e, x in edges:
        i = edge_index(e, n)
        if i in seen:
            raise InvalidInputError(f"duplicate edge {tuple(e)}")
        seen.add(i)
        w[i] = x
    return WeightedGraph(n, tuple(w))


def graph_from_edge_set(n: int, edges: Iterable[Iterable[int]]) -> WeightedGraph:
    """Characteristic vector 1_G of a simple graph given by its edge set."""
    return graph_from_edges(n, ((e, 1) for e in edges))


def triangle_sums(y: WeightedGraph | Sequence) -> list:
    """<y, 1_K> for every triangle K, in colex triangle order."""
    w = y.weights if isinstance(y, WeightedGraph) else tuple(y)
    n = y.n if isinstance(y, WeightedGraph) else n_from_length(len(w))
    return [w[i] + w[j] + w[k] for i, j, k in triangle_edge_indices(n)]


def complete_graph_edges(vertices: Iterable[int]):
    return combinations(sorted(vertices), 2)
