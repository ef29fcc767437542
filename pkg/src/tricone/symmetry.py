"""The S_n action on weighted graphs, canonical forms, stabilizers and classification.

The canonical form of y is the lexicographically largest vector among all
relabelings of standard_form(y), comparing coordinates in colex order.  Colex
order makes the search incremental: once vertices have been placed at
positions 1..k, the first C(k,2) coordinates are fixed, and placing vertex w
at position k+1 appends the block (y(p_1, w), ..., y(p_k, w)).  The search
keeps only partial orderings whose prefix is maximal, and collapses twin
vertices (those with identical weights to every other vertex), since swapping
twins is an automorphism.  Counting surviving leaves with twin multiplicities
gives |stab(y)| as a by-product.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .exactalg import standard_form
from .graphcore import WeightedGraph, edge_list, pair_index_table


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection of [n]; ``images[i-1]`` is the image of vertex i."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise InvalidInputError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "VertexPermutation":
        imgs = list(range(1, n + 1))
        imgs[a - 1], imgs[b - 1] = b, a
        return cls(tuple(imgs))

    @classmethod
    def random(cls, n: int, rng) -> "VertexPermutation":
        """Uniform permutation; rng is anything with a shuffle method."""
        imgs = list(range(1, n + 1))
        rng.shuffle(imgs)
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "VertexPermutation") -> "VertexPermutation":
        """Composition: (self * other)(i) = self(other(i))."""
        return VertexPermutation(tuple(self(other(i)) for i in range(1, other.n + 1)))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * self.n
        for i, a in enumerate(self.images, start=1):
            inv[a - 1] = i
        return VertexPermutation(tuple(inv))


def _as_perm(alpha) -> VertexPermutation:
    return alpha if isinstance(alpha, VertexPermutation) else VertexPermutation(tuple(alpha))


def _permute_seq(w: Sequence, n: int, images: Sequence[int]) -> tuple:
    T = pair_index_table(n)
    out = [None] * len(w)
    for i, (u, v) in enumerate(edge_list(n)):
        out[T[images[u - 1], images[v - 1]]] = w[i]
    return tuple(out)


def permute(y: WeightedGraph, alpha) -> WeightedGraph:
    """y^alpha, defined by y^alpha({alpha(u), alpha(v)}) = y({u, v})."""
    alpha = _as_perm(alpha)
    if alpha.n != y.n:
        raise InvalidInputError(f"permutation of {alpha.n} points acting on n={y.n}")
    return WeightedGraph(y.n, _permute_seq(y.weights, y.n, alpha.images))


# ---------------------------------------------------------------------------
# canonical search on integer (or any totally ordered) weights


def _adjacency(w: Sequence, n: int) -> list[list]:
    A = [[0] * (n + 1) for _ in range(n + 1)]
    for (u, v), x in zip(edge_list(n), w):
        A[u][v] = A[v][u] = x
    return A


def _twin_classes(A: list[list], n: int) -> list[int]:
    """cls[v] = smallest vertex twin to v (identical weights to all other vertices)."""
    inv = {v: tuple(sorted(A[v][1:v] + A[v][v + 1:])) for v in range(1, n + 1)}
    cls = list(range(n + 1))
    for a in range(1, n + 1):
        if cls[a] != a:
            continue
        for b in range(a + 1, n + 1):
            if cls[b] != b or inv[a] != inv[b]:
                continue
            if all(A[a][x] == A[b][x] for x in range(1, n + 1) if x != a and x != b):
                cls[b] = a
    return cls


def _canonical_search(w: Sequence, n: int) -> tuple[tuple, int, tuple[int, ...]]:
    """Lex-max relabeling of ``w``.

    Returns (canonical vector, number of maximising orderings = |stab|,
    one maximising ordering as a tuple of original vertices).
    """
    A = _adjacency(w, n)
    cls = _twin_classes(A, n)
    # states: (ordering, multiplicity)
    states: list[tuple[tuple[int, ...], int]] = [((), 1)]
    prefix: list = []
    for k in range(n):
        best = None
        nxt: list[tuple[tuple[int, ...], int]] = []
        for order, mult in states:
            placed = set(order)
            counts: dict[int, int] = {}
            for v in range(1, n + 1):
                if v not in placed:
                    counts[cls[v]] = counts.get(cls[v], 0) + 1
            # branch on one representative per twin class; ascending labels
            for rep, c in counts.items():
                v = rep if rep not in placed else next(
                    u for u in range(1, n + 1) if cls[u] == rep and u not in placed)
                block = tuple(A[p][v] for p in order)
                if best is None or block > best:
                    best = block
                    nxt = [(order + (v,), mult * c)]
                elif block == best:
                    nxt.append((order + (v,), mult * c))
        prefix.extend(best)
        states = nxt
    count = sum(m for _, m in states)
    return tuple(prefix), count, states[0][0]


def _canonical_ints(w: tuple[int, ...], n: int) -> tuple[int, ...]:
    return _canonical_search(w, n)[0]


def canonical_form(y: WeightedGraph) -> WeightedGraph:
    """Lexicographically largest relabeling of standard_form(y) in colex coordinates."""
    if y.is_zero():
        raise InvalidInputError("the zero vector has no canonical form")
    s = standard_form(y)
    return WeightedGraph(y.n, _canonical_search(s.as_ints(), y.n)[0])


def canonical_labeling(y: WeightedGraph) -> VertexPermutation:
    """A permutation alpha with permute(standard_form(y), alpha) == canonical_form(y)."""
    s = standard_form(y)
    _, _, order = _canonical_search(s.as_ints(), y.n)
    # order[k] is the original vertex sent to position k+1
    images = [0] * y.n
    for pos, v in enumerate(order, start=1):
        images[v - 1] = pos
    return VertexPermutation(tuple(images))


def stabilizer_order(y: WeightedGraph) -> int:
    """|{alpha in S_n : y^alpha = y}|."""
    if y.is_zero():
        return factorial(y.n)
    s = standard_form(y)
    return _canonical_search(s.as_ints(), y.n)[1]


def orbit_size(y: WeightedGraph) -> int:
    return factorial(y.n) // stabilizer_order(y)


def canonical_form_bruteforce(y: WeightedGraph) -> WeightedGraph:
    """Reference implementation over all n! relabelings (small n only)."""
    s = standard_form(y).as_ints()
    best = max(_permute_seq(s, y.n, p) for p in itertools.permutations(range(1, y.n + 1)))
    return WeightedGraph(y.n, best)


def stabilizer_order_bruteforce(y: WeightedGraph) -> int:
    w = y.weights
    return sum(1 for p in itertools.permutations(range(1, y.n + 1))
               if _permute_seq(w, y.n, p) == w)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class FacetClass:
    canonical_rep: WeightedGraph
    count: int
    stabilizer_order: int
    category: int
    degree: int | None = None

    @property
    def n(self) -> int:
        return self.canonical_rep.n

    @property
    def orbit_size(self) -> int:
        return factorial(self.n) // self.stabilizer_order

    def as_ints(self) -> tuple[int, ...]:
        return self.canonical_rep.as_ints()

    def with_degree(self, degree: int) -> "FacetClass":
        return FacetClass(self.canonical_rep, self.count, self.stabilizer_order,
                          self.category, degree)


def _canon_worker(args):
    w, n = args
    return _canonical_ints(w, n)


def classify(facets: Iterable, workers: int = 1) -> list[FacetClass]:
    """Group standard-form vectors into isomorphism classes, sorted by representative.

    Accepts WeightedGraphs, FacetNormals or integer sequences.  ``workers > 1``
    fans the canonical-form computations out to worker processes; the result
    does not depend on it.
    """
    from .families import mod3_category

    vecs: list[tuple[int, ...]] = []
    n = None
    for f in facets:
        if hasattr(f, "as_ints"):
            w = f.as_ints()
            fn = f.n
        else:
            w = tuple(int(x) for x in f)
            fn = None
        if fn is None:
            from .graphcore import n_from_length
            fn = n_from_length(len(w))
        if n is None:
            n = fn
        elif fn != n:
            raise InvalidInputError("cannot classify vectors on different vertex counts")
        vecs.append(w)
    if not vecs:
        return []
    if workers > 1 and len(vecs) > 64:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            canon = list(ex.map(_canon_worker, ((w, n) for w in vecs), chunksize=256))
    else:
        canon = [_canonical_ints(w, n) for w in vecs]
    counts: dict[tuple[int, ...], int] = {}
    for c in canon:
        counts[c] = counts.get(c, 0) + 1
    out = []
    for rep in sorted(counts):
        g = WeightedGraph(n, rep)
        _, stab, _ = _canonical_search(rep, n)
        out.append(FacetClass(g, counts[rep], stab, mod3_category(g)))
    return out
