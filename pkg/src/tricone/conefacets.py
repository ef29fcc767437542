"""Facet normals of the triangle cone: verification, enumeration, adjacency, sampling.

The facets of tau_n = cone(W) are the extreme rays of the dual cone
{y : y^T W >= 0}.  :func:`double_description` computes those rays by
inserting the C(n,3) triangle inequalities one at a time.  Ray zero-sets are
kept as bitmasks over triangle indices (uint64 for n <= 8).

Rank tests on sets of triangle incidence vectors use arithmetic modulo the
prime 2**31 - 1.  A k x k minor of rows with three unit entries is bounded by
3**(k/2) <= 3**18 < 2**31 for k <= 36, so such a prime divides no nonzero
minor and the modular rank equals the rational rank whenever n <= 9.
"""
from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence

import numpy as np

from . import exactalg
from .errors import InvalidInputError, VerificationError
from .graphcore import (Triangle, WeightedGraph, build_incidence_matrix, num_edges,
                        triangle_edge_indices, triangle_list)

log = logging.getLogger(__name__)

MAX_ENUMERATE_N = 8
_MODULAR_RANK_MAX_N = 9


@dataclass(frozen=True)
class FacetReport:
    is_supporting: bool
    is_facet: bool
    zero_triangles: tuple[Triangle, ...]
    zero_rank: int
    dimension: int

    @property
    def zero_count(self) -> int:
        return len(self.zero_triangles)

    def __bool__(self):
        return self.is_facet


@dataclass(frozen=True)
class FacetNormal:
    """A verified facet normal in standard form together with its zero-sum triangles."""

    vector: WeightedGraph
    zero_triangles: tuple[Triangle, ...] = field(compare=False)

    @property
    def n(self) -> int:
        return self.vector.n

    def as_ints(self) -> tuple[int, ...]:
        return self.vector.as_ints()

    @property
    def zero_mask(self) -> int:
        return _mask_from_triangles(self.zero_triangles, self.n)


@dataclass
class ConeDescription:
    n: int
    facets: list[FacetNormal]

    def __len__(self):
        return len(self.facets)

    def vectors(self) -> list[tuple[int, ...]]:
        return [f.as_ints() for f in self.facets]

    def index(self, y: FacetNormal | WeightedGraph | Sequence[int]) -> int:
        key = _key(y)
        lookup = getattr(self, "_lookup", None)
        if lookup is None:
            lookup = {f.as_ints(): i for i, f in enumerate(self.facets)}
            self._lookup = lookup
        try:
            return lookup[key]
        except KeyError:
            raise InvalidInputError("vector is not a facet of this cone") from None


def _key(y) -> tuple[int, ...]:
    if isinstance(y, FacetNormal):
        return y.as_ints()
    if isinstance(y, WeightedGraph):
        return exactalg.standard_form(y).as_ints()
    return tuple(int(x) for x in y)


def _mask_from_triangles(tris: Iterable[Triangle], n: int) -> int:
    from .graphcore import triangle_index
    m = 0
    for K in tris:
        m |= 1 << triangle_index(K, n)
    return m


@lru_cache(maxsize=None)
def _triangle_rows(n: int) -> np.ndarray:
    """C(n,3) x C(n,2) matrix whose rows are the triangle incidence vectors."""
    return np.ascontiguousarray(build_incidence_matrix(n).T)


def _zero_rank(n: int, rows: np.ndarray) -> int:
    if rows.shape[0] == 0:
        return 0
    if n <= _MODULAR_RANK_MAX_N:
        return exactalg.rank_mod_p(rows)
    return exactalg.rank(rows)


def triangle_values(y: WeightedGraph) -> list:
    """<y, 1_K> for every colex triangle K (exact)."""
    w = y.weights
    return [w[i] + w[j] + w[k] for i, j, k in triangle_edge_indices(y.n)]


def is_supporting(y: WeightedGraph) -> bool:
    """True iff <y, 1_K> >= 0 for every triangle K."""
    return all(v >= 0 for v in triangle_values(y))


def is_facet_normal(y: WeightedGraph) -> FacetReport:
    """Check both facet-normal conditions exactly and report the zero set."""
    if y.is_zero():
        raise InvalidInputError("the zero vector is not a facet normal")
    n = y.n
    vals = triangle_values(y)
    supporting = all(v >= 0 for v in vals)
    zero_idx = [j for j, v in enumerate(vals) if v == 0]
    tris = triangle_list(n)
    rank = _zero_rank(n, _triangle_rows(n)[zero_idx])
    d = num_edges(n)
    return FacetReport(supporting, supporting and rank == d - 1,
                       tuple(tris[j] for j in zero_idx), rank, d)


def facet_normal(y: WeightedGraph | Sequence, n: int | None = None) -> FacetNormal:
    """Verify ``y`` and wrap it (in standard form) as a :class:`FacetNormal`."""
    if not isinstance(y, WeightedGraph):
        y = WeightedGraph.from_vector(y, n)
    y = exactalg.standard_form(y)
    rep = is_facet_normal(y)
    if not rep.is_facet:
        raise VerificationError(
            f"not a facet normal (supporting={rep.is_supporting}, "
            f"zero-set rank {rep.zero_rank} of {rep.dimension - 1})")
    return FacetNormal(y, rep.zero_triangles)


def _trusted_facet(n: int, vec: Sequence[int], mask: int) -> FacetNormal:
    tris = triangle_list(n)
    zt = tuple(tris[j] for j in range(len(tris)) if mask >> j & 1)
    return FacetNormal(WeightedGraph(n, tuple(int(x) for x in vec)), zt)


# ---------------------------------------------------------------------------
# double description


def _bits(mask_array: np.ndarray) -> np.ndarray:
    return np.bitwise_count(mask_array).astype(np.int64)


def _initial_basis(A: np.ndarray, order: Sequence[int]) -> list[int]:
    """Greedy choice of d linearly independent constraint rows, scanning ``order``."""
    d = A.shape[1]
    chosen: list[int] = []
    current = 0
    for j in order:
        trial = chosen + [j]
        r = exactalg.rank_mod_p(A[trial])
        if r > current:
            chosen.append(j)
            current = r
            if r == d:
                break
    if current < d:
        raise InvalidInputError("constraints do not span the ambient space; cone not pointed")
    return chosen


def _primitive_rows(R: np.ndarray) -> np.ndarray:
    g = np.gcd.reduce(np.abs(R), axis=1)
    g[g == 0] = 1
    return R // g[:, None]


@dataclass
class DDStats:
    steps: list[tuple[int, int]] = field(default_factory=list)   # (constraint, ray count)


def double_description(A: np.ndarray, *, ordering: str = "colex", adjacency: str = "combinatorial",
                       progress: Callable[[int, int, int], None] | None = None,
                       stats: DDStats | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Extreme rays of the pointed cone {y : A y >= 0} for a 0/1 constraint matrix A.

    Returns ``(rays, masks)``: primitive integer rays (one per row) and the
    bitmask of constraints tight at each ray.  ``adjacency`` selects the ray
    adjacency test used when combining a positive and a negative ray:
    ``"combinatorial"`` (no third ray is tight on the common zero set) or
    ``"algebraic"`` (the common tight constraints have rank d - 2).  Both are
    exact for a minimal generating set, which the method maintains.
    """
    A = np.asarray(A, dtype=np.int64)
    m, d = A.shape
    if m > 64:
        raise InvalidInputError("double description supports at most 64 constraints")
    if ordering not in ("colex", "most-violated"):
        raise InvalidInputError(f"unknown insertion ordering {ordering!r}")
    if adjacency not in ("combinatorial", "algebraic"):
        raise InvalidInputError(f"unknown adjacency test {adjacency!r}")

    basis = _initial_basis(A, range(m))
    # rays of the simplicial cone {y : A_B y >= 0} are the columns of A_B^{-1}
    inv = exactalg.invert(exactalg.RationalMatrix(A[basis]))
    cols = []
    for j in range(d):
        col = [inv[i, j] for i in range(d)]
        den = np.lcm.reduce([c.denominator for c in col])
        cols.append([int(c * int(den)) for c in col])
    R = _primitive_rows(np.array(cols, dtype=np.int64))
    S = R @ A.T
    bitval = np.array([1 << j for j in range(m)], dtype=np.uint64)
    Z = ((S == 0).astype(np.uint64) * bitval).sum(axis=1, dtype=np.uint64)
    done = np.uint64(0)
    for j in basis:
        done |= np.uint64(1 << j)
    Z &= done
    remaining = [j for j in range(m) if j not in set(basis)]
    if stats is not None:
        stats.steps.append((-1, len(R)))

    while remaining:
        if ordering == "colex":
            j = remaining.pop(0)
        else:
            viol = (R @ A[remaining].T < 0).sum(axis=0)
            j = remaining.pop(int(np.argmax(viol)))
        s = R @ A[j]
        pos = np.nonzero(s > 0)[0]
        neg = np.nonzero(s < 0)[0]
        zer = np.nonzero(s == 0)[0]
        bit = np.uint64(1 << j)
        new_rays = []
        new_masks = []
        if pos.size and neg.size:
            pairs_p, pairs_n, common = _candidate_pairs(Z, pos, neg, d - 2)
            if pairs_p.size:
                if adjacency == "combinatorial":
                    ok = _combinatorial_adjacent(Z, common, pairs_p, pairs_n)
                else:
                    ok = _algebraic_adjacent(A, m, common, d - 2)
                pairs_p, pairs_n, common = pairs_p[ok], pairs_n[ok], common[ok]
                sp = s[pairs_p][:, None]
                sn = -s[pairs_n][:, None]
                new = sp * R[pairs_n] + sn * R[pairs_p]
                new_rays.append(_primitive_rows(new))
                new_masks.append(common | bit)
        R = np.concatenate([R[pos], R[zer]] + new_rays)
        Z = np.concatenate([Z[pos], Z[zer] | bit] + new_masks)
        done |= bit
        if stats is not None:
            stats.steps.append((j, len(R)))
        if progress is not None:
            progress(j, m - len(remaining), len(R))
    order = np.lexsort(R.T[::-1])
    return R[order], Z[order]


def _candidate_pairs(Z, pos, neg, need, block=512):
    """All (p, q) with |Z_p & Z_q| >= need, with the common masks."""
    out_p, out_n, out_c = [], [], []
    Zn = Z[neg]
    for i in range(0, pos.size, block):
        P = pos[i:i + block]
        common = Z[P][:, None] & Zn[None, :]
        ok = np.bitwise_count(common) >= need
        ii, jj = np.nonzero(ok)
        out_p.append(P[ii])
        out_n.append(neg[jj])
        out_c.append(common[ii, jj])
    return np.concatenate(out_p), np.concatenate(out_n), np.concatenate(out_c)


def _combinatorial_adjacent(Z, common, pairs_p, pairs_n, block=256):
    """A pair is adjacent iff exactly two current rays are tight on its common zero set."""
    ok = np.empty(common.size, dtype=bool)
    # rays with too few tight constraints cannot contain a large common set
    for i in range(0, common.size, block):
        c = common[i:i + block]
        contains = (Z[None, :] & c[:, None]) == c[:, None]
        ok[i:i + block] = contains.sum(axis=1) == 2
    return ok


def _algebraic_adjacent(A, m, common, target):
    masks = ((common[:, None] >> np.arange(m, dtype=np.uint64)[None, :]) & np.uint64(1)).astype(bool)
    out = np.empty(common.size, dtype=bool)
    chunk = 2048
    for i in range(0, common.size, chunk):
        blocks = A[None, :, :] * masks[i:i + chunk, :, None]
        out[i:i + chunk] = exactalg.rank_at_least_batched(blocks, target)
    return out


def _progress_printer(n):
    def report(j, k, count):
        print(f"[tau_{n}] inserted {k}/{comb(n, 3)} constraints (triangle #{j}): {count} rays",
              file=sys.stderr, flush=True)
    return report


def enumerate_facets(n: int, *, ordering: str = "colex", adjacency: str = "combinatorial",
                     progress: bool = False, verify: bool = True,
                     stats: DDStats | None = None) -> ConeDescription:
    """All facet normals of tau_n (5 <= n <= 8), standard form, sorted lexicographically."""
    if not 5 <= n <= MAX_ENUMERATE_N:
        raise InvalidInputError(f"facet enumeration supports 5 <= n <= {MAX_ENUMERATE_N}")
    A = _triangle_rows(n)
    rays, masks = double_description(A, ordering=ordering, adjacency=adjacency,
                                     progress=_progress_printer(n) if progress else None,
                                     stats=stats)
    facets = []
    for r, z in zip(rays.tolist(), masks.tolist()):
        f = _trusted_facet(n, r, int(z))
        facets.append(f)
    if verify:
        verify_facets(n, rays, masks)
    facets.sort(key=lambda f: f.as_ints())
    return ConeDescription(n, facets)


def verify_facets(n: int, rays: np.ndarray, masks: np.ndarray) -> None:
    """Exact vectorised re-check of both facet conditions for every ray."""
    A = _triangle_rows(n)
    S = rays @ A.T
    if (S < 0).any():
        raise VerificationError("an enumerated ray is negative on some triangle")
    m = A.shape[0]
    bits = ((masks[:, None] >> np.arange(m, dtype=np.uint64)[None, :]) & np.uint64(1)).astype(bool)
    if not np.array_equal(bits, S == 0):
        raise VerificationError("stored zero sets disagree with the ray values")
    ok = exactalg.rank_at_least_batched(A[None, :, :] * bits[:, :, None], num_edges(n) - 1)
    if not ok.all():
        raise VerificationError("an enumerated ray does not have a codimension-1 zero set")
    g = np.gcd.reduce(np.abs(rays), axis=1)
    if (g != 1).any():
        raise VerificationError("an enumerated ray is not primitive")


# ---------------------------------------------------------------------------
# adjacency


def are_adjacent(y1: FacetNormal, y2: FacetNormal) -> bool:
    """Facets meet in a ridge: their common zero triangles have rank C(n,2) - 2."""
    if y1.n != y2.n:
        raise InvalidInputError("facets on different vertex sets")
    if y1.as_ints() == y2.as_ints():
        raise InvalidInputError("a facet is not compared with itself (parallel inputs)")
    common = y1.zero_mask & y2.zero_mask
    idx = [j for j in range(comb(y1.n, 3)) if common >> j & 1]
    return _zero_rank(y1.n, _triangle_rows(y1.n)[idx]) == num_edges(y1.n) - 2


def adjacency_flags(rep: FacetNormal, cone: ConeDescription) -> np.ndarray:
    """Boolean vector: which facets of ``cone`` are adjacent to ``rep``."""
    n = cone.n
    me = cone.index(rep)
    masks = np.array([f.zero_mask for f in cone.facets], dtype=np.uint64) if n <= 8 else None
    if masks is None:
        return np.array([i != me and are_adjacent(rep, f) for i, f in enumerate(cone.facets)])
    d = num_edges(n)
    common = masks & np.uint64(rep.zero_mask)
    cand = np.bitwise_count(common) >= d - 2
    cand[me] = False
    idx = np.nonzero(cand)[0]
    out = np.zeros(len(cone.facets), dtype=bool)
    if idx.size:
        A = _triangle_rows(n)
        out[idx] = _algebraic_adjacent(A, A.shape[0], common[idx], d - 2)
    return out


def facet_degree(rep: FacetNormal, cone: ConeDescription) -> int:
    """Number of facets of ``cone`` adjacent to ``rep``."""
    return int(adjacency_flags(rep, cone).sum())


# ---------------------------------------------------------------------------
# sampling


def sample_facet(n: int, seed: int, bound: int = 1000) -> FacetNormal:
    """A random facet normal: the optimal vertex of min <c, y> over the cross-section
    {y : y^T W >= 0, <y, 1> = 1} for an integer objective c uniform in [-bound, bound]."""
    from .membership import minimize_over_cross_section

    if n < 5:
        raise InvalidInputError("sampling needs n >= 5")
    rng = np.random.default_rng([seed, n, bound])
    c = [int(x) for x in rng.integers(-bound, bound + 1, size=num_edges(n))]
    y = minimize_over_cross_section(n, c)
    total = sum(y)
    if total <= 0:
        raise VerificationError("supporting vector with non-positive total weight")
    return facet_normal(WeightedGraph(n, tuple(y)))
