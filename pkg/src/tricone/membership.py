"""Membership in tau_n with exact certificates, and the metric polytope check.

Membership of g is feasibility of {x >= 0 : W x = g}.  An exact dense-tableau
simplex (Bland's rule) decides it.  A feasible basis gives the triangle
coefficients; an infeasible phase 1 gives a dual vector s with s^T W >= 0 and
<s, g> < 0 (a Farkas certificate).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from gmpy2 import mpq

from . import exactalg
from .errors import InvalidInputError
from .graphcore import (Triangle, WeightedGraph, build_incidence_matrix, edge_index,
                        num_edges, triangle_edge_indices, triangle_list)


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class _Tableau:
    """Dense simplex tableau for  min c.x  s.t.  A x = b (b >= 0), x >= 0.

    Artificial columns are appended after the structural ones and start as the
    basis.  Reduced costs are kept for every column, so dual values can be read
    off the artificial columns.
    """

    def __init__(self, A: list[list], b: list):
        self.m = len(A)
        self.ns = len(A[0]) if A else 0
        ncol = self.ns + self.m
        self.rows = [[mpq(x) for x in row] + [mpq(int(i == j)) for j in range(self.m)] + [mpq(bi)]
                     for i, (row, bi) in enumerate(zip(A, b))]
        self.basis = [self.ns + i for i in range(self.m)]
        self.ncol = ncol
        self.allowed = [True] * ncol

    def set_objective(self, c: Sequence):
        """Reduced-cost row for cost vector c (length ncol)."""
        c = [mpq(x) for x in c]
        z = list(c) + [mpq(0)]
        for i, j in enumerate(self.basis):
            cj = c[j]
            if cj:
                row = self.rows[i]
                z = [a - cj * r for a, r in zip(z, row)]
        self.z = z
        self.cost = c

    def pivot(self, r: int, col: int):
        row = self.rows[r]
        p = row[col]
        if p != 1:
            row = [x / p for x in row]
            self.rows[r] = row
        nz = [j for j, x in enumerate(row) if x]
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[col]
                if f:
                    for j in nz:
                        other[j] -= f * row[j]
        f = self.z[col]
        if f:
            for j in nz:
                self.z[j] -= f * row[j]
        self.basis[r] = col

    def run(self, max_iter: int = 100_000):
        for _ in range(max_iter):
            # Bland: smallest-index improving column
            col = next((j for j in range(self.ncol) if self.allowed[j] and self.z[j] < 0), None)
            if col is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], col)
        raise RuntimeError("simplex iteration limit reached")

    def value(self):
        return -self.z[-1]

    def primal(self) -> list:
        x = [mpq(0)] * self.ncol
        for i, j in enumerate(self.basis):
            x[j] = self.rows[i][-1]
        return x

    def duals(self) -> list:
        """u with u^T A_j = c_j - reduced_cost_j; read from the identity columns."""
        return [self.cost[self.ns + i] - self.z[self.ns + i] for i in range(self.m)]

    def drive_out_artificials(self):
        """After a zero-valued phase 1, pivot artificials out of the basis where possible."""
        keep = []
        for i, j in enumerate(self.basis):
            if j >= self.ns:
                col = next((k for k in range(self.ns) if self.rows[i][k] != 0), None)
                if col is not None:
                    self.pivot(i, col)
        for j in range(self.ns, self.ncol):
            self.allowed[j] = False
        return keep


def _phase_one(A: list[list[int]], b: list) -> tuple[_Tableau, list[int]]:
    signs = [(-1 if bi < 0 else 1) for bi in b]
    A2 = [[s * x for x in row] for s, row in zip(signs, A)]
    b2 = [s * bi for s, bi in zip(signs, b)]
    T = _Tableau(A2, b2)
    T.set_objective([0] * T.ns + [1] * T.m)
    T.run()
    return T, signs


@dataclass(frozen=True)
class MembershipResult:
    verdict: str                                   # "member" or "non_member"
    coefficients: dict[Triangle, Fraction] | None = None
    separator: WeightedGraph | None = None
    arithmetic: dict = field(default_factory=dict, compare=False)

    @property
    def is_member(self) -> bool:
        return self.verdict == "member"


def _w_rows(n: int) -> list[list[int]]:
    return build_incidence_matrix(n).tolist()


def decide_membership(g: WeightedGraph) -> MembershipResult:
    """Decide g in tau_n exactly and return a certificate either way."""
    n = g.n
    if n < 3:
        raise InvalidInputError("membership needs n >= 3")
    A = _w_rows(n)
    b = [mpq(w.numerator, w.denominator) for w in g.weights]
    T, signs = _phase_one(A, b)
    tris = triangle_list(n)
    if T.value() == 0:
        x = T.primal()
        coeffs = {tris[j]: _frac(x[j]) for j in range(T.ns) if x[j] != 0}
        return MembershipResult("member", coefficients=coeffs)
    u = T.duals()
    s = [-sg * _frac(ui) for sg, ui in zip(signs, u)]
    sep = exactalg.standard_form(WeightedGraph(n, tuple(s)))
    return MembershipResult("non_member", separator=sep)


def verify_certificate(g: WeightedGraph, r: MembershipResult) -> bool:
    """Re-check a certificate from scratch; never trusts the solver."""
    n = g.n
    if r.verdict == "member":
        if r.coefficients is None:
            return False
        acc = [Fraction(0)] * num_edges(n)
        for K, x in r.coefficients.items():
            if x < 0:
                return False
            a, b_, c = sorted(K)
            for e in ((a, b_), (a, c), (b_, c)):
                acc[edge_index(e, n)] += x
        return tuple(acc) == g.weights
    if r.verdict == "non_member":
        s = r.separator
        if s is None or s.n != n:
            return False
        w = s.weights
        if any(w[i] + w[j] + w[k] < 0 for i, j, k in triangle_edge_indices(n)):
            return False
        return sum((a * b for a, b in zip(w, g.weights)), Fraction(0)) < 0
    return False


def minimize_over_cross_section(n: int, c: Sequence) -> list[Fraction]:
    """A vertex y minimising <c, y> over {y : y^T W >= 0, <y, 1> = 1}.

    Solved through its dual  max t  s.t.  W x + t 1 = c, x >= 0; the optimal
    dual vector of that program is the vertex.
    """
    A = _w_rows(n)
    # columns: x (m), t_plus, t_minus
    A = [row + [1, -1] for row in A]
    b = [mpq(Fraction(x).numerator, Fraction(x).denominator) for x in c]
    T, signs = _phase_one(A, b)
    if T.value() != 0:
        raise RuntimeError("W x + t 1 = c is always feasible; phase 1 failed")
    T.drive_out_artificials()
    cost = [0] * (T.ns - 2) + [-1, 1] + [0] * T.m
    T.set_objective(cost)
    status = T.run()
    if status != "optimal":
        raise RuntimeError(f"cross-section LP ended {status}")
    u = T.duals()
    # dual of min -t is max c.u with W^T u <= 0, 1.u = -1; the vertex is y = -u
    y = [-sg * _frac(ui) for sg, ui in zip(signs, u)]
    if sum(y) != 1:
        raise RuntimeError("cross-section normalisation violated")
    return y


def facetize(g: WeightedGraph) -> WeightedGraph | None:
    """A facet normal y minimising <y, g> on the cross-section, or None if g is a member."""
    y = minimize_over_cross_section(g.n, list(g.weights))
    val = sum((a * b for a, b in zip(y, g.weights)), Fraction(0))
    if val >= 0:
        return None
    return exactalg.standard_form(WeightedGraph(g.n, tuple(y)))


# ---------------------------------------------------------------------------
# metric cone / metric polytope


@dataclass(frozen=True)
class MetricReport:
    negative_pairs: tuple[tuple[int, int], ...]
    triangle_violations: tuple[tuple[int, int, int], ...]   # (x, z, via y): d(x,z) > d(x,y) + d(y,z)
    perimeter_violations: tuple[Triangle, ...]
    tight_perimeters: tuple[Triangle, ...]

    @property
    def in_metric_cone(self) -> bool:
        return not self.negative_pairs and not self.triangle_violations

    @property
    def in_metric_polytope(self) -> bool:
        return self.in_metric_cone and not self.perimeter_violations

    @property
    def violations(self) -> list[str]:
        out = [f"d({u},{v}) < 0" for u, v in self.negative_pairs]
        out += [f"d({x},{z}) > d({x},{y}) + d({y},{z})" for x, z, y in self.triangle_violations]
        out += [f"perimeter of {K} > 2" for K in self.perimeter_violations]
        return out


def metric_polytope_contains(d: WeightedGraph) -> MetricReport:
    n = d.n
    if n < 3:
        raise InvalidInputError("metric checks need n >= 3")
    neg = tuple((u, v) for (u, v), w in d.items() if w < 0)
    tri_v, per_v, per_t = [], [], []
    for a, b, c in combinations(range(1, n + 1), 3):
        ab, ac, bc = d.weight(a, b), d.weight(a, c), d.weight(b, c)
        for (x, z, y), lhs, r1, r2 in (((a, b, c), ab, ac, bc), ((a, c, b), ac, ab, bc),
                                       ((b, c, a), bc, ab, ac)):
            if lhs > r1 + r2:
                tri_v.append((x, z, y))
        p = ab + ac + bc
        if p > 2:
            per_v.append((a, b, c))
        elif p == 2:
            per_t.append((a, b, c))
    return MetricReport(neg, tuple(tri_v), tuple(per_v), tuple(per_t))
