"""Exact rational linear algebra.

Everything here is exact: Fractions or Python integers in the core routines,
and a modular-arithmetic fast path (:func:`rank_mod_p`) that is only trusted
when a Hadamard bound shows the prime cannot divide any nonzero minor.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInputError, SingularMatrixError
from .graphcore import WeightedGraph

#: Largest prime below 2**31; products of two residues fit in int64.
PRIME = 2_147_483_647


class RationalMatrix:
    """Dense matrix of reduced Fractions.  Immutable by convention."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Iterable[Iterable]):
        entries = tuple(tuple(Fraction(x) if not isinstance(x, Fraction) else x for x in row)
                        for row in (data.tolist() if isinstance(data, np.ndarray) else data))
        if not entries or not entries[0]:
            raise InvalidInputError("matrix dimensions must be positive")
        width = len(entries[0])
        if any(len(r) != width for r in entries):
            raise InvalidInputError("ragged matrix rows")
        self.entries = entries
        self.rows = len(entries)
        self.cols = width

    @classmethod
    def identity(cls, k: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(k)] for i in range(k)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.entries))

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise InvalidInputError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.entries))
            return RationalMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                                   for r in self.entries])
        vec = [Fraction(x) for x in other]
        if len(vec) != self.cols:
            raise InvalidInputError("dimension mismatch in matrix-vector product")
        return [sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.entries]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _as_matrix(A) -> RationalMatrix:
    return A if isinstance(A, RationalMatrix) else RationalMatrix(A)


def _integer_rows(A) -> list[list[int]]:
    """Rows scaled by the lcm of their denominators (rank-preserving)."""
    if isinstance(A, np.ndarray) and A.dtype.kind in "iub":
        return A.astype(object).tolist()
    out = []
    for row in _as_matrix(A).entries:
        m = lcm(*(x.denominator for x in row))
        out.append([int(x * m) for x in row])
    return out


def rank_exact(A) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    M = [r for r in _integer_rows(A) if any(r)]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, nrows):
            a = M[i][c]
            row_i, row_r = M[i], M[r]
            M[i] = [(p * row_i[j] - a * row_r[j]) // prev if j > c else 0
                    for j in range(ncols)]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def hadamard_bound_sq(A: np.ndarray) -> int:
    """Square of an upper bound on |minor| over all square submatrices of A."""
    sq = sorted((int(x) for x in (A.astype(object) ** 2).sum(axis=1)), reverse=True)
    k = min(A.shape)
    out = 1
    for s in sq[:k]:
        out *= max(s, 1)
    return out


def rank_mod_p(A: np.ndarray, p: int = PRIME) -> int:
    """Rank of an integer matrix over GF(p).  Always <= rank over Q."""
    M = np.mod(np.asarray(A, dtype=np.int64), p)
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        col = M[r + 1:, c].copy()
        if col.any():
            M[r + 1:] = (M[r + 1:] - (col[:, None] * M[r][None, :]) % p) % p
        r += 1
        if r == nrows:
            break
    return r


def rank(A) -> int:
    """Exact rank over the rationals.

    Integer arrays whose Hadamard bound is below ``PRIME`` go through the
    modular routine, which is then exact; everything else uses Bareiss.
    """
    if isinstance(A, np.ndarray) and A.dtype.kind in "iub" and A.size:
        if hadamard_bound_sq(A) < PRIME * PRIME:
            return rank_mod_p(A)
    return rank_exact(A)


def rank_at_least_batched(blocks: np.ndarray, target: int, p: int = PRIME,
                          chunk: int = 2048) -> np.ndarray:
    """For a stack of integer matrices (B x r x c), test rank >= target over GF(p).

    Vectorised elimination across the batch.  Callers are responsible for
    the Hadamard condition that makes the modular answer exact.
    """
    if blocks.shape[0] > chunk:
        return np.concatenate([rank_at_least_batched(blocks[i:i + chunk], target, p, chunk)
                               for i in range(0, blocks.shape[0], chunk)])
    M = np.mod(blocks.astype(np.int64), p)
    B, nrows, ncols = M.shape
    rank_ = np.zeros(B, dtype=np.int64)
    used = np.zeros((B, nrows), dtype=bool)
    ar = np.arange(B)
    for c in range(ncols):
        cand = (M[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        idx = ar[has]
        pr = piv[has]
        used[idx, pr] = True
        rank_[idx] += 1
        prow = M[idx, pr]                      # k x ncols
        pval = prow[:, c][:, None]             # k x 1
        fac = M[idx, :, c].copy()              # k x nrows
        fac[np.arange(idx.size), pr] = 0
        sub = M[idx]
        # fraction-free update: row <- pval*row - fac*prow  (mod p)
        sub = (sub * pval[:, :, None] % p - fac[:, :, None] * prow[:, None, :] % p) % p
        sub[np.arange(idx.size), pr] = prow
        M[idx] = sub
        if (rank_ >= target).all():
            break
    return rank_ >= target


def solve(A, b) -> list[Fraction] | None:
    """An exact solution of A x = b, or None when the system is inconsistent."""
    A = _as_matrix(A)
    b = [Fraction(x) for x in b]
    if len(b) != A.rows:
        raise InvalidInputError("right-hand side length does not match matrix rows")
    M = [list(r) + [bi] for r, bi in zip(A.entries, b)]
    pivots = _rref(M, A.cols)
    for row in M[len(pivots):]:
        if row[-1] != 0:
            return None
    x = [Fraction(0)] * A.cols
    for i, c in enumerate(pivots):
        x[c] = M[i][-1]
    return x


def _rref(M: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place reduced row echelon form on the first ``ncols`` columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return pivots


def invert(A) -> RationalMatrix:
    A = _as_matrix(A)
    k = A.rows
    if A.cols != k:
        raise InvalidInputError(f"cannot invert a non-square {A.rows}x{A.cols} matrix")
    M = [list(r) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(A.entries)]
    if len(_rref(M, k)) < k:
        raise SingularMatrixError("matrix is singular")
    inv = RationalMatrix([row[k:] for row in M])
    assert inv @ A == RationalMatrix.identity(k)
    return inv


def nullspace(A) -> list[list[Fraction]]:
    """Basis of the right null space {x : A x = 0}."""
    A = _as_matrix(A)
    M = [list(r) for r in A.entries]
    pivots = _rref(M, A.cols)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * A.cols
        x[f] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -M[i][f]
        basis.append(x)
    return basis


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise InvalidInputError("zero vector has no primitive form")
    return tuple(x // g for x in vec)


def standard_form(y: WeightedGraph) -> WeightedGraph:
    """Positive rescaling of ``y`` to integers with gcd 1.  The sign is kept."""
    if y.is_zero():
        raise InvalidInputError("the zero vector has no standard form")
    m = lcm(*(w.denominator for w in y.weights))
    return WeightedGraph(y.n, primitive([int(w * m) for w in y.weights]))


def is_standard_form(y: WeightedGraph) -> bool:
    if not y.is_integral() or y.is_zero():
        return False
    g = 0
    for w in y.weights:
        g = gcd(g, w.numerator)
    return g == 1


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with exact coefficients, lowest degree first."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        c = [Fraction(x) for x in self.coefficients]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c) if c else (Fraction(0),))

    @property
    def degree(self) -> int:
        if self.coefficients == (0,):
            return -1
        return len(self.coefficients) - 1

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __str__(self):
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def factor_degrees(self) -> tuple[int, ...]:
        """Degrees (with multiplicity) of the irreducible factors over Q."""
        import sympy

        t = sympy.Symbol("t")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** k
                   for k, c in enumerate(self.coefficients))
        _, factors = sympy.factor_list(expr, t)
        return tuple(sorted(sympy.degree(f, t) for f, mult in factors for _ in range(mult)))


def adjacency_matrix(y: WeightedGraph) -> list[list[Fraction]]:
    """The n x n symmetric zero-diagonal matrix with entries y({i, j})."""
    n = y.n
    M = [[Fraction(0)] * n for _ in range(n)]
    for (u, v), w in y.items():
        M[u - 1][v - 1] = M[v - 1][u - 1] = w
    return M


def char_poly(y: WeightedGraph) -> Polynomial:
    """det(tI - M) for the weighted adjacency matrix M, via Faddeev-LeVerrier."""
    A = adjacency_matrix(y)
    n = len(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        AM = [[sum((A[i][l] * Mk[l][j] for l in range(n)), Fraction(0)) for j in range(n)]
              for i in range(n)]
        for i in range(n):
            AM[i][i] += coeffs[n - k + 1]
        Mk = AM
        tr = sum((sum((A[i][l] * Mk[l][i] for l in range(n)), Fraction(0)) for i in range(n)),
                 Fraction(0))
        coeffs[n - k] = -tr / k
    return Polynomial(tuple(coeffs))
