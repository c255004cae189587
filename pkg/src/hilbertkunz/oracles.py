"""Independent ground truth for Hilbert-Kunz values.

``semigroup_bfs_hk`` counts monomials of ``k[M]`` outside ``I^[q]`` using
only semigroup arithmetic.  ``hk_hypersurface`` computes the length of
``k[x_1..x_s] / (x_1^q, .., x_s^q, f)`` over ``F_p`` as

    q^s - rank(multiplication by f on k[x] / (x_i^q)),

which follows from ``0 -> f A -> A -> A / f A -> 0`` with
``A = k[x] / (x_i^q)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import floor
from typing import Iterable, Sequence

import numpy as np

from .lattice import dot
from .polycell import build_polycell
from .semigroup import AffineSemigroup, MonomialIdeal, enumerate_below, is_normal

DENSE_LIMIT = 10**7


class OracleError(ValueError):
    pass


class InfeasibleSize(OracleError):
    """The requested computation exceeds the size guard."""


def semigroup_bfs_hk(M: AffineSemigroup, I: MonomialIdeal | None, p: int, e: int) -> int:
    """``l(R / I^[q])`` by breadth-first enumeration of ``M``.

    Every monomial outside ``I^[q]`` has grading at most the largest grading
    of a scaled polycell vertex, so the BFS ball of that radius (plus one
    generator step) contains all of them, and ``x - q d_j`` can be tested for
    membership in ``M`` by lookup in the same ball.
    """
    if not is_normal(M):
        raise OracleError("semigroup is not normal; BFS count need not match the lattice count")
    q = p**e
    P = build_polycell(M, I)
    w = M.grading
    bound = max(floor(q * dot(w, v)) for v in P.vertices) + max(dot(w, g) for g in M.generators)
    ball = enumerate_below(M, w, bound)
    shifts = [tuple(q * c for c in dj) for dj in P.shifts]
    count = 0
    for x in ball:
        if all(tuple(a - b for a, b in zip(x, s)) not in ball for s in shifts):
            count += 1
    return count


@dataclass(frozen=True)
class FpMatrix:
    """Sparse matrix over ``F_p``: ``rows[i]`` maps column index to entry."""

    nrows: int
    ncols: int
    p: int
    rows: tuple = field(default=())

    @classmethod
    def from_dense(cls, m: Sequence[Sequence[int]], p: int) -> "FpMatrix":
        nr = len(m)
        nc = len(m[0]) if nr else 0
        rows = tuple({j: v % p for j, v in enumerate(row) if v % p} for row in m)
        return cls(nr, nc, p, rows)

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                a[i, j] = v
        return a


def _dense_rank(a: np.ndarray, p: int) -> int:
    a = a % p
    nr, nc = a.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        below = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if len(below):
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def _sparse_rank(rows: Iterable[dict], p: int) -> int:
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], -1, p)
                pivots[c] = {j: v * inv % p for j, v in row.items()}
                break
            f = row[c]
            for j, v in pivots[c].items():
                nv = (row.get(j, 0) - f * v) % p
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return len(pivots)


def fp_rank(m: FpMatrix) -> int:
    """Rank over ``F_p`` by Gaussian elimination, pivoting in column order."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if m.nrows * m.ncols <= DENSE_LIMIT:
        return _dense_rank(m.to_dense(), m.p)
    return _sparse_rank(m.rows, m.p)


@dataclass(frozen=True)
class HypersurfacePresentation:
    """``f = sum c * x^exp`` over ``F_p`` in ``s`` variables."""

    s: int
    terms: tuple
    p: int

    @classmethod
    def create(cls, s: int, terms: Iterable[tuple[Sequence[int], int]], p: int) -> "HypersurfacePresentation":
        merged: dict[tuple, int] = {}
        for exp, c in terms:
            exp = tuple(int(a) for a in exp)
            if len(exp) != s or any(a < 0 for a in exp):
                raise OracleError(f"bad exponent {list(exp)} for {s} variables")
            merged[exp] = (merged.get(exp, 0) + int(c)) % p
        kept = tuple(sorted((e, c) for e, c in merged.items() if c))
        if not kept:
            raise OracleError("f vanishes mod p")
        return cls(s, kept, p)

    @classmethod
    def from_json(cls, data: dict) -> "HypersurfacePresentation":
        return cls.create(int(data["vars"]), [(t["exp"], t["c"]) for t in data["f"]], int(data["p"]))


def multiplication_blocks(f: HypersurfacePresentation, q: int) -> list[FpMatrix]:
    """Matrices of ``g -> f g`` on ``k[x] / (x_i^q)``, split by total degree
    when ``f`` is homogeneous (one block otherwise)."""
    degs = {sum(e) for e, _ in f.terms}
    homogeneous = len(degs) == 1
    monos = list(itertools.product(range(q), repeat=f.s))
    groups: dict[int, list[tuple]] = {}
    for m in monos:
        groups.setdefault(sum(m) if homogeneous else 0, []).append(m)
    index = {k: {m: i for i, m in enumerate(ms)} for k, ms in groups.items()}
    shift = degs.pop() if homogeneous else 0
    blocks = []
    for k, src in sorted(groups.items()):
        tgt = index.get(k + shift, {})
        rows = []
        for m in src:
            row: dict[int, int] = {}
            for exp, c in f.terms:
                prod = tuple(a + b for a, b in zip(m, exp))
                if max(prod) >= q:
                    continue
                j = tgt[prod]
                row[j] = (row.get(j, 0) + c) % f.p
            rows.append({j: v for j, v in row.items() if v})
        blocks.append(FpMatrix(len(src), len(tgt), f.p, tuple(rows)))
    return blocks


def hk_hypersurface(f: HypersurfacePresentation, e: int) -> int:
    """Length of ``R / m^[p^e]`` for ``R = F_p[x_1..x_s] / (f)``."""
    q = f.p**e
    if q**f.s > DENSE_LIMIT:
        raise InfeasibleSize(f"basis size q^s = {q**f.s} exceeds the limit {DENSE_LIMIT}")
    return q**f.s - sum(fp_rank(b) for b in multiplication_blocks(f, q))
