"""Exact integer and rational linear algebra.

Python ``int`` is the arbitrary-precision integer and
:class:`fractions.Fraction` the reduced rational; vectors are tuples and
matrices are tuples of row tuples.  Nothing in here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rat = Fraction
Vector = tuple
Matrix = tuple


def as_vector(v: Iterable) -> tuple:
    return tuple(v)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def mat_vec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in a)


def identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def primitive_vector(v: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero direction")
    return tuple(int(x) // g for x in v)


def clear_denominators(v: Sequence) -> tuple:
    """Smallest positive integer multiple of a rational vector, made primitive."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive_vector([int(Fraction(x) * den) for x in v])


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[tuple, tuple]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ m``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots and the entries above each pivot
    reduced into ``[0, pivot)``.  Zero rows collect at the bottom.
    """
    rows = [list(map(int, r)) for r in m]
    if not rows:
        raise ValueError("empty matrix")
    nr, nc = len(rows), len(rows[0])
    u = [list(r) for r in identity(nr)]

    def swap(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        u[i], u[j] = u[j], u[i]

    def addmul(dst, src, k):
        if k:
            rows[dst] = [a - k * b for a, b in zip(rows[dst], rows[src])]
            u[dst] = [a - k * b for a, b in zip(u[dst], u[src])]

    r = 0
    for c in range(nc):
        if r == nr:
            break
        while True:
            nz = [i for i in range(r, nr) if rows[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(rows[i][c]))
            swap(r, best)
            done = True
            for i in range(r + 1, nr):
                if rows[i][c]:
                    addmul(i, r, rows[i][c] // rows[r][c])
                    if rows[i][c]:
                        done = False
            if done:
                break
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
            u[r] = [-a for a in u[r]]
        piv = rows[r][c]
        for i in range(r):
            addmul(i, r, rows[i][c] // piv)
        r += 1
    return tuple(map(tuple, rows)), tuple(map(tuple, u))


def determinant(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def _row_reduce(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in row] for row in m]
    pivots: list[int] = []
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(_row_reduce(m)[1])


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[tuple]:
    """Rational basis of ``{x : m x = 0}``."""
    if ncols is None:
        ncols = len(m[0])
    if not m:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    red, pivots = _row_reduce(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple | None:
    """Unique solution of ``a x = b`` (``a`` may be overdetermined); ``None`` if
    inconsistent or not unique."""
    ncols = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = _row_reduce(aug)
    if ncols in pivots or len(pivots) != ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def is_full_lattice(generators: Sequence[Sequence[int]], d: int) -> bool:
    """True iff the integer span of ``generators`` is all of ``Z^d``."""
    if not generators:
        return False
    h, _ = hermite_normal_form(generators)
    diag = []
    for i in range(min(d, len(h))):
        diag.append(h[i][i])
    return len(diag) == d and all(x == 1 for x in diag)


# --- linear feasibility -------------------------------------------------------

Constraint = tuple  # (coeffs, rhs, strict): coeffs . x <= rhs, or < when strict


def _normalize(c: Constraint) -> Constraint:
    a, b, s = c
    scale = max((abs(x) for x in a), default=0)
    if scale == 0:
        return (tuple(Fraction(0) for _ in a), Fraction(b), s)
    return (tuple(Fraction(x) / scale for x in a), Fraction(b) / scale, s)


def _eliminate(cons: list[Constraint], k: int) -> list[Constraint]:
    """Fourier-Motzkin elimination of variable ``k``."""
    lower, upper, rest = [], [], []
    for c in cons:
        (lower if c[0][k] < 0 else upper if c[0][k] > 0 else rest).append(c)
    out = set(rest)
    for al, bl, sl in lower:
        for au, bu, su in upper:
            fu, fl = -al[k], au[k]
            a = tuple(fu * x + fl * y for x, y in zip(au, al))
            out.add(_normalize((a, fu * bu + fl * bl, sl or su)))
    return list(out)


def feasible_point(constraints: Iterable[Constraint], dim: int) -> tuple | None:
    """A rational point satisfying every ``(a, b, strict)`` constraint, or ``None``.

    Exact Fourier-Motzkin elimination; back substitution picks interval
    midpoints so witnesses sit in the relative interior of what is left.
    """
    stages = [list({_normalize(c) for c in constraints})]
    for k in range(dim - 1, -1, -1):
        stages.append(_eliminate(stages[-1], k))
    for a, b, s in stages[-1]:
        if (s and not 0 < b) or (not s and not 0 <= b):
            return None
    x = [Fraction(0)] * dim
    for k in range(dim):
        cons = stages[dim - 1 - k]
        lo, lo_strict, hi, hi_strict = None, False, None, False
        for a, b, s in cons:
            if a[k] == 0:
                continue
            rest = b - sum(a[i] * x[i] for i in range(k))
            bound = rest / a[k]
            if a[k] > 0:
                if hi is None or bound < hi or (bound == hi and s):
                    hi, hi_strict = bound, s
            else:
                if lo is None or bound > lo or (bound == lo and s):
                    lo, lo_strict = bound, s
        if lo is not None and hi is not None:
            if lo > hi or (lo == hi and (lo_strict or hi_strict)):
                return None
            x[k] = (lo + hi) / 2
        elif lo is not None:
            x[k] = lo + 1
        elif hi is not None:
            x[k] = hi - 1
    return tuple(x)
