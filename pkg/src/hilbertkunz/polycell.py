"""The semi-open polycell ``P = cone \\ U_j (d_j + cone)`` and its lattice counts.

For a monomial ideal with exponents ``d_j`` the colength of its ``n``-th
Frobenius-type power is the number of lattice points in ``n P``.  A point
``x`` lies in ``P`` iff ``sigma_i(x) >= 0`` for all support normals and, for
every shift, some ``sigma_i(x - d_j) < 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial, floor, ceil

import numpy as np

from .cone import SupportHyperplanes, extreme_rays, facet_normals
from .lattice import dot, feasible_point, rank, solve
from .polytope import polytope_volume
from .semigroup import AffineSemigroup, MonomialIdeal, monomial_ideal


class PolycellError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SemiOpenPolycell:
    semigroup: AffineSemigroup
    hyperplanes: SupportHyperplanes
    shifts: tuple

    @property
    def dim(self) -> int:
        return self.semigroup.dim

    @cached_property
    def shift_values(self) -> tuple:
        """``shift_values[j][i] == sigma_i(d_j)``."""
        return tuple(self.hyperplanes.values(s) for s in self.shifts)

    @property
    def is_maximal(self) -> bool:
        return set(self.shifts) == set(self.semigroup.generators)

    @cached_property
    def vertices(self) -> tuple:
        return tuple(_vertices(self))


def build_polycell(M: AffineSemigroup, I: MonomialIdeal | None = None) -> SemiOpenPolycell:
    """Polycell of ``M`` and the ideal ``I`` (default: the maximal ideal).

    Boundedness: the ideal must meet every extreme ray, otherwise the region
    escapes to infinity along that ray.
    """
    if I is None:
        I = monomial_ideal(M)
    if I.is_empty:
        raise PolycellError("unbounded: ideal not m-primary")
    h = M.hyperplanes
    for r in extreme_rays(M):
        zero = [i for i, s in enumerate(h.normals) if dot(s, r) == 0]
        if not any(all(dot(h.normals[i], dj) == 0 for i in zero) for dj in I.exponents):
            raise PolycellError("unbounded: ideal not m-primary")
    return SemiOpenPolycell(M, h, tuple(I.exponents))


def membership(P: SemiOpenPolycell, x, n: int = 1) -> bool:
    """``x in n P``, i.e. ``x / n in P``, evaluated exactly."""
    sx = [dot(s, x) for s in P.hyperplanes.normals]
    if any(v < 0 for v in sx):
        return False
    for sd in P.shift_values:
        if all(v - n * t >= 0 for v, t in zip(sx, sd)):
            return False
    return True


def in_closure(P: SemiOpenPolycell, x) -> bool:
    sx = P.hyperplanes.values(x)
    if any(v < 0 for v in sx):
        return False
    return all(any(v - t <= 0 for v, t in zip(sx, sd)) for sd in P.shift_values)


def _chamber_feasible(forms, signs, d) -> bool:
    cons = [(tuple(-s * c for c in f), Fraction(0), True) for f, s in zip(forms, signs)]
    return feasible_point(cons, d) is not None


def _is_vertex(P: SemiOpenPolycell, x) -> bool:
    # The tangent cone T of the closure at x is a union of chambers of the
    # central arrangement of the active normals.  x is a vertex iff T has no
    # lineality, i.e. the normals whose walls separate T from its complement
    # have full rank.
    normals = P.hyperplanes.normals
    d = P.dim
    sx = P.hyperplanes.values(x)
    cone_active = {i for i, v in enumerate(sx) if v == 0}
    shift_active = []
    for sd in P.shift_values:
        diff = [v - t for v, t in zip(sx, sd)]
        if any(v < 0 for v in diff):
            continue
        act = {i for i, v in enumerate(diff) if v == 0}
        if not act:
            return False
        shift_active.append(act)
    forms_idx = sorted(cone_active.union(*shift_active))
    if not forms_idx:
        return False
    forms = [normals[i] for i in forms_idx]
    pos = {i: k for k, i in enumerate(forms_idx)}

    def inside(signs):
        if any(signs[pos[i]] < 0 for i in cone_active):
            return False
        return all(any(signs[pos[i]] < 0 for i in act) for act in shift_active)

    chambers = {}
    for signs in itertools.product((1, -1), repeat=len(forms)):
        if _chamber_feasible(forms, signs, d):
            chambers[signs] = inside(signs)
    if not any(chambers.values()):
        return False
    essential = set()
    for signs, member in chambers.items():
        for k in range(len(forms)):
            flipped = signs[:k] + (-signs[k],) + signs[k + 1:]
            if flipped in chambers and chambers[flipped] != member:
                essential.add(k)
    return bool(essential) and rank([forms[k] for k in essential]) == d


def _vertices(P: SemiOpenPolycell) -> list[tuple]:
    normals = P.hyperplanes.normals
    planes = {(i, 0) for i in range(len(normals))}
    for sd in P.shift_values:
        planes.update((i, t) for i, t in enumerate(sd))
    planes = sorted(planes)
    found = set()
    for combo in itertools.combinations(planes, P.dim):
        if len({i for i, _ in combo}) < P.dim:
            continue
        x = solve([normals[i] for i, _ in combo], [Fraction(t) for _, t in combo])
        if x is None or x in found:
            continue
        if in_closure(P, x) and _is_vertex(P, x):
            found.add(x)
    return sorted(found)


def vertices(P: SemiOpenPolycell) -> list[tuple]:
    """Vertices of the closure of ``P``, sorted lexicographically."""
    return list(P.vertices)


def vertex_denominator_lcm(P: SemiOpenPolycell) -> int:
    r = 1
    for v in P.vertices:
        for c in v:
            r = np.lcm(r, Fraction(c).denominator)
    return int(r)


def bounding_box(P: SemiOpenPolycell, n: int = 1) -> list[tuple[int, int]]:
    """Integer box containing ``n`` times the closure of ``P``."""
    verts = P.vertices
    return [
        (floor(min(n * v[k] for v in verts)), ceil(max(n * v[k] for v in verts)))
        for k in range(P.dim)
    ]


def _ceil_div(a, b):
    return -((-a) // b)


def count_lattice_points(P: SemiOpenPolycell, n: int) -> int:
    """``#(n P ∩ Z^d)``.

    The box from the scaled vertices is swept one column (last coordinate)
    at a time: along a column the cone is an integer interval and each
    shifted cone removes another interval, so a column contributes the
    size of an interval minus a union of intervals.  All columns are
    processed together as integer arrays.
    """
    if n < 1:
        raise ValueError("dilation must be a positive integer")
    box = bounding_box(P, n)
    d = P.dim
    normals = P.hyperplanes.normals
    big = max(abs(c) for s in normals for c in s) * d * max(max(abs(a), abs(b)) for a, b in box)
    big += n * max((abs(t) for sd in P.shift_values for t in sd), default=0)
    dtype = np.int64 if big < 2**60 else object

    head = [np.arange(lo, hi + 1, dtype=dtype) for lo, hi in box[:-1]]
    if head:
        grid = np.stack([g.ravel() for g in np.meshgrid(*head, indexing="ij")], axis=1)
    else:
        grid = np.zeros((1, 0), dtype=dtype)
    A = np.array([s[:-1] for s in normals], dtype=dtype).reshape(len(normals), d - 1)
    c = [int(s[-1]) for s in normals]
    partial = grid @ A.T  # columns x normals
    tlo, thi = box[-1]
    L = np.full(len(grid), tlo, dtype=dtype)
    H = np.full(len(grid), thi, dtype=dtype)
    ok = np.ones(len(grid), dtype=bool)
    for i, ci in enumerate(c):
        a = partial[:, i]
        if ci > 0:
            L = np.maximum(L, _ceil_div(-a, ci))
        elif ci < 0:
            H = np.minimum(H, a // (-ci))
        else:
            ok &= a >= 0
    ok &= L <= H
    grid_ok = np.nonzero(ok)[0]
    partial, L, H = partial[grid_ok], L[grid_ok], H[grid_ok]
    if len(L) == 0:
        return 0
    los, his = [], []
    for sd in P.shift_values:
        lo_j, hi_j = L.copy(), H.copy()
        empty = np.zeros(len(L), dtype=bool)
        for i, ci in enumerate(c):
            a = partial[:, i] - n * sd[i]
            if ci > 0:
                lo_j = np.maximum(lo_j, _ceil_div(-a, ci))
            elif ci < 0:
                hi_j = np.minimum(hi_j, a // (-ci))
            else:
                empty |= a < 0
        empty |= lo_j > hi_j
        lo_j = np.where(empty, H + 1, lo_j)
        hi_j = np.where(empty, H, hi_j)
        los.append(lo_j)
        his.append(hi_j)
    lo_m = np.stack(los, axis=1)
    hi_m = np.stack(his, axis=1)
    order = np.argsort(lo_m, axis=1, kind="stable")
    lo_m = np.take_along_axis(lo_m, order, axis=1)
    hi_m = np.take_along_axis(hi_m, order, axis=1)
    covered = np.zeros(len(L), dtype=dtype)
    reach = L - 1
    for k in range(lo_m.shape[1]):
        start = np.maximum(lo_m[:, k], reach + 1)
        covered = covered + np.maximum(hi_m[:, k] - start + 1, 0)
        reach = np.maximum(reach, hi_m[:, k])
    return int((H - L + 1 - covered).sum())


def lattice_points(P: SemiOpenPolycell, n: int) -> list[tuple]:
    """The points of ``n P ∩ Z^d`` in lexicographic order (box walk)."""
    ranges = [range(lo, hi + 1) for lo, hi in bounding_box(P, n)]
    return [x for x in itertools.product(*ranges) if membership(P, x, n)]


def count_fractional_points(P: SemiOpenPolycell, n: int) -> int:
    """``#(P ∩ (1/n) Z^d)`` by walking the unscaled box in steps of ``1/n``."""
    ranges = [range(floor(lo * n), ceil(hi * n) + 1) for lo, hi in bounding_box(P, 1)]
    count = 0
    for x in itertools.product(*ranges):
        if membership(P, tuple(Fraction(c, n) for c in x)):
            count += 1
    return count


def hk_value(M: AffineSemigroup, I: MonomialIdeal | None, p: int, e: int) -> int:
    """Hilbert-Kunz value ``l(R / I^[p^e])`` as a lattice count."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    return count_lattice_points(build_polycell(M, I), p**e)


def hilbert_samuel_multiplicity(M: AffineSemigroup, I: MonomialIdeal | None = None) -> Fraction:
    """``d!`` times the volume of the cone minus the Newton polyhedron of ``I``.

    The complement is star-shaped from the origin, so its volume is the sum
    of the pyramids over the compact facets of the Newton polyhedron.
    """
    P = build_polycell(M, I)
    d = M.dim
    rays = extreme_rays(M)
    lifted = [(1,) + tuple(s) for s in P.shifts] + [(0,) + tuple(r) for r in rays]
    vol = Fraction(0)
    for f in facet_normals(lifted):
        a = f[1:]
        if not all(dot(a, r) > 0 for r in rays):
            continue
        face = [s for s in P.shifts if f[0] + dot(a, s) == 0]
        vol += polytope_volume([(0,) * d] + face)
    return vol * factorial(d)
