"""Support hyperplanes, standard embedding and extreme rays of a pointed cone.

Facets are found with the double description method: the facet normals of
``cone(G)`` are the extreme rays of the dual cone ``{y : g . y >= 0}``, and
those are built up one inequality at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import (
    clear_denominators,
    dot,
    feasible_point,
    primitive_vector,
    rank,
    solve,
)


def _initial_rays(rows, basis_idx, d):
    # Columns of B^-1 for the chosen independent rows B.
    rays = []
    for k in range(d):
        e = [Fraction(int(i == k)) for i in range(d)]
        y = solve([rows[i] for i in basis_idx], e)
        rays.append(clear_denominators(y))
    return rays


def facet_normals(vectors: Sequence[Sequence[int]]) -> list[tuple]:
    """Primitive inner normals of the facets of ``cone(vectors)``.

    ``vectors`` must span ``R^d``.  The result is sorted lexicographically
    and irredundant by construction.
    """
    rows = [tuple(map(int, v)) for v in vectors]
    d = len(rows[0])
    if rank(rows) != d:
        raise ValueError("generators do not span the ambient space")
    basis_idx: list[int] = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in basis_idx] + [r]) > len(basis_idx):
            basis_idx.append(i)
        if len(basis_idx) == d:
            break
    processed = list(basis_idx)
    rays = _initial_rays(rows, basis_idx, d)

    def tight(ray):
        return frozenset(i for i in processed if dot(rows[i], ray) == 0)

    for i in range(len(rows)):
        if i in basis_idx:
            continue
        vals = [dot(rows[i], r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
        kept = [r for r, v in zip(rays, vals) if v >= 0]
        zsets = {r: tight(r) for r in rays}
        new = []
        if d >= 2:
            for rp in pos:
                vp = dot(rows[i], rp)
                for rn, vn in neg:
                    common = zsets[rp] & zsets[rn]
                    if rank([rows[j] for j in common] or [(0,) * d]) != d - 2:
                        continue
                    # Adjacent: no third ray is tight on all of ``common``.
                    if any(common <= zsets[r] for r in rays if r not in (rp, rn)):
                        continue
                    new.append(primitive_vector([vp * a - vn * b for a, b in zip(rn, rp)]))
        processed.append(i)
        rays = list(dict.fromkeys(kept + new))
    return sorted(set(rays))


@dataclass(frozen=True)
class SupportHyperplanes:
    """Irredundant primitive facet normals ``sigma_1..sigma_l`` of a cone."""

    normals: tuple

    @property
    def count(self) -> int:
        return len(self.normals)

    @property
    def dim(self) -> int:
        return len(self.normals[0])

    def values(self, x) -> tuple:
        return tuple(dot(s, x) for s in self.normals)

    def grading(self) -> tuple:
        """Sum of the normals; strictly positive on the cone minus the origin."""
        return tuple(sum(col) for col in zip(*self.normals))


def support_hyperplanes(M) -> SupportHyperplanes:
    return SupportHyperplanes(tuple(facet_normals(M.generators)))


def standard_embedding(h: SupportHyperplanes, x) -> tuple:
    """``x -> (sigma_1(x), ..., sigma_l(x))`` with exact arithmetic."""
    return h.values(x)


def extreme_rays(M) -> list[tuple]:
    """Primitive generators of the one-dimensional faces, sorted."""
    h = M.hyperplanes
    d = M.dim
    rays = set()
    for g in M.generators:
        zero = [s for s in h.normals if dot(s, g) == 0]
        if zero and rank(zero) == d - 1:
            rays.add(primitive_vector(g))
        elif d == 1:
            rays.add(primitive_vector(g))
    return sorted(rays)


def in_cone_of(rays: Sequence[Sequence[int]], x) -> bool:
    """Exact feasibility of ``x = sum lambda_r r`` with ``lambda >= 0``."""
    n = len(rays)
    d = len(x)
    cons = []
    for k in range(d):
        a = tuple(Fraction(r[k]) for r in rays)
        cons.append((a, Fraction(x[k]), False))
        cons.append((tuple(-c for c in a), -Fraction(x[k]), False))
    for j in range(n):
        cons.append((tuple(Fraction(-int(i == j)) for i in range(n)), Fraction(0), False))
    return feasible_point(cons, n) is not None
