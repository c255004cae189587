"""Vertex enumeration and exact volumes of small convex polytopes."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial, gcd
from typing import Sequence

from .cone import facet_normals
from .lattice import determinant, dot, rank, solve


def halfspace_vertices(a: Sequence[Sequence], b: Sequence) -> list[tuple]:
    """Vertices of the bounded polytope ``{x : a x <= b}`` by brute force
    over ``d``-subsets of the bounding hyperplanes."""
    d = len(a[0])
    rows = list(zip(map(tuple, a), b))
    out = set()
    for combo in itertools.combinations(rows, d):
        x = solve([r for r, _ in combo], [rhs for _, rhs in combo])
        if x is None:
            continue
        if all(dot(r, x) <= rhs for r, rhs in rows):
            out.add(x)
    return sorted(out)


def _affine_rank(points) -> int:
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return rank([tuple(a - b for a, b in zip(p, p0)) for p in points[1:]])


def pulling_triangulation(points: Sequence[Sequence]) -> list[tuple]:
    """Triangulate ``conv(points)`` (full-dimensional) into simplices.

    Each simplex is a tuple of ``d + 1`` points.  Faces come from the facet
    incidences of the homogenized point set; every face is triangulated by
    coning its lexicographically smallest vertex over the faces it misses.
    """
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    d = len(pts[0])
    if _affine_rank(pts) < d:
        return []
    den = 1
    for p in pts:
        for c in p:
            den = den * c.denominator // gcd(den, c.denominator)
    lifted = [(den,) + tuple(int(c * den) for c in p) for p in pts]
    facets = facet_normals(lifted)
    incid = [frozenset(i for i, v in enumerate(lifted) if dot(f, v) == 0) for f in facets]

    def faces_of(face: frozenset, k: int):
        found = set()
        for inc in incid:
            sub = face & inc
            if sub != face and len(sub) >= k and _affine_rank([pts[i] for i in sorted(sub)]) == k - 1:
                found.add(sub)
        return [f for f in found if not any(f < g for g in found)]

    def tri(face: frozenset, k: int):
        if len(face) == k + 1:
            return [tuple(sorted(face))]
        v0 = min(face)
        out = []
        for sub in faces_of(face, k):
            if v0 in sub:
                continue
            out.extend((v0,) + s for s in tri(sub, k - 1))
        return out

    return [tuple(pts[i] for i in s) for s in tri(frozenset(range(len(pts))), d)]


def simplex_volume(simplex: Sequence[Sequence]) -> Fraction:
    p0 = simplex[0]
    rows = [tuple(a - b for a, b in zip(p, p0)) for p in simplex[1:]]
    d = len(p0)
    return abs(determinant(rows)) / factorial(d)


def polytope_volume(points: Sequence[Sequence]) -> Fraction:
    """Exact Euclidean volume of ``conv(points)``; zero if not full-dimensional."""
    return sum((simplex_volume(s) for s in pulling_triangulation(points)), Fraction(0))
