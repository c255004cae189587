"""Bruns-Gubeladze decomposition of the polycell of the maximal ideal.

The hyperplanes ``sigma_i(x) = z`` (``z`` integer) cut ``R^d`` into cells.
A full-dimensional cell is labelled by ``c = ceil(sigma(x))`` for any point
of its interior and its upper closure is ``{x : c_i - 1 < sigma_i(x) <= c_i}``.
Cells modulo ``Z^d`` (labels modulo ``sigma(Z^d)``) are the conic divisor
classes.  For ``q = p^e``::

    hk(q) = sum over classes of mu(class) * nu_class(q)

where ``nu`` counts lattice points in the dilated upper closure and ``mu``
is the minimal number of generators of the class's conic ideal.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .lattice import dot, feasible_point, solve
from .polycell import (
    SemiOpenPolycell,
    bounding_box,
    build_polycell,
    count_lattice_points,
    membership,
)
from .polytope import halfspace_vertices, polytope_volume
from .semigroup import AffineSemigroup

log = logging.getLogger(__name__)


class BGError(ValueError):
    pass


@dataclass(frozen=True)
class BGCell:
    label: tuple
    interior_witness: tuple


@dataclass(frozen=True)
class ConicClass:
    representative: BGCell
    members_in_P: tuple
    mu: int

    @property
    def multiplicity_in_P(self) -> int:
        return len(self.members_in_P)


def _cell_constraints(normals, label, closed=False):
    cons = []
    for s, c in zip(normals, label):
        cons.append((tuple(Fraction(x) for x in s), Fraction(c), not closed))
        cons.append((tuple(Fraction(-x) for x in s), Fraction(1 - c), not closed))
    return cons


def _scan_cells(P: SemiOpenPolycell) -> list[BGCell]:
    """Open cells ``c_i - 1 < sigma_i < c_i`` contained in ``P``.

    An open cell lies in ``P`` iff every ``c_i >= 1`` and for each shift some
    ``c_i <= sigma_i(d_j)``; nonemptiness needs a strict feasibility check
    because ``sigma(R^d)`` is a proper subspace once there are more than ``d``
    normals.
    """
    normals = P.hyperplanes.normals
    tops = []
    for s in normals:
        tops.append(max(ceil(dot(s, v)) for v in P.vertices))
    cells = []
    for label in itertools.product(*(range(1, t + 1) for t in tops)):
        if not all(any(c <= t for c, t in zip(label, sd)) for sd in P.shift_values):
            continue
        w = feasible_point(_cell_constraints(normals, label), P.dim)
        if w is not None:
            cells.append(BGCell(label, w))
    return cells


def cells_in_polycell(P: SemiOpenPolycell) -> list[BGCell]:
    """Full-dimensional cells tiling ``P`` for the maximal ideal, sorted by label."""
    if not P.is_maximal:
        raise BGError("BG decomposition defined for the maximal monomial ideal")
    return _scan_cells(P)


def equivalent(h, a: tuple, b: tuple) -> bool:
    """``a - b in sigma(Z^d)``."""
    diff = [x - y for x, y in zip(a, b)]
    z = solve(h.normals, diff)
    return z is not None and all(Fraction(c).denominator == 1 for c in z)


def classify_cells(cells, h, M: AffineSemigroup | None = None) -> list[ConicClass]:
    """Group cells by label modulo ``sigma(Z^d)``; representatives are the
    lexicographically smallest labels.  ``mu`` is filled in when ``M`` is given."""
    groups: list[list[BGCell]] = []
    for cell in sorted(cells, key=lambda c: c.label):
        for g in groups:
            if equivalent(h, cell.label, g[0].label):
                g.append(cell)
                break
        else:
            groups.append([cell])
    classes = []
    for g in groups:
        mu = min_generators(ConicClass(g[0], tuple(g), 0), M) if M is not None else 0
        classes.append(ConicClass(g[0], tuple(g), mu))
    if M is not None:
        mus = sorted(c.mu for c in classes)
        if mus != sorted(c.multiplicity_in_P for c in classes):
            # Cell multiplicities in P are only a heuristic for mu.
            log.warning("mu values %s differ from cell multiplicities in P", mus)
    return classes


def nu(cell: BGCell, h, n: int) -> int:
    """``#(n ceil(gamma) ∩ Z^d)`` with ``n(c_i - 1) < sigma_i(x) <= n c_i``."""
    return _count_strip_box(h.normals, [n * (c - 1) + 1 for c in cell.label], [n * c for c in cell.label])


def _count_strip_box(normals, lo, hi) -> int:
    # Integer points with lo_i <= sigma_i(x) <= hi_i; the box comes from the
    # vertices of the closed region, the last coordinate is an interval.
    d = len(normals[0])
    a = [tuple(s) for s in normals] + [tuple(-x for x in s) for s in normals]
    b = list(hi) + [-x for x in lo]
    verts = halfspace_vertices(a, b)
    if not verts:
        return 0
    box = [(floor(min(v[k] for v in verts)), ceil(max(v[k] for v in verts))) for k in range(d)]
    total = 0
    for head in itertools.product(*(range(l, u + 1) for l, u in box[:-1])):
        t_lo, t_hi = box[-1]
        for s, l, u in zip(normals, lo, hi):
            base = dot(s[:-1], head)
            c = s[-1]
            if c > 0:
                t_lo = max(t_lo, -((base - l) // c))
                t_hi = min(t_hi, (u - base) // c)
            elif c < 0:
                t_lo = max(t_lo, -((u - base) // -c))
                t_hi = min(t_hi, (base - l) // -c)
            elif not l <= base <= u:
                t_hi = t_lo - 1
        total += max(0, t_hi - t_lo + 1)
    return total


def min_generators(cls: ConicClass, M: AffineSemigroup) -> int:
    """Minimal number of generators of the class's conic ideal ``C(w)``.

    ``w`` is the interior witness of the representative cell and ``C(w)`` is
    spanned by ``Z^d ∩ (w + cone)``.  An element ``s`` is a minimal generator
    iff ``s - g`` leaves ``C(w)`` for every semigroup generator ``g``, i.e.
    iff ``s - w`` lies in the polycell of the maximal ideal.  So ``mu`` is
    the number of lattice points of ``w + P``, found in the box of ``P``'s
    vertices translated by ``w``.
    """
    P = build_polycell(M)
    w = cls.representative.interior_witness
    box = bounding_box(P, 1)
    ranges = [range(floor(lo + wk), ceil(hi + wk) + 1) for (lo, hi), wk in zip(box, w)]
    count = 0
    for x in itertools.product(*ranges):
        if membership(P, tuple(a - b for a, b in zip(x, w))):
            count += 1
    return count


def cell_volume(cell: BGCell, h) -> Fraction:
    a = [tuple(s) for s in h.normals] + [tuple(-x for x in s) for s in h.normals]
    b = list(cell.label) + [1 - c for c in cell.label]
    return polytope_volume(halfspace_vertices(a, b))


def volume_via_cells(P: SemiOpenPolycell) -> Fraction:
    """Exact volume of ``P`` as the sum of its cells' volumes."""
    return sum((cell_volume(c, P.hyperplanes) for c in _scan_cells(P)), Fraction(0))


@dataclass(frozen=True)
class BGDecomposition:
    polycell: SemiOpenPolycell
    cells: tuple
    classes: tuple

    def hk(self, q: int) -> int:
        h = self.polycell.hyperplanes
        return sum(c.mu * nu(c.representative, h, q) for c in self.classes)

    def report(self, samples=(1, 2, 3, 4)) -> list[dict]:
        h = self.polycell.hyperplanes
        return [
            {
                "label": list(c.representative.label),
                "multiplicity_in_P": c.multiplicity_in_P,
                "mu": c.mu,
                "nu_samples": {str(n): nu(c.representative, h, n) for n in samples},
            }
            for c in self.classes
        ]


def bg_decomposition(M: AffineSemigroup) -> BGDecomposition:
    P = build_polycell(M)
    cells = cells_in_polycell(P)
    classes = classify_cells(cells, P.hyperplanes, M)
    return BGDecomposition(P, tuple(cells), tuple(classes))


def hk_via_bg(M: AffineSemigroup, p: int, e: int) -> int:
    return bg_decomposition(M).hk(p**e)


def check_two_expressions(M: AffineSemigroup, p: int, e: int) -> bool:
    P = build_polycell(M)
    return hk_via_bg(M, p, e) == count_lattice_points(P, p**e)
