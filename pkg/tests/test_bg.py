import itertools
from math import lcm
from fractions import Fraction as F

import pytest

from hilbertkunz import (
    BGError,
    bg_decomposition,
    build_polycell,
    cells_in_polycell,
    classify_cells,
    count_lattice_points,
    hk_via_bg,
    interpolate,
    hk_coefficients,
    monomial_ideal,
    volume_via_cells,
)
from hilbertkunz.bg import cell_volume, equivalent, min_generators, nu
from hilbertkunz.polycell import membership
from hilbertkunz.polytope import halfspace_vertices

MAXIMAL_2D = ["orthant2", "regcone2", "regcone3", "regcone4", "toricnonproj"]


def test_cells_examples(polycells):
    cells = cells_in_polycell(polycells["orthant2"])
    assert [c.label for c in cells] == [(1, 1)]
    assert len(cells_in_polycell(polycells["regcone2"])) == 3
    toric = cells_in_polycell(polycells["toricnonproj"])
    assert sum(cell_volume(c, polycells["toricnonproj"].hyperplanes) for c in toric) == F(5, 3)


def test_cells_need_maximal_ideal(semigroups):
    M = semigroups["orthant2"]
    P = build_polycell(M, monomial_ideal(M, [[2, 0], [0, 2]]))
    with pytest.raises(BGError, match="maximal monomial ideal"):
        cells_in_polycell(P)


def test_classes(semigroups, polycells):
    h = polycells["orthant2"].hyperplanes
    assert len(classify_cells(cells_in_polycell(polycells["orthant2"]), h)) == 1
    dec = bg_decomposition(semigroups["regcone2"])
    assert sorted(c.multiplicity_in_P for c in dec.classes) == [1, 2]
    assert sorted(c.mu for c in dec.classes) == [1, 2]
    assert len(bg_decomposition(semigroups["regcone4"]).classes) == 4


@pytest.mark.parametrize("g", [2, 3, 4])
def test_class_count_regcone(g, semigroups):
    assert len(bg_decomposition(semigroups[f"regcone{g}"]).classes) == g


def test_min_generators_golden(semigroups):
    # regcone g=2: the class of the cell with witness of type (2/3, 2/3) is principal
    dec = bg_decomposition(semigroups["regcone2"])
    assert {c.representative.label: c.mu for c in dec.classes} == {(1, 1): 1, (1, 2): 2}
    dec = bg_decomposition(semigroups["regcone3"])
    assert {c.representative.label: c.mu for c in dec.classes} == {(1, 1): 2, (1, 2): 1, (1, 3): 3}
    orth = bg_decomposition(semigroups["orthant2"])
    assert [min_generators(c, semigroups["orthant2"]) for c in orth.classes] == [1]


def test_nu_examples(semigroups, polycells):
    orth = cells_in_polycell(polycells["orthant2"])[0]
    h = polycells["orthant2"].hyperplanes
    assert [nu(orth, h, n) for n in range(1, 7)] == [n * n for n in range(1, 7)]
    P = polycells["regcone2"]
    assert sum(nu(c, P.hyperplanes, 2) for c in cells_in_polycell(P)) == count_lattice_points(P, 2) == 6


@pytest.mark.parametrize("name", MAXIMAL_2D + ["S1", "S2"])
def test_nu_at_one_detects_trivial_class(name, polycells):
    # a lattice point in an upper closure has integral sigma values
    P = polycells[name]
    h = P.hyperplanes
    zero = (0,) * h.count
    for c in cells_in_polycell(P):
        trivial = equivalent(h, c.label, zero)
        assert nu(c, h, 1) == (1 if trivial else 0)


def test_hk_via_bg_examples(semigroups):
    assert hk_via_bg(semigroups["orthant2"], 2, 3) == 64
    assert hk_via_bg(semigroups["regcone2"], 3, 1) == 13
    assert hk_via_bg(semigroups["toricnonproj"], 2, 2) == 26


@pytest.mark.parametrize("name", MAXIMAL_2D + ["S1", "S2"])
def test_two_expressions(name, semigroups, polycells):
    dec = bg_decomposition(semigroups[name])
    P = polycells[name]
    top = 12 if P.dim == 2 else 6
    for n in range(1, top + 1):
        assert dec.hk(n) == count_lattice_points(P, n)


def test_volume_via_cells(polycells):
    assert volume_via_cells(polycells["orthant2"]) == 1
    assert volume_via_cells(polycells["regcone2"]) == F(3, 2)
    assert volume_via_cells(polycells["S1"]) == F(7, 4)


@pytest.mark.parametrize("name", ["regcone2", "regcone3", "toricnonproj"])
def test_cells_disjoint(name, polycells):
    P = polycells[name]
    h = P.hyperplanes
    cells = cells_in_polycell(P)
    grid = [F(k, 7) for k in range(0, 28)]
    for x in itertools.product(grid, repeat=2):
        vals = h.values(x)
        inside = [c for c in cells if all(ci - 1 < v < ci for ci, v in zip(c.label, vals))]
        assert len(inside) <= 1
        if inside:
            assert membership(P, x)


@pytest.mark.parametrize("name", ["regcone3", "toricnonproj", "S1"])
def test_nu_class_invariant_and_quasipolynomial(name, semigroups):
    dec = bg_decomposition(semigroups[name])
    h = dec.polycell.hyperplanes
    d = dec.polycell.dim
    for cls in dec.classes:
        ref = [nu(cls.representative, h, n) for n in range(1, 9)]
        for other in cls.members_in_P:
            assert [nu(other, h, n) for n in range(1, 9)] == ref
        a = [tuple(x) for x in h.normals] + [tuple(-c for c in x) for x in h.normals]
        b = list(cls.representative.label) + [1 - c for c in cls.representative.label]
        period = lcm(*(F(c).denominator for v in halfspace_vertices(a, b) for c in v))
        ns = range(1, period * (d + 2) + 1)
        qp = interpolate([(n, nu(cls.representative, h, n)) for n in ns], d, period)
        hk_coefficients(qp)


def test_report_shape(semigroups):
    rep = bg_decomposition(semigroups["regcone2"]).report()
    assert rep[0] == {
        "label": [1, 1],
        "multiplicity_in_P": 1,
        "mu": 1,
        "nu_samples": {"1": 1, "2": 2, "3": 5, "4": 8},
    }
