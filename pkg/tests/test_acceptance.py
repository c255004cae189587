"""Acceptance suite: ten exact checks of the library against known closed forms.

Each test prints one ``criterion N: PASS`` or ``criterion N: FAIL`` line
(visible with ``pytest -s`` or in ``-v`` output).  Run directly with
``python3 tests/test_acceptance.py`` for the summary alone.
"""

import time
from fractions import Fraction as F

import pytest

from hilbertkunz import (
    HypersurfacePresentation,
    bg_decomposition,
    build_polycell,
    count_lattice_points,
    ehrhart_quasipolynomial,
    hilbert_samuel_multiplicity,
    hk_coefficients,
    hk_form,
    hk_value,
    hk_hypersurface,
    new_semigroup,
    semigroup_bfs_hk,
    volume_via_cells,
)
from hilbertkunz.catalog import HYPERSURFACES, SEMIGROUPS, orthant, rational_normal_cone
from hilbertkunz.polycell import vertex_denominator_lcm


def record(n, failures, detail="", capsys=None):
    line = f"criterion {n}: {'PASS' if not failures else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += " " + "; ".join(failures[:5])
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert not failures, line


def powers(p, bound):
    q = p
    while q <= bound:
        yield q
        q *= p


def criterion_1():
    bad = []
    t0 = time.perf_counter()
    for d in (1, 2, 3):
        M = new_semigroup(orthant(d))
        for p in (2, 3, 5):
            for e in range(1, (5 if d <= 2 else 3) + 1):
                got = hk_value(M, None, p, e)
                if got != (p**e) ** d:
                    bad.append(f"d={d} p={p} e={e}: {got}")
    dt = time.perf_counter() - t0
    if dt >= 30:
        bad.append(f"took {dt:.1f}s")
    return bad, f"{dt:.1f}s"


def criterion_2():
    bad = []
    t0 = time.perf_counter()
    for g in (2, 3, 4, 5):
        P = build_polycell(new_semigroup(rational_normal_cone(g)))
        for p in (2, 3, 5, 7):
            for e in range(1, 5):
                q = p**e
                v = (q - 1) % g
                want = F(g + 1, 2) * q * q + F(-v * v + v * g - g + 1, 2)
                got = count_lattice_points(P, q)
                if got != want:
                    bad.append(f"g={g} q={q}: {got} != {want}")
    dt = time.perf_counter() - t0
    if dt >= 60:
        bad.append(f"took {dt:.1f}s")
    return bad, f"{dt:.1f}s"


def criterion_3():
    bad = []
    P = build_polycell(new_semigroup(SEMIGROUPS["toricnonproj"]))
    for p in (2, 3, 5, 7, 11):
        for e in range(1, 5):
            q = p**e
            want = F(5, 3) * q * q - (0 if p == 3 else F(2, 3))
            got = count_lattice_points(P, q)
            if got != want:
                bad.append(f"q={q}: {got} != {want}")
    return bad, ""


def criterion_4():
    bad = []
    t0 = time.perf_counter()
    S1 = build_polycell(new_semigroup(SEMIGROUPS["S1"]))
    S2 = build_polycell(new_semigroup(SEMIGROUPS["S2"]))

    def s1(q):
        base = F(7, 4) * q**3 - F(1, 8) * q**2 - F(1, 4) * q
        return base if q % 2 == 0 else base - F(3, 8)

    def s2(q):
        base = F(20, 9) * q**3 - F(1, 3) * q**2
        return base + {0: 0, 1: F(-8, 9), 2: F(-4, 9)}[q % 3]

    cases = [(S1, s1, q, "S1") for q in powers(2, 16)]
    cases += [(S1, s1, q, "S1") for p in (3, 5, 7) for q in powers(p, 350)]
    cases += [(S2, s2, q, "S2") for q in powers(3, 27)]
    cases += [(S2, s2, q, "S2") for p in (2, 5, 7) for q in powers(p, 350)]
    for P, form, q, name in cases:
        got = count_lattice_points(P, q)
        if got != form(q):
            bad.append(f"{name} q={q}: {got} != {form(q)}")
    dt = time.perf_counter() - t0
    if dt >= 600:
        bad.append(f"took {dt:.1f}s")
    return bad, f"{len(cases)} values, {dt:.1f}s"


def criterion_5():
    bad = []
    for name, gens in SEMIGROUPS.items():
        P = build_polycell(new_semigroup(gens))
        qp = ehrhart_quasipolynomial(P)
        top = vertex_denominator_lcm(P) * (P.dim + 2)
        for n in range(top + 1, top + 4):
            if qp(n) != count_lattice_points(P, n):
                bad.append(f"{name} n={n}")
        if vertex_denominator_lcm(P) % qp.period:
            bad.append(f"{name}: period {qp.period}")
    return bad, f"{len(SEMIGROUPS)} semigroups"


def criterion_6():
    bad = []
    for name, gens in SEMIGROUPS.items():
        M = new_semigroup(gens)
        P = build_polycell(M)
        try:
            alpha, _ = hk_coefficients(ehrhart_quasipolynomial(P))
        except ValueError as exc:
            bad.append(f"{name}: {exc}")
            continue
        if alpha != volume_via_cells(P):
            bad.append(f"{name}: alpha {alpha} != volume")
        e_max = 2 if M.dim == 2 else 1
        alphas = {hk_form(M, p, e_max).alpha for p in (2, 3, 5, 7)}
        if alphas != {alpha}:
            bad.append(f"{name}: alpha varies with p {sorted(alphas)}")
    return bad, ""


def criterion_7():
    bad = []
    for name in ("regcone2", "regcone3", "regcone4", "toricnonproj", "orthant2", "orthant3"):
        M = new_semigroup(SEMIGROUPS[name])
        P = build_polycell(M)
        dec = bg_decomposition(M)
        for p in (2, 3, 5):
            for e in range(1, 4):
                q = p**e
                if dec.hk(q) != count_lattice_points(P, q):
                    bad.append(f"{name} q={q}")
    dec = bg_decomposition(new_semigroup(SEMIGROUPS["regcone2"]))
    if len(dec.classes) != 2 or sorted(c.mu for c in dec.classes) != [1, 2]:
        bad.append("regcone2 class data")
    return bad, "regcone2: 2 classes, mu {1, 2}" if not bad else ""


def criterion_8():
    bad = []
    for name, gens in SEMIGROUPS.items():
        M = new_semigroup(gens)
        P = build_polycell(M)
        for p in (2, 3):
            for e in range(1, 4):
                if semigroup_bfs_hk(M, None, p, e) != count_lattice_points(P, p**e):
                    bad.append(f"{name} p={p} e={e}")
    return bad, ""


def criterion_9():
    bad = []
    t0 = time.perf_counter()
    kunz = HYPERSURFACES["exKunz"]
    for p, want in ((7, [25, 193]), (5, [16, 97])):
        f = HypersurfacePresentation.from_json({**kunz, "p": p})
        got = [hk_hypersurface(f, e) for e in (1, 2)]
        if got != want:
            bad.append(f"exKunz p={p}: {got}")
    monsky = HYPERSURFACES["exMonsky"]
    for p in (2, 3):
        f = HypersurfacePresentation.from_json({**monsky, "p": p})
        for e in (1, 2, 3):
            want = 5 * p**e + (-6 if e % 2 else -4)
            if hk_hypersurface(f, e) != want:
                bad.append(f"exMonsky p={p} e={e}")
    if hk_hypersurface(HypersurfacePresentation.from_json(HYPERSURFACES["quartic"]), 1) != 339:
        bad.append("quartic")
    dt = time.perf_counter() - t0
    if dt >= 300:
        bad.append(f"took {dt:.1f}s")
    return bad, f"{dt:.1f}s"


def criterion_10():
    bad = []
    want = {"orthant2": 1, "orthant3": 1, "regcone2": 2, "regcone3": 3, "regcone4": 4, "toricnonproj": 2}
    for name, value in want.items():
        got = hilbert_samuel_multiplicity(new_semigroup(SEMIGROUPS[name]))
        if got != value:
            bad.append(f"{name}: {got}")
    if hilbert_samuel_multiplicity(new_semigroup(orthant(1))) != 1:
        bad.append("orthant1")
    return bad, ""


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    bad, detail = CRITERIA[n - 1]()
    record(n, bad, detail, capsys)


if __name__ == "__main__":
    for k, fn in enumerate(CRITERIA, 1):
        try:
            record(k, *fn())
        except AssertionError:
            pass
