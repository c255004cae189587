import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertkunz import SemigroupError, contains, is_normal, is_pointed, monomial_ideal, new_semigroup
from hilbertkunz.catalog import SEMIGROUPS
from hilbertkunz.semigroup import enumerate_below

REGCONE2 = [[1, 0], [1, 1], [1, 2]]


def test_construction_errors():
    assert new_semigroup([[1, 0], [0, 1]], 2).dim == 2
    with pytest.raises(SemigroupError, match="not pointed"):
        new_semigroup([[1, 0], [-1, 0], [0, 1]])
    with pytest.raises(SemigroupError, match="lattice not full"):
        new_semigroup([[1, 0], [1, 2]])


@pytest.mark.parametrize(
    "gens, expected",
    [(REGCONE2, True), ([[1, 0], [-1, 0]], False), ([[1, 0], [0, 1], [1, 1]], True)],
)
def test_is_pointed(gens, expected):
    assert is_pointed(gens) is expected


def test_contains():
    M = new_semigroup(REGCONE2)
    assert contains(M, (0, 0))
    assert contains(M, (2, 3))
    assert not contains(M, (1, 3))
    assert M.contains((5, 7))


def test_is_normal():
    assert is_normal(new_semigroup([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert is_normal(new_semigroup(REGCONE2))
    M = new_semigroup([[1, 0], [1, 1], [1, 3]])
    assert not is_normal(M)
    assert not contains(M, (1, 2)) and contains(M, (2, 4))


@pytest.mark.parametrize("name", sorted(SEMIGROUPS))
def test_is_normal_matches_brute_force(name):
    M = new_semigroup(SEMIGROUPS[name])
    w = M.grading
    brute = True
    for x in itertools.product(range(-4, 8), repeat=M.dim):
        if sum(a * b for a, b in zip(w, x)) <= 12 and min(M.hyperplanes.values(x)) >= 0 and not contains(M, x):
            brute = False
            break
    assert is_normal(M) is brute


def test_enumerate_below():
    orth = new_semigroup([[1, 0], [0, 1]])
    assert enumerate_below(orth, (1, 1), 1) == {(0, 0), (1, 0), (0, 1)}
    M = new_semigroup(REGCONE2)
    assert enumerate_below(M, (1, 0), 1) == {(0, 0), (1, 0), (1, 1), (1, 2)}
    assert enumerate_below(M, (1, 0), 0) == {(0, 0)}
    with pytest.raises(SemigroupError):
        enumerate_below(M, (0, 1), 3)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(SEMIGROUPS)), st.data())
def test_membership_closed_under_addition(name, data):
    M = new_semigroup(SEMIGROUPS[name])
    for g in M.generators:
        assert contains(M, g)
    coeffs = st.lists(st.integers(0, 3), min_size=len(M.generators), max_size=len(M.generators))
    a, b = data.draw(coeffs), data.draw(coeffs)
    x = tuple(sum(c * g[k] for c, g in zip(a, M.generators)) for k in range(M.dim))
    y = tuple(sum(c * g[k] for c, g in zip(b, M.generators)) for k in range(M.dim))
    assert contains(M, x) and contains(M, y)
    assert contains(M, tuple(u + v for u, v in zip(x, y)))


@pytest.mark.parametrize("name", ["regcone3", "toricnonproj", "S1"])
def test_permuted_generators_behave_identically(name):
    gens = SEMIGROUPS[name]
    M, N = new_semigroup(gens), new_semigroup(list(reversed(gens)))
    assert M == N and hash(M) == hash(N)
    assert M.hyperplanes.normals == N.hyperplanes.normals
    for x in itertools.product(range(0, 4), repeat=M.dim):
        assert contains(M, x) == contains(N, x)


def test_monomial_ideal_validation():
    M = new_semigroup(REGCONE2)
    assert monomial_ideal(M).exponents == M.generators
    assert monomial_ideal(M, [[2, 0], [1, 1]]).exponents == ((1, 1), (2, 0))
    with pytest.raises(SemigroupError):
        monomial_ideal(M, [[1, 3]])
    with pytest.raises(SemigroupError):
        monomial_ideal(M, [])
