import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertkunz import (
    HypersurfacePresentation,
    InfeasibleSize,
    OracleError,
    count_lattice_points,
    fp_rank,
    hk_hypersurface,
    new_semigroup,
    semigroup_bfs_hk,
)
from hilbertkunz.catalog import HYPERSURFACES, SEMIGROUPS
from hilbertkunz.oracles import FpMatrix, _sparse_rank


def hyper(name):
    return HypersurfacePresentation.from_json(HYPERSURFACES[name])


def test_bfs_examples(semigroups):
    assert semigroup_bfs_hk(semigroups["orthant2"], None, 2, 2) == 16
    assert semigroup_bfs_hk(semigroups["regcone2"], None, 3, 1) == 13
    assert semigroup_bfs_hk(semigroups["toricnonproj"], None, 2, 1) == 6


def test_bfs_rejects_non_normal():
    with pytest.raises(OracleError, match="not normal"):
        semigroup_bfs_hk(new_semigroup([[1, 0], [1, 1], [1, 3]]), None, 2, 1)


@pytest.mark.parametrize("name", sorted(SEMIGROUPS))
def test_bfs_matches_count(name, semigroups, polycells):
    for p in (2, 3, 5):
        for e in (1, 2):
            if (p**e) ** semigroups[name].dim > 20000:
                continue
            assert semigroup_bfs_hk(semigroups[name], None, p, e) == count_lattice_points(polycells[name], p**e)


def test_fp_rank_examples():
    assert fp_rank(FpMatrix.from_dense(np.eye(5, dtype=int).tolist(), 3)) == 5
    assert fp_rank(FpMatrix.from_dense([[0, 0], [0, 0]], 2)) == 0
    assert fp_rank(FpMatrix.from_dense([[1, 1], [1, 1]], 2)) == 1
    assert fp_rank(FpMatrix.from_dense([[1, 2], [2, 4]], 5)) == 1
    assert fp_rank(FpMatrix.from_dense([[1, 2], [2, 1]], 3)) == 1


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=80, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5, 7]), st.randoms())
def test_fp_rank_permutation_invariant(m, p, rnd):
    base = fp_rank(FpMatrix.from_dense(m, p))
    rows = list(m)
    rnd.shuffle(rows)
    cols = list(range(len(m[0])))
    rnd.shuffle(cols)
    perm = [[r[j] for j in cols] for r in rows]
    assert fp_rank(FpMatrix.from_dense(perm, p)) == base
    assert _sparse_rank(FpMatrix.from_dense(m, p).rows, p) == base


def test_hypersurface_examples():
    for p in (2, 3, 5):
        f = HypersurfacePresentation.create(1, [((1,), 1)], p)
        assert [hk_hypersurface(f, e) for e in (1, 2)] == [1, 1]
    assert hk_hypersurface(hyper("exKunz"), 1) == 25
    assert [hk_hypersurface(hyper("exMonsky"), e) for e in (1, 2)] == [4, 16]
    assert hk_hypersurface(hyper("quartic"), 1) == 339


def test_monsky_leading_term():
    f = hyper("exMonsky")
    for e in (1, 2, 3, 4):
        q = 2**e
        assert abs(hk_hypersurface(f, e) - 5 * q) <= 6


def test_hypersurface_validation():
    with pytest.raises(OracleError, match="vanishes"):
        HypersurfacePresentation.create(2, [((1, 0), 3)], 3)
    with pytest.raises(OracleError):
        HypersurfacePresentation.create(2, [((1,), 1)], 3)
    f = HypersurfacePresentation.create(2, [((1, 0), 1), ((1, 0), 1)], 5)
    assert f.terms == (((1, 0), 2),)
    with pytest.raises(InfeasibleSize, match="exceeds"):
        hk_hypersurface(hyper("quartic"), 3)
