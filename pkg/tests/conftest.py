import pytest

from hilbertkunz import build_polycell, new_semigroup
from hilbertkunz.catalog import SEMIGROUPS


@pytest.fixture(scope="session")
def semigroups():
    return {name: new_semigroup(gens) for name, gens in SEMIGROUPS.items()}


@pytest.fixture(scope="session")
def polycells(semigroups):
    return {name: build_polycell(M) for name, M in semigroups.items()}
