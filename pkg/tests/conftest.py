import random

import pytest

from lieyam import LieYRepPair, adjoint_rep, coadjoint_rep
from lieyam.search import catalog_algebra


@pytest.fixture(scope="session")
def a2():
    return catalog_algebra("a2")


@pytest.fixture(scope="session")
def a2_adjoint(a2):
    return LieYRepPair(a2, adjoint_rep(a2))


@pytest.fixture(scope="session")
def a2_coadjoint(a2):
    return LieYRepPair(a2, coadjoint_rep(a2))


@pytest.fixture(scope="session")
def so3():
    return catalog_algebra("so3")


@pytest.fixture(scope="session")
def sl2():
    return catalog_algebra("sl2")


@pytest.fixture()
def rng():
    return random.Random(20250810)
