import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import cpgroups as cg


@pytest.fixture(scope="session")
def s3():
    return cg.symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return cg.symmetric(4)


@pytest.fixture(scope="session")
def z6():
    return cg.cyclic(6)


@pytest.fixture(scope="session")
def q8():
    return cg.dicyclic(2)


@pytest.fixture(scope="session")
def d8():
    return cg.dihedral(4)


@pytest.fixture(scope="session")
def a4():
    return cg.alternating(4)


@pytest.fixture(scope="session")
def a5():
    return cg.alternating(5)
