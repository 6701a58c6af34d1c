from fractions import Fraction
from pathlib import Path

import pytest

from ghr import fixtures
from ghr.fuzzy import fuzzy

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
HALF = Fraction(1, 2)


@pytest.fixture(scope="session")
def T1():
    return fixtures.trivial()


@pytest.fixture(scope="session")
def B2():
    return fixtures.boolean()


@pytest.fixture(scope="session")
def Z4():
    return fixtures.z4()


@pytest.fixture(scope="session")
def Z2():
    return fixtures.z2_over_z4()


@pytest.fixture(scope="session")
def X3():
    return fixtures.xor_cube(3)


@pytest.fixture(scope="session")
def mu_p(Z4):
    return fuzzy(Z4, fixtures.MU_P_GRADES)


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR
