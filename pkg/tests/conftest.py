import pytest

from moddef.fixtures import fixture_a, fixture_b, fixture_c


@pytest.fixture(scope="session")
def pair_a():
    return fixture_a()


@pytest.fixture(scope="session")
def pair_b():
    return fixture_b()


@pytest.fixture(scope="session")
def pair_c():
    return fixture_c()
