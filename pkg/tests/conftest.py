import pytest
from hypothesis import HealthCheck, settings

from bettistack.algebra.hochster import betti_via_hochster
from bettistack.core.complex import complex_of_ideal, from_facets
from bettistack.verification.golden import CONING_FACETS, golden_ideals

settings.register_profile(
    "bettistack",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("bettistack")


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="Run long exhaustive sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def ideal_pair():
    """The two six-variable ideals with f-vector (6,8,4,0,0,0): (I, J)."""
    return golden_ideals()


@pytest.fixture(scope="session")
def complex_pair(ideal_pair):
    ideal_i, ideal_j = ideal_pair
    return complex_of_ideal(ideal_i), complex_of_ideal(ideal_j)


@pytest.fixture(scope="session")
def diagram_pair(complex_pair):
    """β^I and β^J over GF(101)."""
    complex_i, complex_j = complex_pair
    return betti_via_hochster(complex_i, 101), betti_via_hochster(complex_j, 101)


@pytest.fixture
def four_edge_complex():
    # complex of (x1x2, x1x3, x2x3x4)
    return from_facets(4, [(1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def coning_root():
    """Facets {1,2,4} and {3,4}; f-vector (4,4,1,0)."""
    return from_facets(4, CONING_FACETS)
