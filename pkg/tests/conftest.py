from pseudolines import conf
from pseudolines.geometry import star_construction
from pseudolines.graph import build_from_arrangement, build_from_wiring
from pseudolines.wiring import WiringDiagram

import pytest

def pytest_configure(config):
    conf.configure()

@pytest.fixture
def triangle():
    return WiringDiagram(3, (1, 2, 1))

@pytest.fixture
def four():
    return WiringDiagram(4, (1, 3, 2, 1, 3, 2))

@pytest.fixture(scope='session')
def star5():
    return star_construction(5)

@pytest.fixture(scope='session')
def star7():
    return star_construction(7)

@pytest.fixture
def triangle_graph(triangle):
    return build_from_wiring(triangle)

@pytest.fixture
def four_graph(four):
    return build_from_wiring(four)

@pytest.fixture(scope='session')
def star5_graph(star5):
    return build_from_arrangement(star5)
