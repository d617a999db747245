import pytest

from pathlib import Path

from nonrainbow.graph import build_graph
from nonrainbow.generators import tetrahedron, octahedron, bipyramid, projective_base


@pytest.fixture(scope='session')
def testdata():
    return Path(__file__).parent / 'data'


@pytest.fixture(scope='session')
def k4():
    return tetrahedron()


@pytest.fixture(scope='session')
def octa():
    return octahedron()


@pytest.fixture(scope='session')
def bipyramid3():
    return bipyramid(3)


@pytest.fixture(scope='session')
def projective_k6():
    return projective_base()


@pytest.fixture
def triangle():
    return build_graph(3, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def c4():
    return build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])


@pytest.fixture
def path3():
    return build_graph(3, [(1, 2), (2, 3)])
