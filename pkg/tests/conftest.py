import pytest

from edgespace.graph import MultiGraph


def make_graph(n, pairs, boundary=()):
    """Graph on vertices 0..n-1 with edge i joining pairs[i]"""
    return MultiGraph.build(range(n), ((i, u, v) for i, (u, v) in enumerate(pairs)), boundary)


def cycle_graph(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def k4():
    # 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
    return make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def parallel_pair():
    return make_graph(2, [(0, 1), (0, 1)])


@pytest.fixture
def tree():
    return make_graph(5, [(0, 1), (0, 2), (2, 3), (2, 4)])


@pytest.fixture
def bowtie():
    # triangles 0-1-2 and 2-3-4 sharing vertex 2
    return make_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


@pytest.fixture
def disconnected():
    return make_graph(4, [(0, 1), (2, 3)])
