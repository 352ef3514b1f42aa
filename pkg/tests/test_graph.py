import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from edgespace.edgeset import EdgeSet
from edgespace.exceptions import DisconnectedGraphError, GraphError, NotACutError
from edgespace.graph import (MultiGraph, components, cut_from_bipartition, cut_side, from_networkx,
                             fundamental_circuit, fundamental_cut, is_bond, is_connected, is_cut,
                             random_multigraph, require_connected, require_cut, spanning_tree)

from .conftest import make_graph, path_graph


def test_build_normalises_endpoints():
    g = MultiGraph.build([0, 1, 2], [(1, 2, 1), (0, 1, 0)])
    assert g.edges == ((0, 0, 1), (1, 1, 2))
    assert g.endpoints[1] == (1, 2)


@pytest.mark.parametrize("edges, message", [
    ([(0, 1, 1)], "loop"),
    ([(0, 0, 5)], "undeclared"),
    ([(0, 0, 1), (0, 1, 2)], "duplicate"),
])
def test_build_rejects_bad_edges(edges, message):
    with pytest.raises(GraphError, match=message):
        MultiGraph.build([0, 1, 2], edges)


def test_boundary_must_be_declared():
    with pytest.raises(GraphError):
        MultiGraph.build([0, 1], [(0, 0, 1)], boundary=[4])


def test_parallel_edges_keep_identities(parallel_pair):
    assert parallel_pair.edges_between(0, 1) == (0, 1)
    assert parallel_pair.degree(0) == 2
    assert parallel_pair.neighbors(0) == (1,)


def test_odd_vertices(k4):
    assert k4.odd_vertices(EdgeSet.of(0)) == [0, 1]
    assert k4.odd_vertices(EdgeSet.of(0, 1, 3)) == []


def test_components_and_connectivity(disconnected, k4):
    assert components(disconnected) == [frozenset({0, 1}), frozenset({2, 3})]
    assert not is_connected(disconnected)
    assert is_connected(k4)
    with pytest.raises(DisconnectedGraphError) as info:
        require_connected(disconnected)
    assert info.value.vertex == 2


def test_cut_from_bipartition(k4):
    assert cut_from_bipartition(k4, {0}) == EdgeSet.of(0, 1, 2)
    assert cut_from_bipartition(k4, {0, 1}) == EdgeSet.of(1, 2, 3, 4)
    assert cut_from_bipartition(k4, set()) == EdgeSet()
    with pytest.raises(GraphError):
        cut_from_bipartition(k4, {9})


def test_cut_side_reconstructs_cuts(k4):
    side = cut_side(k4, EdgeSet.of(1, 2, 3, 4))
    assert cut_from_bipartition(k4, side) == EdgeSet.of(1, 2, 3, 4)
    assert 0 in side
    assert cut_side(k4, EdgeSet.of(0, 1, 3)) is None
    assert is_cut(k4, EdgeSet())
    with pytest.raises(NotACutError):
        require_cut(k4, EdgeSet.of(0, 1, 3))


def test_is_bond(k4):
    path = path_graph(3)
    assert is_bond(k4, EdgeSet.of(0, 1, 2))
    assert is_bond(k4, EdgeSet.of(1, 2, 3, 4))
    assert not is_bond(k4, EdgeSet())
    assert not is_bond(k4, EdgeSet.of(0, 1, 3))
    # star of the middle vertex splits the path into three pieces
    assert not is_bond(path, EdgeSet.of(0, 1))
    assert is_bond(path, EdgeSet.of(0))


def test_spanning_tree_prefers_least_identities(k4):
    assert spanning_tree(k4) == EdgeSet.of(0, 1, 2)


def test_spanning_tree_requires_connectivity(disconnected):
    with pytest.raises(DisconnectedGraphError):
        spanning_tree(disconnected)


def test_fundamental_circuit_and_cut(k4):
    tree = spanning_tree(k4)
    assert fundamental_circuit(k4, tree, 3) == EdgeSet.of(0, 1, 3)
    assert fundamental_cut(k4, tree, 0) == EdgeSet.of(0, 3, 4)
    with pytest.raises(GraphError):
        fundamental_circuit(k4, tree, 0)
    with pytest.raises(GraphError):
        fundamental_cut(k4, tree, 3)


def test_induced_restricts_boundary():
    g = make_graph(3, [(0, 1), (1, 2)], boundary=[0, 2])
    h = g.without([2])
    assert h.vertices == frozenset({0, 1})
    assert h.boundary == frozenset({0})
    assert h.edge_ids == frozenset({0})


def test_from_networkx():
    g = from_networkx(nx.complete_graph(4))
    assert len(g.edges) == 6
    assert g.vertices == frozenset(range(4))


def test_random_multigraph_is_seeded_and_connected():
    first = random_multigraph(np.random.default_rng([3, 1]), 7)
    second = random_multigraph(np.random.default_rng([3, 1]), 7)
    assert first == second
    assert len(first.vertices) == 7
    assert is_connected(first)


@given(st.integers(0, 10 ** 6), st.integers(2, 8))
@settings(max_examples=60, deadline=None)
def test_is_bond_agrees_with_minimal_cuts(seed, n):
    g = random_multigraph(np.random.default_rng(seed), n)
    others = sorted(g.vertices - {0})
    cuts = set()
    for mask in range(1 << len(others)):
        side = {0} | {v for i, v in enumerate(others) if mask >> i & 1}
        cut = cut_from_bipartition(g, side)
        if cut:
            cuts.add(cut)
    for cut in cuts:
        minimal = not any(other.edges < cut.edges for other in cuts)
        assert is_bond(g, cut) == minimal
