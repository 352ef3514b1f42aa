import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from edgespace.exceptions import GraphError
from edgespace.generators import get_generator, sources_in_window, truncate_ray, window
from edgespace.graph import random_multigraph
from edgespace.menger import (Fan, Linkage, fan_search, greedy_fans, k_fan, k_linkage, max_disjoint_fans,
                              max_disjoint_linkages, vertex_disjoint_paths)

from .conftest import cycle_graph, make_graph, path_graph


def test_disjoint_paths_across_a_cycle(c4):
    family = vertex_disjoint_paths(c4, {0, 1}, {2, 3})
    assert len(family) == 2
    assert len(family.separator) == 2
    used = [v for path in family.paths for v in path]
    assert len(used) == len(set(used))


def test_disjoint_paths_through_a_path_graph():
    g = path_graph(4)
    family = vertex_disjoint_paths(g, {0}, {3})
    assert family.paths == ((0, 1, 2, 3),)
    assert len(family.separator) == 1


def test_paths_stop_at_first_target():
    g = path_graph(4)
    family = vertex_disjoint_paths(g, {0}, {2, 3})
    assert family.paths == ((0, 1, 2),)


def test_forbidden_vertices_block_paths():
    g = path_graph(4)
    family = vertex_disjoint_paths(g, {0}, {3}, forbidden={1})
    assert len(family) == 0
    assert family.separator == frozenset()


def test_disjoint_paths_argument_errors(c4):
    with pytest.raises(GraphError):
        vertex_disjoint_paths(c4, set(), {1})
    with pytest.raises(GraphError):
        vertex_disjoint_paths(c4, {0}, {2}, forbidden={0})


def test_k_fan_in_k4(k4):
    fan = k_fan(k4, 0, {1, 2, 3}, 3)
    assert isinstance(fan, Fan)
    assert fan.k == 3
    assert fan.is_valid(k4, {1, 2, 3})
    assert k_fan(k4, 0, {1, 2, 3}, 4) is None


def test_fan_blocked_by_single_target_has_separator(c6):
    search = fan_search(c6, 0, {3}, 2)
    assert search.fan is None
    assert len(search.separator) == 1
    assert search.degree == 2


def test_fan_center_in_targets_is_rejected(k4):
    with pytest.raises(GraphError):
        fan_search(k4, 0, {0, 1}, 1)


def test_fan_validation_catches_shared_vertices(k4):
    bad = Fan(0, ((0, 1, 2), (0, 3, 2)))
    assert not bad.is_valid(k4, {2})


def test_k_linkage_around_a_cycle(c4):
    linkage = k_linkage(c4, 0, 2, 2)
    assert isinstance(linkage, Linkage)
    assert linkage.paths == ((0, 1, 2), (0, 3, 2))
    assert linkage.is_valid(c4)
    assert k_linkage(c4, 0, 2, 3) is None


def test_k_linkage_uses_the_direct_edge(k4):
    linkage = k_linkage(k4, 0, 1, 3)
    assert linkage is not None
    assert linkage.paths[0] == (0, 1)
    assert linkage.is_valid(k4)


def test_k_linkage_needs_distinct_endpoints(k4):
    with pytest.raises(GraphError):
        k_linkage(k4, 1, 1, 1)


def test_greedy_fans_are_disjoint():
    # two triangles hanging off a path of targets 10..13
    g = make_graph(14, [(10, 11), (11, 12), (12, 13),
                        (0, 10), (0, 11), (0, 1), (1, 10),
                        (2, 12), (2, 13), (2, 3), (3, 13)])
    targets = {10, 11, 12, 13}
    fans, searches = greedy_fans(g, [0, 2], targets, 2)
    assert len(fans) == 2
    assert len(searches) == 2
    assert not fans[0].vertices & fans[1].vertices
    assert max_disjoint_fans(g, [0, 2], targets, 2) == fans


def test_disjoint_linkages_on_a_ladder():
    ladder = make_graph(6, [(0, 1), (2, 3), (4, 5), (0, 2), (2, 4), (1, 3), (3, 5)])
    linkages = max_disjoint_linkages(ladder, [(0, 1), (4, 5)], 2)
    assert len(linkages) == 1
    assert linkages[0].is_valid(ladder)
    assert max_disjoint_linkages(cycle_graph(4), [(0, 1)], 2)[0].k == 2


@given(st.integers(0, 10 ** 6), st.integers(2, 8))
@settings(max_examples=80, deadline=None)
def test_path_count_equals_separator_size(seed, n):
    rng = np.random.default_rng(seed)
    g = random_multigraph(rng, n)
    xs = {v for v in g.vertices if rng.random() < 0.3} or {0}
    ys = {v for v in g.vertices if rng.random() < 0.3} or {n - 1}
    family = vertex_disjoint_paths(g, xs, ys)
    assert len(family.paths) == len(family.separator)

    used = [v for path in family.paths for v in path]
    assert len(used) == len(set(used))
    for path in family.paths:
        assert path[0] in xs and not set(path[1:]) & xs
        assert path[-1] in ys and not set(path[:-1]) & ys
        assert all(g.edges_between(a, b) for a, b in zip(path, path[1:]))

    # no X-Y path survives once the separator is removed
    rest = g.without(family.separator).simple()
    for x in xs - family.separator:
        for y in ys - family.separator:
            assert not nx.has_path(rest, x, y)


@pytest.mark.parametrize("name, radius, expected", [("clique_chain", 6, 3), ("grid_NZ", 6, None)])
def test_fans_in_generator_windows_are_valid(name, radius, expected):
    gen = get_generator(name)
    w = window(gen, radius)
    targets = frozenset(truncate_ray(gen, None, 0, radius, w).vertices)
    sources = [v for v in sources_in_window(w, gen.fan_sources) if v not in targets]
    fans = max_disjoint_fans(w.graph, sources, targets, 3)
    assert fans
    if expected is not None:
        assert len(fans) == expected
    seen = set()
    for fan in fans:
        assert fan.k == 3
        assert fan.is_valid(w.graph, targets)
        assert not seen & fan.vertices
        seen |= fan.vertices
