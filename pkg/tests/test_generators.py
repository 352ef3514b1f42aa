import pytest

from edgespace.edgeset import EdgeSet
from edgespace.exceptions import GraphError, RayError, UnknownGeneratorError
from edgespace.generators import (component_CS, disjoint_rays, generator_catalog, generator_names, get_generator,
                                  nonbond_cut, nonbond_cut_side, pairs_in_window, sources_in_window, truncate_ray,
                                  window, zigzag_ray, zigzag_truncation)

NAMES = ["ladder", "subdivided_ladder", "grid_NZ", "doubled_grid", "doubled_grid_multi", "clique_chain"]


def test_catalog_order_and_lookup():
    assert generator_names() == NAMES
    for gen in generator_catalog():
        assert get_generator(gen.name).name == gen.name
        assert gen.quote


def test_unknown_generator_lists_catalog():
    with pytest.raises(UnknownGeneratorError) as info:
        get_generator("moebius")
    assert info.value.catalog == NAMES
    assert "ladder" in str(info.value)


def test_radius_zero_window_is_the_root():
    for name in NAMES:
        w = window(get_generator(name), 0)
        assert len(w.coords) == 1
        assert w.graph.edges == ()
        assert w.graph.boundary == frozenset({0})


def test_negative_radius_is_rejected():
    with pytest.raises(ValueError):
        window(get_generator("ladder"), -1)


def test_ladder_radius_one():
    w = window(get_generator("ladder"), 1)
    assert w.coords == ((0, 0), (0, 1), (1, 0))
    assert w.labels == ((1, 0), (0, 0, 0))
    assert w.graph.boundary == frozenset({1, 2})
    assert w.distances == (0, 1, 1)


@pytest.mark.parametrize("name", NAMES)
def test_identities_are_stable_across_radii(name):
    gen = get_generator(name)
    smaller = window(gen, 1)
    for r in range(2, 6):
        larger = window(gen, r)
        assert larger.coords[:len(smaller.coords)] == smaller.coords
        assert larger.labels[:len(smaller.labels)] == smaller.labels
        assert larger.graph.edges[:len(smaller.graph.edges)] == smaller.graph.edges
        smaller = larger


@pytest.mark.parametrize("name", NAMES)
def test_oracles_are_symmetric(name):
    gen = get_generator(name)
    for coord in window(gen, 4).coords:
        for label, other in gen.neighbors(coord):
            assert (label, coord) in gen.neighbors(other)


@pytest.mark.parametrize("name", NAMES)
def test_boundary_lies_on_the_outer_layer(name):
    w = window(get_generator(name), 4)
    assert w.graph.boundary
    assert w.graph.boundary <= w.layer(4)


def test_doubled_grid_distinguished_edges_are_triangle_edges():
    gen = get_generator("doubled_grid")
    for r in range(2, 6):
        w = window(gen, r)
        g = w.graph
        in_triangle = set()
        for e, u, v in g.edges:
            if set(g.neighbors(u)) & set(g.neighbors(v)):
                in_triangle.add(e)
        assert w.distinguished == EdgeSet(frozenset(in_triangle))
        assert w.distinguished


def test_doubled_grid_has_no_parallel_edges_but_multi_variant_does():
    plain = window(get_generator("doubled_grid"), 4).graph
    assert all(len(plain.edges_between(u, v)) == 1 for _, u, v in plain.edges)
    multi = window(get_generator("doubled_grid_multi"), 2).graph
    assert any(len(multi.edges_between(u, v)) == 2 for _, u, v in multi.edges)


def test_subdivided_ladder_d_is_the_half_rungs():
    w = window(get_generator("subdivided_ladder"), 5)
    g = w.graph
    subdivisions = [v for v, c in enumerate(w.coords) if c[1] == 2]
    stars = EdgeSet(frozenset(e for v in subdivisions for e in g.star(v)))
    assert w.distinguished == stars
    for v in subdivisions:
        if v in g.interior:
            assert g.degree(v) == 2


def test_truncate_ray_stays_inside_window():
    gen = get_generator("ladder")
    rail = truncate_ray(gen, "top", 0, 3)
    assert rail.coords == ((0, 0), (1, 0), (2, 0), (3, 0))
    assert truncate_ray(gen, "top", 1, 3).coords == ((0, 1), (1, 1), (2, 1))
    with pytest.raises(RayError):
        truncate_ray(gen, "top", 2, 3)
    with pytest.raises(RayError):
        truncate_ray(gen, "bottom", 0, 3)


def test_disjoint_rays_respect_vertex_degree():
    ladder = get_generator("ladder")
    assert len(disjoint_rays(ladder, None, 2, 3)) == 2
    with pytest.raises(RayError):
        disjoint_rays(ladder, None, 3, 3)
    with pytest.raises(RayError):
        disjoint_rays(get_generator("clique_chain"), None, 2, 5)


def test_grid_columns_run_to_the_boundary():
    w = window(get_generator("grid_NZ"), 3)
    rays = disjoint_rays(get_generator("grid_NZ"), None, 3, 3, w)
    assert [ray.coords[0] for ray in rays] == [(0, 0), (1, 0), (2, 0)]
    for ray in rays:
        assert ray.vertices[-1] in w.graph.boundary


def test_component_cs_on_ladder():
    gen = get_generator("ladder")
    w = window(gen, 5)
    S = {w.vertex((2, 0)), w.vertex((2, 1))}
    component = component_CS(gen, 5, S, w=w)
    assert w.vertex((3, 0)) in component
    assert w.vertex((0, 0)) not in component
    assert component_CS(gen, 5, set(), w=w) == w.graph.vertices


def test_component_cs_errors():
    gen = get_generator("ladder")
    w = window(gen, 3)
    with pytest.raises(RayError, match="increase r"):
        component_CS(gen, 3, {w.vertex((3, 0))}, w=w)
    with pytest.raises(GraphError):
        component_CS(gen, 3, {999}, w=w)


def test_component_cs_on_clique_chain():
    gen = get_generator("clique_chain")
    w = window(gen, 6)
    component = component_CS(gen, 6, {w.vertex((5, 0))}, w=w)
    assert w.vertex((6, 0)) in component
    assert w.vertex((4, 0)) not in component


def test_source_and_pair_sequences():
    w = window(get_generator("clique_chain"), 6)
    assert [w.coords[v] for v in sources_in_window(w, get_generator("clique_chain").fan_sources)] == \
        [(5, 3), (6, 3), (7, 3)]
    grid = window(get_generator("grid_NZ"), 4)
    assert len(pairs_in_window(grid, get_generator("grid_NZ").linkage_pairs)) == 2
    assert sources_in_window(grid, None) == []


def test_zigzag_ray_alternates_sides():
    assert [zigzag_ray(n) for n in range(6)] == [(0, 0), (0, 2), (0, 1), (1, 1), (1, 2), (1, 0)]


@pytest.mark.parametrize("r", range(3, 9))
def test_zigzag_crosses_one_rung_per_radius_step(r):
    w = window(get_generator("subdivided_ladder"), r)
    ray, crossed = zigzag_truncation(w)
    assert crossed == r - 1
    assert w.coords[ray.vertices[-1]][1] != 2
    assert len(ray.edge_set(w.graph) & w.distinguished) == 2 * crossed


def test_nonbond_cut_side_is_column_zero():
    w = window(get_generator("doubled_grid"), 3)
    side = nonbond_cut_side(w)
    assert all(w.coords[v][0] == 0 and w.coords[v][2] == 0 for v in side)
    assert nonbond_cut(w)
