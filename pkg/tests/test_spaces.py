import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from edgespace.edgeset import EdgeSet, is_orthogonal, random_span_element
from edgespace.exceptions import BoundExceededError, NotACutError, NotInSpaceError, OddDegreeError
from edgespace.generators import get_generator, window
from edgespace.graph import cut_from_bipartition, is_bond, random_multigraph
from edgespace.spaces import (BOND, CIRCUIT, DOUBLE_RAY, DUAL_OF, SpaceTag, circuits_up_to, cut_space_basis,
                              cycle_space_basis, decompose_cut_into_bonds, decompose_even_set_into_circuits,
                              decompose_into_circuits_and_double_rays, enumerate_bonds, enumerate_circuits,
                              interior_star_basis, is_circuit, membership, peel_minimal_decomposition)

from .conftest import cycle_graph, make_graph, path_graph


def test_dual_of_is_an_involution():
    for tag in SpaceTag:
        assert DUAL_OF[DUAL_OF[tag]] == tag
        assert tag.is_cycle_side != DUAL_OF[tag].is_cycle_side
    assert DUAL_OF[SpaceTag.C_TOP] == SpaceTag.B_FIN
    assert DUAL_OF[SpaceTag.C_ALG] == SpaceTag.B_SK


@pytest.mark.parametrize("fixture, cycle_dim, cut_dim", [
    ("k4", 3, 3),
    ("c6", 1, 5),
    ("tree", 0, 4),
    ("parallel_pair", 1, 1),
])
def test_basis_dimensions(request, fixture, cycle_dim, cut_dim):
    g = request.getfixturevalue(fixture)
    assert cycle_space_basis(g).dimension == cycle_dim
    assert cut_space_basis(g).dimension == cut_dim


def test_fundamental_bases_are_orthogonal(k4):
    for circuit in cycle_space_basis(k4):
        for cut in cut_space_basis(k4):
            assert is_orthogonal(circuit, cut)


def test_enumerate_bonds_counts(k4, c4, c6, parallel_pair):
    assert len(enumerate_bonds(k4)) == 7
    assert len(enumerate_bonds(c4)) == 6
    assert len(enumerate_bonds(c6)) == 15
    assert enumerate_bonds(parallel_pair) == [EdgeSet.of(0, 1)]
    assert all(is_bond(k4, b) for b in enumerate_bonds(k4))


def test_enumerate_circuits_counts(k4, c6, parallel_pair):
    assert len(enumerate_circuits(k4)) == 7
    assert enumerate_circuits(c6) == [EdgeSet.of(0, 1, 2, 3, 4, 5)]
    assert enumerate_circuits(parallel_pair) == [EdgeSet.of(0, 1)]
    triple = make_graph(2, [(0, 1), (0, 1), (0, 1)])
    assert len(enumerate_circuits(triple)) == 3


def test_parallel_edges_multiply_cycles():
    # triangle with one doubled side
    g = make_graph(3, [(0, 1), (0, 1), (1, 2), (0, 2)])
    assert enumerate_circuits(g) == [EdgeSet.of(0, 1), EdgeSet.of(0, 2, 3), EdgeSet.of(1, 2, 3)]


def test_circuits_up_to_respects_length(k4):
    assert len(circuits_up_to(k4, 3)) == 4
    assert circuits_up_to(k4, 2) == []


def test_enumeration_refuses_large_graphs():
    g = path_graph(13)
    with pytest.raises(BoundExceededError):
        enumerate_bonds(g)
    with pytest.raises(BoundExceededError):
        enumerate_circuits(g)
    assert len(enumerate_bonds(g, bound=13)) == 12


def test_bound_is_read_from_environment(monkeypatch, k4):
    monkeypatch.setenv("EDGESPACE_BOUND", "3")
    with pytest.raises(BoundExceededError) as info:
        enumerate_bonds(k4)
    assert info.value.bound == 3


def test_is_circuit(k4):
    assert is_circuit(k4, EdgeSet.of(0, 1, 3))
    assert not is_circuit(k4, EdgeSet.of(0, 1))
    assert not is_circuit(k4, EdgeSet())
    assert not is_circuit(cycle_graph(6), EdgeSet.of(0, 1, 2))


def test_decompose_bowtie(bowtie):
    d = bowtie.edge_set()
    result = decompose_even_set_into_circuits(bowtie, d)
    assert result.parts == (EdgeSet.of(0, 1, 2), EdgeSet.of(3, 4, 5))
    assert result.kinds == (CIRCUIT, CIRCUIT)
    assert result.total() == d
    with pytest.raises(OddDegreeError):
        decompose_even_set_into_circuits(bowtie, EdgeSet.of(0))


def test_decompose_cut_into_bonds():
    g = path_graph(3)
    result = decompose_cut_into_bonds(g, EdgeSet.of(0, 1))
    assert sorted(result.parts, key=EdgeSet.sort_key) == [EdgeSet.of(0), EdgeSet.of(1)]
    assert result.kinds == (BOND, BOND)
    with pytest.raises(NotACutError):
        decompose_cut_into_bonds(cycle_graph(4), EdgeSet.of(0))


def test_decompose_cut_accepts_side(k4):
    f = cut_from_bipartition(k4, {0})
    assert decompose_cut_into_bonds(k4, f, side={0}).parts == (f,)


def test_peel_rejects_non_members(k4):
    with pytest.raises(NotInSpaceError) as info:
        peel_minimal_decomposition(SpaceTag.C_FIN, k4, EdgeSet.of(0))
    assert info.value.witness == 0
    with pytest.raises(NotInSpaceError):
        peel_minimal_decomposition(SpaceTag.B, k4, EdgeSet.of(0, 1, 3))


@given(st.integers(0, 10 ** 6), st.integers(2, 7), st.booleans())
@settings(max_examples=60, deadline=None)
def test_peeling_random_span_elements(seed, n, cycle_side):
    rng = np.random.default_rng(seed)
    g = random_multigraph(rng, n)
    basis = cycle_space_basis(g) if cycle_side else cut_space_basis(g)
    f = random_span_element(basis, rng)
    space = SpaceTag.C_FIN if cycle_side else SpaceTag.B
    result = peel_minimal_decomposition(space, g, f)
    assert result.total() == f
    assert result.is_pairwise_disjoint()
    check = is_circuit if cycle_side else is_bond
    assert all(check(g, part) for part in result.parts)


def test_boundary_paths_are_peeled_first():
    # path 0-1-2 between boundary vertices, and a separate triangle
    g = make_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)], boundary=[0, 2])
    result = decompose_into_circuits_and_double_rays(g, g.edge_set())
    assert result.parts == (EdgeSet.of(0, 1), EdgeSet.of(2, 3, 4))
    assert result.kinds == (DOUBLE_RAY, CIRCUIT)
    with pytest.raises(OddDegreeError) as info:
        decompose_into_circuits_and_double_rays(g, EdgeSet.of(0))
    assert info.value.vertex == 1


def test_ladder_window_splits_into_boundary_path_and_circuit():
    w = window(get_generator("ladder"), 3)
    # the square on rungs 0 and 1, plus (2,1)-(2,0)-(3,0) between two boundary vertices
    square = EdgeSet.of(0, 1, 2, 3)
    hook = EdgeSet.of(6, 7)
    assert w.coords[5] == (2, 1) and w.coords[6] == (3, 0)
    assert w.graph.boundary == frozenset({5, 6})
    result = decompose_into_circuits_and_double_rays(w, square | hook)
    assert result.parts == (hook, square)
    assert result.kinds == (DOUBLE_RAY, CIRCUIT)
    assert result.total() == square | hook
    assert is_circuit(w.graph, square)


def test_without_boundary_only_circuits_come_out(bowtie):
    d = bowtie.edge_set()
    assert decompose_into_circuits_and_double_rays(bowtie, d) == decompose_even_set_into_circuits(bowtie, d)


def test_finite_membership_certificates(c4, k4):
    inside = membership(SpaceTag.C_FIN, c4, c4.edge_set())
    assert inside.member
    assert inside.certificate["coordinates"] == [0]
    assert inside.collapsed_to is None

    outside = membership(SpaceTag.C_TOP, c4, EdgeSet.of(0))
    assert not outside.member
    assert outside.certificate["odd_vertex"] == 0
    assert outside.collapsed_to == SpaceTag.C_FIN

    star = membership(SpaceTag.B, k4, EdgeSet.of(0, 1, 2))
    assert star.member
    assert cut_from_bipartition(k4, star.certificate["side"]) == EdgeSet.of(0, 1, 2)

    triangle = membership(SpaceTag.B_FIN, k4, EdgeSet.of(0, 1, 3))
    assert not triangle.member
    assert len(set(triangle.certificate["odd_circuit"]) & {0, 1, 3}) % 2 == 1


def test_window_membership_uses_interior_stars():
    w = window(get_generator("ladder"), 3)
    g = w.graph
    inner = min(g.interior)
    star = membership(SpaceTag.B_FIN, w, g.star(inner))
    assert star.member
    assert "star_coordinates" in star.certificate

    rung = EdgeSet.of(0)
    assert not membership(SpaceTag.B_SK, w, rung).member
    assert "odd_even_set" in membership(SpaceTag.B_SK, w, rung).certificate
    assert not membership(SpaceTag.C_ALG, w, rung).member
    assert interior_star_basis(g).dimension == len(g.interior)


@pytest.mark.slow
@pytest.mark.parametrize("cycle_side", [True, False])
def test_decomposition_suite(cycle_side):
    for index in range(500):
        rng = np.random.default_rng([0, index])
        g = random_multigraph(rng, int(rng.integers(2, 9)))
        if cycle_side:
            f = random_span_element(cycle_space_basis(g), rng)
            result = decompose_even_set_into_circuits(g, f)
        else:
            side = {v for v in g.vertices if rng.integers(0, 2)}
            f = cut_from_bipartition(g, side)
            result = decompose_cut_into_bonds(g, f, side)
        assert result.union() == f
        assert result.is_pairwise_disjoint()
        check = is_circuit if cycle_side else is_bond
        assert all(check(g, part) for part in result.parts)
