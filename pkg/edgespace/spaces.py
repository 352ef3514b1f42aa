# edgespace/spaces.py

"""
The six cycle and cut spaces on finite multigraphs and windows.

On a finite graph C_fin = C_top = C_alg and B = B_fin = B_sk; the tags stay
distinct so that reports can name the space that was asked for. On windows
(graphs with boundary marks) the topological and skew variants only see cuts
whose finite side avoids the boundary.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import networkx as nx

from .config import get_vertex_bound
from .edgeset import Basis, EdgeSet, gaussian_basis, in_span, is_orthogonal, orthogonal_complement, symmetric_sum
from .exceptions import BoundExceededError, NotInSpaceError, OddDegreeError
from .graph import (MultiGraph, components, cut_from_bipartition, cut_side, fundamental_circuit,
                    fundamental_cut, require_connected, require_cut, spanning_tree)

logger = logging.getLogger('edgespace.spaces')

CIRCUIT = "circuit"
BOND = "bond"
DOUBLE_RAY = "double-ray-truncation"


class SpaceTag(str, Enum):
    C_FIN = "C_fin"
    C_TOP = "C_top"
    C_ALG = "C_alg"
    B = "B"
    B_FIN = "B_fin"
    B_SK = "B_sk"

    @property
    def is_cycle_side(self):
        return self in (SpaceTag.C_FIN, SpaceTag.C_TOP, SpaceTag.C_ALG)

    @property
    def finite_collapse(self):
        """The tag this space collapses to on a finite graph"""
        return SpaceTag.C_FIN if self.is_cycle_side else SpaceTag.B


# F-perp for each of the six spaces
DUAL_OF = {
    SpaceTag.C_TOP: SpaceTag.B_FIN,
    SpaceTag.B_FIN: SpaceTag.C_TOP,
    SpaceTag.C_ALG: SpaceTag.B_SK,
    SpaceTag.B_SK: SpaceTag.C_ALG,
    SpaceTag.C_FIN: SpaceTag.B,
    SpaceTag.B: SpaceTag.C_FIN,
}


@dataclass(frozen=True)
class Decomposition:
    """Parts with one kind each; disjoint when the producing operation says so"""

    parts: tuple = ()
    kinds: tuple = ()
    disjoint: bool = True

    def __len__(self):
        return len(self.parts)

    def total(self):
        return symmetric_sum(self.parts)

    def union(self):
        return EdgeSet(frozenset().union(*(p.edges for p in self.parts)))

    def is_pairwise_disjoint(self):
        return sum(len(p) for p in self.parts) == len(self.union())


@dataclass(frozen=True)
class Membership:
    space: SpaceTag
    member: bool
    certificate: dict = field(default_factory=dict)
    collapsed_to: Optional[SpaceTag] = None


def cycle_space_basis(g: MultiGraph) -> Basis:
    """
    Fundamental circuits of the Kruskal spanning tree

    Args:
        g (MultiGraph): Connected graph

    Returns:
        Basis: One circuit per chord, in chord order

    Raises:
        DisconnectedGraphError: If g is disconnected
    """
    tree = spanning_tree(g)
    chords = sorted(g.edge_ids - tree.edges)
    return Basis(tuple(fundamental_circuit(g, tree, c) for c in chords), g.edge_ids)


def cut_space_basis(g: MultiGraph) -> Basis:
    """
    Fundamental cuts of the same spanning tree as cycle_space_basis

    Args:
        g (MultiGraph): Connected graph

    Returns:
        Basis: One cut per tree edge, in edge order

    Raises:
        DisconnectedGraphError: If g is disconnected
    """
    tree = spanning_tree(g)
    return Basis(tuple(fundamental_cut(g, tree, e) for e in tree), g.edge_ids)


def interior_star_basis(g: MultiGraph) -> Basis:
    """Basis of the span of the stars of non-boundary vertices"""
    stars = [g.star(v) for v in sorted(g.interior)]
    return gaussian_basis([s for s in stars if s], g.edge_ids)


def _check_bound(g, bound):
    bound = get_vertex_bound(bound)
    if len(g.vertices) > bound:
        raise BoundExceededError(len(g.vertices), bound)


def enumerate_bonds(g: MultiGraph, bound=None):
    """
    All bonds (minimal nonempty cuts), by bipartition enumeration

    Args:
        g (MultiGraph): Graph
        bound (int, optional): Vertex bound; defaults to the configured bound

    Returns:
        list: Bonds sorted by their edge tuples

    Raises:
        BoundExceededError: If g has more vertices than the bound
    """
    _check_bound(g, bound)
    simple = g.simple()
    bonds = set()
    for part in components(g):
        root, rest = min(part), sorted(part - {min(part)})
        for size in range(len(rest)):
            for chosen in itertools.combinations(rest, size):
                side = frozenset(chosen) | {root}
                other = part - side
                if nx.is_connected(simple.subgraph(side)) and nx.is_connected(simple.subgraph(other)):
                    bonds.add(cut_from_bipartition(g, side))
    return sorted(bonds, key=EdgeSet.sort_key)


def circuits_up_to(g: MultiGraph, max_length=None):
    """
    Edge sets of all cycles with at most max_length edges, no vertex bound

    Parallel pairs give 2-edge circuits; every vertex cycle expands into one
    circuit per choice of parallel edges.

    Args:
        g (MultiGraph): Graph
        max_length (int, optional): Longest circuit wanted; all when omitted

    Returns:
        list: Circuits sorted by their edge tuples
    """
    found = set()
    for (u, v) in sorted({(a, b) for _, a, b in g.edges}):
        for pair in itertools.combinations(g.edges_between(u, v), 2):
            found.add(EdgeSet(frozenset(pair)))
    if max_length is not None and max_length < 3:
        return sorted(found, key=EdgeSet.sort_key)
    for cycle in nx.simple_cycles(g.simple(), length_bound=max_length):
        if len(cycle) < 3:
            continue
        steps = [g.edges_between(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])]
        for choice in itertools.product(*steps):
            found.add(EdgeSet(frozenset(choice)))
    return sorted(found, key=EdgeSet.sort_key)


def enumerate_circuits(g: MultiGraph, bound=None):
    """
    All circuits of g

    Args:
        g (MultiGraph): Graph
        bound (int, optional): Vertex bound; defaults to the configured bound

    Returns:
        list: Circuits sorted by their edge tuples

    Raises:
        BoundExceededError: If g has more vertices than the bound
    """
    _check_bound(g, bound)
    return circuits_up_to(g)


def is_circuit(g: MultiGraph, c: EdgeSet) -> bool:
    """True iff c is the edge set of a single cycle"""
    if not c:
        return False
    g.check_edges(c)
    touched = {v for e in c for v in g.endpoints[e]}
    if any(g.degree_in(c, v) != 2 for v in touched):
        return False
    return nx.is_connected(g.simple(c).subgraph(touched))


def _path_edges(g, available, path):
    return [min(e for e in g.edges_between(a, b) if e in available) for a, b in zip(path, path[1:])]


def _subgraph(g, edges):
    h = nx.Graph()
    for e in sorted(edges):
        u, v = g.endpoints[e]
        h.add_edge(u, v)
    return h


def circuit_through(g: MultiGraph, even: EdgeSet, edge: int) -> EdgeSet:
    """
    A circuit inside an even-degree edge set that contains edge

    Walks back from one end of edge to the other along a shortest path in
    even - edge; parallel choices take the least identity.

    Args:
        g (MultiGraph): Graph
        even (EdgeSet): Edge set with even degree at every vertex
        edge (int): Edge of even

    Returns:
        EdgeSet: A circuit c with edge in c and c contained in even
    """
    u, v = g.endpoints[edge]
    rest = even.edges - {edge}
    parallel = [e for e in g.edges_between(u, v) if e in rest]
    if parallel:
        return EdgeSet(frozenset((edge, min(parallel))))
    path = nx.shortest_path(_subgraph(g, rest), v, u)
    return EdgeSet(frozenset([edge] + _path_edges(g, rest, path)))


def _require_even(g, d, vertices=None):
    odd = [v for v in g.odd_vertices(d) if vertices is None or v in vertices]
    if odd:
        raise OddDegreeError(odd[0])


def decompose_even_set_into_circuits(g: MultiGraph, d: EdgeSet) -> Decomposition:
    """
    Disjoint circuits whose union is d, each peeled through the least unused edge

    Args:
        g (MultiGraph): Graph
        d (EdgeSet): Edge set, even at every vertex

    Returns:
        Decomposition: Circuits in peeling order

    Raises:
        OddDegreeError: If some vertex has odd degree in d
    """
    g.check_edges(d)
    _require_even(g, d)
    parts = []
    remainder = d
    while remainder:
        circuit = circuit_through(g, remainder, remainder.least())
        parts.append(circuit)
        remainder = remainder - circuit
    logger.debug(f"even set of {len(d)} edges -> {len(parts)} circuits")
    return Decomposition(tuple(parts), (CIRCUIT,) * len(parts), True)


def _bond_through(g, side, f, edge):
    """A bond inside the cut f = E(side, V - side) that contains edge."""
    u, v = g.endpoints[edge]
    a, b = (u, v) if u in side else (v, u)
    simple = g.simple()
    piece = nx.node_connected_component(simple.subgraph(side), a)
    rest = simple.subgraph(nx.node_connected_component(simple, a) - piece)
    other = nx.node_connected_component(rest, b)
    bond = cut_from_bipartition(g, other)
    assert bond <= f and edge in bond
    return bond, frozenset(other)


def decompose_cut_into_bonds(g: MultiGraph, f: EdgeSet, side=None) -> Decomposition:
    """
    Disjoint bonds whose union is the cut f

    Each step takes the component C of G[A] at the least remaining edge, the
    component D of G - C across that edge, and peels the bond E(C', D) where
    C' = V - D. The remainder stays a cut with side A xor D.

    Args:
        g (MultiGraph): Graph
        f (EdgeSet): A cut
        side (iterable, optional): Side A with f = E(A, V - A); recomputed
                                   when missing or wrong

    Returns:
        Decomposition: Bonds in peeling order

    Raises:
        NotACutError: If f is not a cut
    """
    if side is None or cut_from_bipartition(g, side) != f:
        side = require_cut(g, f)
    side = frozenset(side)
    parts = []
    remainder = f
    while remainder:
        bond, other = _bond_through(g, side, remainder, remainder.least())
        parts.append(bond)
        remainder = remainder - bond
        side = side ^ other
    logger.debug(f"cut of {len(f)} edges -> {len(parts)} bonds")
    return Decomposition(tuple(parts), (BOND,) * len(parts), True)


def peel_minimal_decomposition(space, g: MultiGraph, f: EdgeSet) -> Decomposition:
    """
    Write f as a sum of minimal nonzero elements of its space

    Circuits for the cycle side, bonds for the cut side. Every step removes a
    minimal element contained in the remainder, so at most |f| steps run.

    Args:
        space (SpaceTag): C_fin or B (other tags collapse to these)
        g (MultiGraph): Connected graph
        f (EdgeSet): Element of the space

    Returns:
        Decomposition: Circuits or bonds summing to f

    Raises:
        NotInSpaceError: If f is not in the space
    """
    space = SpaceTag(space)
    require_connected(g)
    g.check_edges(f)
    if space.is_cycle_side:
        odd = g.odd_vertices(f)
        if odd:
            raise NotInSpaceError(space.value, witness=odd[0])
        return decompose_even_set_into_circuits(g, f)
    side = cut_side(g, f)
    if side is None:
        raise NotInSpaceError(space.value)
    return decompose_cut_into_bonds(g, f, side)


def _graph_of(target):
    return getattr(target, "graph", target)


def decompose_into_circuits_and_double_rays(target, d: EdgeSet) -> Decomposition:
    """
    Disjoint circuits and boundary-to-boundary paths whose union is d

    Odd-degree vertices must be boundary vertices. Paths are peeled first,
    always from the least odd vertex to its nearest odd partner; the even rest
    is split into circuits.

    Args:
        target (Window or MultiGraph): Window or graph carrying boundary marks
        d (EdgeSet): Edge set, even at every interior vertex

    Returns:
        Decomposition: Boundary paths first, then circuits

    Raises:
        OddDegreeError: If an interior vertex has odd degree in d
    """
    g = _graph_of(target)
    g.check_edges(d)
    _require_even(g, d, g.interior)
    parts, kinds = [], []
    remainder = d
    odd = g.odd_vertices(remainder)
    while odd:
        start = odd[0]
        lengths = nx.single_source_shortest_path_length(_subgraph(g, remainder.edges), start)
        end = min((n, v) for v, n in lengths.items() if v != start and v in odd)[1]
        path = nx.shortest_path(_subgraph(g, remainder.edges), start, end)
        segment = EdgeSet(frozenset(_path_edges(g, remainder.edges, path)))
        parts.append(segment)
        kinds.append(DOUBLE_RAY)
        remainder = remainder - segment
        odd = g.odd_vertices(remainder)
    rest = decompose_even_set_into_circuits(g, remainder)
    return Decomposition(tuple(parts) + rest.parts, tuple(kinds) + rest.kinds, True)


def _finite_membership(space, g, d):
    connected = len(components(g)) <= 1
    if space.is_cycle_side:
        odd = g.odd_vertices(d)
        if odd:
            return False, {"odd_vertex": odd[0]}
        certificate = {}
        if connected:
            certificate["coordinates"] = sorted(in_span(cycle_space_basis(g), d))
        return True, certificate
    side = cut_side(g, d)
    if side is not None:
        certificate = {"side": sorted(side)}
        if connected:
            certificate["coordinates"] = sorted(in_span(cut_space_basis(g), d))
        return True, certificate
    if connected:
        for circuit in cycle_space_basis(g):
            if not is_orthogonal(circuit, d):
                return False, {"odd_circuit": list(circuit.sorted())}
    return False, {"reason": "not a cut"}


def _window_membership(space, g, d):
    if space in (SpaceTag.C_ALG, SpaceTag.C_TOP):
        odd = [v for v in g.odd_vertices(d) if v in g.interior]
        if odd:
            return False, {"odd_vertex": odd[0]}
        return True, {"interior_even": True}
    if space in (SpaceTag.B_FIN, SpaceTag.B_SK):
        stars = interior_star_basis(g)
        coords = in_span(stars, d)
        if coords is not None:
            return True, {"star_coordinates": sorted(coords)}
        for vector in orthogonal_complement(stars):
            if not is_orthogonal(vector, d):
                return False, {"odd_even_set": list(vector.sorted())}
    return _finite_membership(space, g, d)


def membership(space, target, d: EdgeSet) -> Membership:
    """
    Decide whether d lies in a space, with a certificate

    On graphs without boundary every tag collapses to C_fin or B and the
    certificate is span coordinates, a cut side, an odd-degree vertex or a
    circuit meeting d oddly. On windows, C_alg and C_top test parity at
    interior vertices (the cuts whose finite side avoids the boundary are
    spanned by interior stars) and B_fin, B_sk test membership in the span
    of interior stars.

    Args:
        space (SpaceTag or str): One of the six tags
        target (Window or MultiGraph): Graph or window
        d (EdgeSet): Edge set

    Returns:
        Membership: Verdict with certificate
    """
    space = SpaceTag(space)
    g = _graph_of(target)
    g.check_edges(d)
    if g.boundary:
        member, certificate = _window_membership(space, g, d)
        collapsed = None
    else:
        member, certificate = _finite_membership(space, g, d)
        collapsed = space.finite_collapse if space.finite_collapse != space else None
    return Membership(space, member, certificate, collapsed)
