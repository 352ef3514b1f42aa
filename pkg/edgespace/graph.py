# edgespace/graph.py

"""
Finite undirected multigraphs with stable integer vertex and edge identities.

Parallel edges keep distinct identities; loops are rejected. Connectivity,
cuts, bonds and spanning-tree carriers for the cycle and cut bases live here.
Anything that needs a traversal goes through networkx.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import networkx as nx

from .edgeset import EdgeSet
from .exceptions import DisconnectedGraphError, GraphError, NotACutError

logger = logging.getLogger('edgespace.graph')


@dataclass(frozen=True)
class MultiGraph:
    """
    Finite multigraph

    Attributes:
        vertices (frozenset): Vertex identities
        edges (tuple): ``(edge_id, u, v)`` triples sorted by edge id, ``u < v``
        boundary (frozenset): Vertices marked as window truncation points
    """

    vertices: frozenset
    edges: tuple
    boundary: frozenset = frozenset()

    def __post_init__(self):
        seen = set()
        for edge_id, u, v in self.edges:
            if edge_id in seen:
                raise GraphError(f"duplicate edge identity {edge_id}")
            seen.add(edge_id)
            if u == v:
                raise GraphError(f"edge {edge_id} is a loop at vertex {u}")
            for end in (u, v):
                if end not in self.vertices:
                    raise GraphError(f"edge {edge_id} uses undeclared vertex {end}")
        if not self.boundary <= self.vertices:
            raise GraphError(f"boundary vertices {sorted(self.boundary - self.vertices)} are not declared")

    @classmethod
    def build(cls, vertices: Iterable[int], edges: Iterable, boundary: Iterable[int] = ()):
        """
        Build a graph from loose inputs

        Args:
            vertices (iterable): Vertex identities
            edges (iterable): ``(edge_id, u, v)`` triples in any order
            boundary (iterable, optional): Boundary vertices

        Returns:
            MultiGraph: Canonical graph

        Raises:
            GraphError: On loops, undeclared endpoints or duplicate identities
        """
        triples = tuple(sorted((e, min(u, v), max(u, v)) for e, u, v in edges))
        return cls(frozenset(vertices), triples, frozenset(boundary))

    @cached_property
    def endpoints(self):
        return {e: (u, v) for e, u, v in self.edges}

    @cached_property
    def edge_ids(self):
        return frozenset(self.endpoints)

    @cached_property
    def incidence(self):
        """Vertex -> sorted tuple of (edge id, neighbor)"""
        table = defaultdict(list)
        for e, u, v in self.edges:
            table[u].append((e, v))
            table[v].append((e, u))
        return {v: tuple(sorted(table.get(v, ()))) for v in self.vertices}

    @property
    def interior(self):
        return self.vertices - self.boundary

    def neighbors(self, v):
        return tuple(sorted({w for _, w in self.incidence[v]}))

    def degree(self, v):
        return len(self.incidence[v])

    def edges_between(self, u, v):
        return tuple(e for e, w in self.incidence[u] if w == v)

    def edge_set(self):
        return EdgeSet(self.edge_ids)

    def star(self, v):
        """Edges incident with v"""
        return EdgeSet(frozenset(e for e, _ in self.incidence[v]))

    def degree_in(self, d: EdgeSet, v) -> int:
        return sum(1 for e, _ in self.incidence[v] if e in d)

    def odd_vertices(self, d: EdgeSet):
        """Vertices of odd degree in d, ascending"""
        counts = defaultdict(int)
        for e in d:
            u, v = self.endpoints[e]
            counts[u] += 1
            counts[v] += 1
        return sorted(v for v, c in counts.items() if c % 2)

    def check_edges(self, d: EdgeSet):
        stray = d.edges - self.edge_ids
        if stray:
            raise GraphError(f"edges {sorted(stray)} are not in the graph")

    def nx_multigraph(self):
        """Fresh networkx MultiGraph keyed by edge identity, weight = identity"""
        g = nx.MultiGraph()
        g.add_nodes_from(sorted(self.vertices))
        for e, u, v in self.edges:
            g.add_edge(u, v, key=e, weight=e)
        return g

    def simple(self, edges: Optional[EdgeSet] = None):
        """Fresh underlying simple networkx Graph, optionally restricted to some edges"""
        g = nx.Graph()
        g.add_nodes_from(sorted(self.vertices))
        for e, u, v in self.edges:
            if edges is None or e in edges:
                g.add_edge(u, v)
        return g

    def induced(self, keep):
        """Induced subgraph on keep; boundary marks are restricted to keep"""
        keep = frozenset(keep) & self.vertices
        triples = tuple(t for t in self.edges if t[1] in keep and t[2] in keep)
        return MultiGraph(keep, triples, self.boundary & keep)

    def without(self, removed):
        return self.induced(self.vertices - frozenset(removed))

    def edge_path(self, path):
        """Edge set of a vertex path, choosing the least parallel edge per step"""
        return EdgeSet(frozenset(min(self.edges_between(a, b)) for a, b in zip(path, path[1:])))


def components(g: MultiGraph):
    """
    Connected components

    Args:
        g (MultiGraph): Graph

    Returns:
        list: Frozensets of vertices, ordered by least vertex identity
    """
    parts = [frozenset(c) for c in nx.connected_components(g.simple())]
    return sorted(parts, key=min)


def is_connected(g: MultiGraph) -> bool:
    return len(components(g)) <= 1


def require_connected(g: MultiGraph):
    """Raise DisconnectedGraphError naming the least vertex outside the first component"""
    parts = components(g)
    if len(parts) > 1:
        raise DisconnectedGraphError(min(parts[1]))


def cut_from_bipartition(g: MultiGraph, side) -> EdgeSet:
    """
    All edges with exactly one endpoint in side

    Args:
        g (MultiGraph): Graph
        side (iterable): Vertex subset A

    Returns:
        EdgeSet: The cut E(A, V - A)

    Raises:
        GraphError: If side is not a subset of the vertices
    """
    side = frozenset(side)
    if not side <= g.vertices:
        raise GraphError(f"vertices {sorted(side - g.vertices)} are not in the graph")
    return EdgeSet(frozenset(e for e, u, v in g.edges if (u in side) != (v in side)))


def cut_side(g: MultiGraph, f: EdgeSet) -> Optional[frozenset]:
    """
    Reconstruct a side A with cut_from_bipartition(g, A) == f

    The least vertex of every component is put on side A.

    Returns:
        frozenset or None: A side, or None if f is not a cut
    """
    g.check_edges(f)
    side = {}
    for part in components(g):
        root = min(part)
        side[root] = True
        order = nx.bfs_tree(g.simple(), root).nodes
        for u in order:
            for e, w in g.incidence[u]:
                expected = side[u] != (e in f)
                if w not in side:
                    side[w] = expected
                elif side[w] != expected:
                    return None
    return frozenset(v for v, on_a in side.items() if on_a)


def is_cut(g: MultiGraph, f: EdgeSet) -> bool:
    return cut_side(g, f) is not None


def is_bond(g: MultiGraph, f: EdgeSet) -> bool:
    """
    True iff f is a minimal nonempty cut

    A nonempty cut is minimal exactly when deleting it raises the number of
    components by one.
    """
    if not f or cut_side(g, f) is None:
        return False
    remaining = g.simple(g.edge_set() - f)
    return nx.number_connected_components(remaining) == len(components(g)) + 1


def spanning_tree(g: MultiGraph) -> EdgeSet:
    """
    Edge set of a spanning tree

    Kruskal keyed on edge identity, so the least edge ids win.

    Raises:
        DisconnectedGraphError: If g is disconnected
    """
    require_connected(g)
    tree = nx.minimum_spanning_edges(g.nx_multigraph(), algorithm="kruskal", weight="weight",
                                     keys=True, data=False)
    tree = EdgeSet(frozenset(key for _, _, key in tree))
    logger.debug(f"spanning tree: {len(tree)} of {len(g.edges)} edges")
    return tree


def _tree_graph(g, tree):
    t = nx.Graph()
    t.add_nodes_from(sorted(g.vertices))
    for e in tree:
        u, v = g.endpoints[e]
        t.add_edge(u, v, id=e)
    return t


def fundamental_circuit(g: MultiGraph, tree: EdgeSet, chord: int) -> EdgeSet:
    """
    The unique circuit in tree + chord

    Raises:
        GraphError: If chord is a tree edge
    """
    if chord in tree:
        raise GraphError(f"edge {chord} is a tree edge, not a chord")
    t = _tree_graph(g, tree)
    u, v = g.endpoints[chord]
    path = nx.shortest_path(t, u, v)
    members = {t.edges[a, b]["id"] for a, b in zip(path, path[1:])}
    members.add(chord)
    return EdgeSet(frozenset(members))


def fundamental_cut(g: MultiGraph, tree: EdgeSet, tree_edge: int) -> EdgeSet:
    """
    The cut between the two components of tree - tree_edge

    Raises:
        GraphError: If tree_edge is not in the tree
    """
    if tree_edge not in tree:
        raise GraphError(f"edge {tree_edge} is not a tree edge")
    t = _tree_graph(g, tree)
    u, v = g.endpoints[tree_edge]
    t.remove_edge(u, v)
    return cut_from_bipartition(g, nx.node_connected_component(t, u))


def require_cut(g: MultiGraph, f: EdgeSet) -> frozenset:
    side = cut_side(g, f)
    if side is None:
        raise NotACutError(f"edge set {list(f.sorted())} is not a cut")
    return side


def from_networkx(h) -> MultiGraph:
    """
    Convert a networkx graph with integer-relabelled nodes

    Nodes are relabelled 0..n-1 in sorted order; edges get ids in the order of
    their sorted endpoint pairs.
    """
    order = {node: i for i, node in enumerate(sorted(h.nodes))}
    pairs = sorted(tuple(sorted((order[a], order[b]))) for a, b in h.edges())
    return MultiGraph.build(order.values(), ((i, u, v) for i, (u, v) in enumerate(pairs)))


def random_multigraph(rng, n, extra=None) -> MultiGraph:
    """
    Seeded random connected multigraph on n vertices

    A random recursive tree plus ``extra`` random non-loop edges, parallel
    edges allowed.

    Args:
        rng (numpy.random.Generator): Random source
        n (int): Number of vertices (>= 1)
        extra (int, optional): Extra edges; random in [0, n] when omitted
    """
    pairs = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    if extra is None:
        extra = int(rng.integers(0, n + 1))
    while n >= 2 and extra > 0:
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        pairs.append((min(u, v), max(u, v)))
        extra -= 1
    return MultiGraph.build(range(n), ((i, u, v) for i, (u, v) in enumerate(pairs)))
