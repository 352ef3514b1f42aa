# edgespace/generators.py

"""
Finitely presented infinite graphs and their finite windows.

A generator is a neighbour oracle on integer coordinate tuples plus end
metadata: canonical rays, the documented vertex-degree of each end, source
sequences for fan and linkage studies, and optionally a distinguished edge
set D given as a predicate on edge labels.

A window is the ball of radius r around the root. Vertex identities rank
vertices by (distance, coordinate) and edge identities rank edges by
(farther endpoint distance, nearer endpoint distance, endpoints, label), so a
vertex or edge keeps its identity in every window that contains it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional

import networkx as nx

from .edgeset import EdgeSet
from .exceptions import GraphError, RayError, UnknownGeneratorError
from .graph import MultiGraph, cut_from_bipartition

logger = logging.getLogger('edgespace.generators')


@dataclass(frozen=True)
class EndInfo:
    """
    Metadata for one end of a generator

    Attributes:
        name (str): End identifier
        ray (callable): ``ray(index)(n)`` is the n-th vertex of canonical ray ``index``
        ray_count (int or None): Number of pairwise disjoint canonical rays; None if unbounded
        vertex_degree (int or None): Documented vertex-degree; None if infinite
    """

    name: str
    ray: Callable
    ray_count: Optional[int]
    vertex_degree: Optional[int]


@dataclass(frozen=True)
class GeneratorGraph:
    """A locally finite infinite graph given by a neighbour oracle"""

    name: str
    quote: str
    root: tuple
    oracle: Callable
    ends: tuple
    d_predicate: Optional[Callable] = None
    fan_sources: Optional[Callable] = None
    linkage_pairs: Optional[Callable] = None
    notes: str = ""

    def neighbors(self, coord):
        """Sorted (label, neighbour) pairs of a vertex"""
        return self.oracle(coord)

    def end(self, name=None) -> EndInfo:
        if name is None:
            return self.ends[0]
        for info in self.ends:
            if info.name == name:
                return info
        raise RayError(f"generator {self.name} has no end '{name}'; ends: {[e.name for e in self.ends]}")

    @property
    def has_distinguished(self):
        return self.d_predicate is not None


@dataclass(frozen=True)
class Window:
    """
    Radius-r ball of a generator with stable identities

    Attributes:
        generator (str): Generator name
        radius (int): Ball radius
        graph (MultiGraph): Induced ball, boundary marked
        coords (tuple): Vertex identity -> generator coordinate
        labels (tuple): Edge identity -> generator edge label
        distances (tuple): Vertex identity -> distance from the root
        distinguished (EdgeSet): Window edges in D (empty without D)
    """

    generator: str
    radius: int
    graph: MultiGraph
    coords: tuple
    labels: tuple
    distances: tuple
    distinguished: EdgeSet = EdgeSet()

    @cached_property
    def vertex_of(self):
        return {c: v for v, c in enumerate(self.coords)}

    def vertex(self, coord) -> Optional[int]:
        return self.vertex_of.get(tuple(coord))

    def layer(self, d):
        """Vertices at distance exactly d"""
        return frozenset(v for v, dist in enumerate(self.distances) if dist == d)

    def ball(self, d):
        return frozenset(v for v, dist in enumerate(self.distances) if dist <= d)

    def labels_of(self, d: EdgeSet):
        return [self.labels[e] for e in d]


@dataclass(frozen=True)
class RayPath:
    """Maximal truncation of a canonical ray inside a window"""

    end: str
    index: int
    vertices: tuple
    coords: tuple

    def __len__(self):
        return len(self.vertices)

    def edge_set(self, g: MultiGraph) -> EdgeSet:
        return g.edge_path(self.vertices)


def window(gen: GeneratorGraph, r: int) -> Window:
    """
    Breadth-first ball of radius r around the root

    Boundary marks go on vertices with an oracle neighbour outside the ball.

    Args:
        gen (GeneratorGraph): Generator
        r (int): Radius, r >= 0

    Returns:
        Window: The induced ball with stable identities

    Raises:
        ValueError: If r is negative
    """
    if r < 0:
        raise ValueError(f"window radius must be non-negative, got {r}")
    dist = {gen.root: 0}
    frontier = [gen.root]
    for d in range(1, r + 1):
        layer = set()
        for c in frontier:
            for _, w in gen.oracle(c):
                if w not in dist:
                    dist[w] = d
                    layer.add(w)
        frontier = sorted(layer)

    coords = tuple(sorted(dist, key=lambda c: (dist[c], c)))
    ids = {c: v for v, c in enumerate(coords)}
    keyed = {}
    boundary = set()
    for c in coords:
        for label, w in gen.oracle(c):
            if w not in dist:
                boundary.add(ids[c])
            elif label not in keyed:
                a, b = sorted((c, w))
                keyed[label] = ((max(dist[a], dist[b]), min(dist[a], dist[b]), a, b, label), a, b)
    ordered = sorted(keyed.values())
    labels = tuple(key[-1] for key, _, _ in ordered)
    edges = tuple((e, ids[a], ids[b]) for e, (_, a, b) in enumerate(ordered))
    g = MultiGraph.build(range(len(coords)), edges, boundary)
    distinguished = EdgeSet()
    if gen.d_predicate is not None:
        distinguished = EdgeSet(frozenset(e for e, label in enumerate(labels) if gen.d_predicate(label)))
    logger.debug(f"{gen.name} window r={r}: {len(coords)} vertices, {len(labels)} edges, "
                 f"{len(boundary)} boundary")
    return Window(gen.name, r, g, coords, labels, tuple(dist[c] for c in coords), distinguished)


def truncate_coords(w: Window, ray_fn: Callable, end="", index=0) -> RayPath:
    """
    Longest prefix of a coordinate sequence that stays inside the window

    Raises:
        RayError: If the sequence starts outside the window
    """
    vertices, coords = [], []
    n = 0
    while True:
        coord = ray_fn(n)
        v = w.vertex(coord)
        if v is None:
            break
        vertices.append(v)
        coords.append(coord)
        n += 1
    if not vertices:
        raise RayError(f"ray {end}[{index}] starts outside the radius-{w.radius} window; increase r")
    return RayPath(end, index, tuple(vertices), tuple(coords))


def _window_for(gen, r, w):
    return w if w is not None else window(gen, r)


def truncate_ray(gen: GeneratorGraph, end, index: int, r: int, w: Optional[Window] = None) -> RayPath:
    """
    Canonical ray ``index`` of an end, cut to the window

    Raises:
        RayError: If the end has no such ray or its origin lies outside the window
    """
    info = gen.end(end)
    if index < 0 or (info.ray_count is not None and index >= info.ray_count):
        raise RayError(f"end {info.name} of {gen.name} has {info.ray_count} canonical rays, "
                       f"no ray {index}")
    return truncate_coords(_window_for(gen, r, w), info.ray(index), info.name, index)


def disjoint_rays(gen: GeneratorGraph, end, count: int, r: int, w: Optional[Window] = None):
    """
    The first count canonical rays of an end, truncated to the window

    Returns:
        list: Pairwise vertex-disjoint RayPaths

    Raises:
        RayError: If the generator cannot supply count disjoint rays
    """
    info = gen.end(end)
    if info.ray_count is not None and count > info.ray_count:
        raise RayError(f"end {info.name} of {gen.name} has vertex-degree {info.vertex_degree}; "
                       f"cannot supply {count} disjoint rays")
    w = _window_for(gen, r, w)
    rays = [truncate_ray(gen, info.name, i, r, w) for i in range(count)]
    seen = set()
    for ray in rays:
        if seen & set(ray.vertices):
            raise RayError(f"canonical rays of {gen.name} intersect inside the radius-{w.radius} window")
        seen.update(ray.vertices)
    return rays


def component_CS(gen: GeneratorGraph, r: int, S, end=None, w: Optional[Window] = None) -> frozenset:
    """
    The component of window(r) - S holding a tail of the end's canonical ray

    Args:
        gen (GeneratorGraph): Generator
        r (int): Window radius
        S (iterable): Window vertex identities to delete
        end (str, optional): End name; the first end when omitted
        w (Window, optional): Prebuilt window of radius r

    Returns:
        frozenset: Vertex identities of C(S, end) inside the window

    Raises:
        GraphError: If S is not inside the window
        RayError: If S absorbs the canonical ray inside the window
    """
    w = _window_for(gen, r, w)
    S = frozenset(S)
    if not S <= w.graph.vertices:
        raise GraphError(f"vertices {sorted(S - w.graph.vertices)} are not in the window")
    ray = truncate_ray(gen, end, 0, r, w)
    last = max((i for i, v in enumerate(ray.vertices) if v in S), default=-1)
    tail = ray.vertices[last + 1:]
    if not tail:
        raise RayError(f"canonical ray of {gen.name} is absorbed by S inside the "
                       f"radius-{w.radius} window; increase r")
    h = w.graph.without(S)
    return frozenset(nx.node_connected_component(h.simple(), tail[-1]))


def sources_in_window(w: Window, sequence: Optional[Callable]):
    """Window identities of a source sequence, stopping at the first one outside"""
    found = []
    if sequence is None:
        return found
    i = 0
    while True:
        v = w.vertex(sequence(i))
        if v is None:
            return found
        found.append(v)
        i += 1


def pairs_in_window(w: Window, sequence: Optional[Callable]):
    """Window identities of a pair sequence, stopping at the first pair not inside"""
    found = []
    if sequence is None:
        return found
    i = 0
    while True:
        x, y = (w.vertex(c) for c in sequence(i))
        if x is None or y is None:
            return found
        found.append((x, y))
        i += 1


# ladder: vertices (i, s), s in {0, 1}; rail (0, i, s) joins (i, s)-(i+1, s); rung (1, i)

def _ladder_oracle(v):
    i, s = v
    out = [((1, i), (i, 1 - s)), ((0, i, s), (i + 1, s))]
    if i > 0:
        out.append(((0, i - 1, s), (i - 1, s)))
    return tuple(sorted(out))


def _rail(s):
    return lambda n: (n, s)


# subdivided ladder: every rung (i, 0)-(i, 1) becomes (i, 0)-(i, 2)-(i, 1)

def _subdivided_ladder_oracle(v):
    i, s = v
    if s == 2:
        return (((1, i, 0), (i, 0)), ((1, i, 1), (i, 1)))
    out = [((1, i, s), (i, 2)), ((0, i, s), (i + 1, s))]
    if i > 0:
        out.append(((0, i - 1, s), (i - 1, s)))
    return tuple(sorted(out))


def _is_half_rung(label):
    return label[0] == 1


def zigzag_ray(n):
    """Ray of the subdivided ladder crossing every subdivided rung in turn"""
    i, pos = divmod(n, 3)
    s = i % 2
    return ((i, s), (i, 2), (i, 1 - s))[pos]


def zigzag_truncation(w: Window) -> tuple:
    """
    Zigzag ray cut to the window, ending on a rail vertex

    Returns:
        tuple: (RayPath, number of subdivided rungs crossed)
    """
    ray = truncate_coords(w, zigzag_ray, "zigzag", 0)
    keep = len(ray.vertices)
    while keep > 1 and ray.coords[keep - 1][1] == 2:
        keep -= 1
    crossed = sum(1 for c in ray.coords[:keep] if c[1] == 2)
    return RayPath(ray.end, 0, ray.vertices[:keep], ray.coords[:keep]), crossed


# N x Z grid: vertices (x, y), x >= 0; (0, x, y) joins (x, y)-(x+1, y); (1, x, y) joins (x, y)-(x, y+1)

def _grid_oracle(v):
    x, y = v
    out = [((0, x, y), (x + 1, y)), ((1, x, y), (x, y + 1)), ((1, x, y - 1), (x, y - 1))]
    if x > 0:
        out.append(((0, x - 1, y), (x - 1, y)))
    return tuple(sorted(out))


def _column(x):
    return lambda n: (x, n)


# doubled grid: grid vertices (x, y, 0); the doubled copy of (0, y)-(0, y+1) is
# subdivided by (0, y, 1) with halves (2, y, 0) and (2, y, 1)

def _doubled_grid_oracle(v):
    x, y, t = v
    if t == 1:
        return (((2, y, 0), (0, y, 0)), ((2, y, 1), (0, y + 1, 0)))
    out = [(label, (a, b, 0)) for label, (a, b) in _grid_oracle((x, y))]
    if x == 0:
        out.append(((2, y, 0), (0, y, 1)))
        out.append(((2, y - 1, 1), (0, y - 1, 1)))
    return tuple(sorted(out))


def _in_triangle(label):
    return label[0] == 2 or (label[0] == 1 and label[1] == 0)


def _doubled_column(x):
    return lambda n: (x, n, 0)


def nonbond_cut_side(w: Window) -> frozenset:
    """Column-0 grid vertices of a doubled-grid window: one side of a non-bond cut"""
    return frozenset(v for v, c in enumerate(w.coords) if c[0] == 0 and c[2] == 0)


def nonbond_cut(w: Window) -> EdgeSet:
    return cut_from_bipartition(w.graph, nonbond_cut_side(w))


# grid with the column-0 edges doubled but left unsubdivided; (3, y) parallels (1, 0, y)

def _doubled_grid_multi_oracle(v):
    x, y = v
    out = list(_grid_oracle(v))
    if x == 0:
        out.append(((3, y), (0, y + 1)))
        out.append(((3, y - 1), (0, y - 1)))
    return tuple(sorted(out))


# clique chain: clique m has m vertices; (m, 0) and (m+1, 0) are its cutvertices,
# (m, j) for 1 <= j <= m-2 its private vertices; clique 1 is the root (2, 0)

def _clique_members(m):
    if m == 1:
        return ((2, 0),)
    return ((m, 0),) + tuple((m, j) for j in range(1, m - 1)) + ((m + 1, 0),)


def _cliques_of(v):
    i, j = v
    if j == 0:
        return tuple(m for m in (i - 1, i) if m >= 1)
    return (i,)


def _clique_chain_oracle(v):
    out = []
    for m in _cliques_of(v):
        for w in _clique_members(m):
            if w != v:
                a, b = sorted((v, w))
                out.append(((m,) + a + b, w))
    return tuple(sorted(out))


def _clique_ray(index):
    if index != 0:
        raise RayError("the clique chain has a single canonical ray")

    def ray(n):
        m = 2
        while True:
            stop = [(m, 0)] + [(m, j) for j in range(1, min(2, m - 2) + 1)]
            if n < len(stop):
                return stop[n]
            n -= len(stop)
            m += 1
    return ray


def generator_catalog():
    """
    Every built-in generator, in catalog order

    Returns:
        list: GeneratorGraph instances
    """
    return [
        GeneratorGraph(
            name="ladder",
            quote="the infinite ladder H",
            root=(0, 0),
            oracle=_ladder_oracle,
            ends=(EndInfo("top", _rail, 2, 2),),
            fan_sources=lambda i: (i + 1, 1),
            linkage_pairs=lambda i: ((3 * i, 0), (3 * i, 1)),
            notes="one end of vertex-degree 2; canonical rays are the rails",
        ),
        GeneratorGraph(
            name="subdivided_ladder",
            quote="obtained from H by subdividing every edge in B",
            root=(0, 0),
            oracle=_subdivided_ladder_oracle,
            ends=(EndInfo("top", _rail, 2, 2),),
            d_predicate=_is_half_rung,
            fan_sources=lambda i: (i, 2),
            linkage_pairs=lambda i: ((3 * i, 0), (3 * i, 1)),
            notes="B is the set of all rungs; D = edges incident with subdivision vertices",
        ),
        GeneratorGraph(
            name="grid_NZ",
            quote="the N x Z grid",
            root=(0, 0),
            oracle=_grid_oracle,
            ends=(EndInfo("infinity", _column, None, None),),
            fan_sources=lambda i: (1, i),
            linkage_pairs=lambda i: ((0, 3 * i), (1, 3 * i)),
            notes="one end of infinite vertex-degree; canonical rays are upward columns",
        ),
        GeneratorGraph(
            name="doubled_grid",
            quote="doubling every edge between two vertices of degree 3 and subdividing all the new edges",
            root=(0, 0, 0),
            oracle=_doubled_grid_oracle,
            ends=(EndInfo("infinity", _doubled_column, None, None),),
            d_predicate=_in_triangle,
            fan_sources=lambda i: (1, i, 0),
            linkage_pairs=lambda i: ((0, 3 * i, 0), (1, 3 * i, 0)),
            notes="D = edges that lie in a triangle; column-0 grid vertices side a non-bond cut",
        ),
        GeneratorGraph(
            name="doubled_grid_multi",
            quote="doubling every edge between two vertices of degree 3",
            root=(0, 0),
            oracle=_doubled_grid_multi_oracle,
            ends=(EndInfo("infinity", _column, None, None),),
            fan_sources=lambda i: (1, i),
            linkage_pairs=lambda i: ((0, 3 * i), (1, 3 * i)),
            notes="column-0 edges doubled as parallel pairs, not subdivided",
        ),
        GeneratorGraph(
            name="clique_chain",
            quote="union of complete graphs K1, K2, ... each meeting the next in exactly one vertex",
            root=(2, 0),
            oracle=_clique_chain_oracle,
            ends=(EndInfo("infinity", _clique_ray, 1, 1),),
            fan_sources=lambda i: (i + 5, 3),
            linkage_pairs=lambda i: ((2 * i + 3, 0), (2 * i + 4, 0)),
            notes="one end of vertex-degree 1, k-padded for every k",
        ),
    ]


def generator_names():
    return [gen.name for gen in generator_catalog()]


def get_generator(name: str) -> GeneratorGraph:
    """
    Look up a generator by name

    Raises:
        UnknownGeneratorError: If the name is not in the catalog
    """
    for gen in generator_catalog():
        if gen.name == name:
            return gen
    raise UnknownGeneratorError(name, generator_names())
