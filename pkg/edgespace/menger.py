# edgespace/menger.py

"""
Vertex-disjoint paths, k-fans and k-linkages via unit vertex capacities.

Every vertex v is split into ("in", v) -> ("out", v) with capacity 1 and the
flow runs with Edmonds-Karp. Paths are read back from the flow in sorted
order, so results are reproducible.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .exceptions import GraphError
from .graph import MultiGraph

logger = logging.getLogger('edgespace.menger')

SOURCE = ("source",)
SINK = ("sink",)


@dataclass(frozen=True)
class PathFamily:
    """Maximum family of disjoint X-Y paths with its Menger separator"""

    paths: tuple
    separator: frozenset

    def __len__(self):
        return len(self.paths)


@dataclass(frozen=True)
class Fan:
    """k paths from center to a target set, disjoint apart from the center"""

    center: int
    paths: tuple

    @property
    def k(self):
        return len(self.paths)

    @property
    def vertices(self):
        return frozenset(v for p in self.paths for v in p) | {self.center}

    def is_valid(self, g: MultiGraph, targets) -> bool:
        targets = frozenset(targets)
        inner = set()
        for path in self.paths:
            if len(path) < 2 or path[0] != self.center or path[-1] not in targets:
                return False
            if any(v in targets for v in path[:-1]):
                return False
            if any(b not in g.neighbors(a) for a, b in zip(path, path[1:])):
                return False
            rest = path[1:]
            if inner & set(rest) or len(set(rest)) != len(rest):
                return False
            inner.update(rest)
        return True


@dataclass(frozen=True)
class Linkage:
    """k internally disjoint x-y paths"""

    endpoints: tuple
    paths: tuple

    @property
    def k(self):
        return len(self.paths)

    @property
    def vertices(self):
        return frozenset(v for p in self.paths for v in p)

    def is_valid(self, g: MultiGraph) -> bool:
        x, y = self.endpoints
        inner = set()
        for path in self.paths:
            if path[0] != x or path[-1] != y or len(set(path)) != len(path):
                return False
            if any(b not in g.neighbors(a) for a, b in zip(path, path[1:])):
                return False
            middle = set(path[1:-1])
            if inner & middle:
                return False
            inner |= middle
        return len({tuple(p) for p in self.paths}) == len(self.paths)


@dataclass(frozen=True)
class FanSearch:
    """Outcome of a fan search: the fan, or the separator that blocks it"""

    center: int
    k: int
    fan: Optional[Fan]
    separator: frozenset
    degree: int


def _network(g, forbidden, unbounded=(), skip_edges=()):
    big = len(g.vertices) + 1
    net = nx.DiGraph()
    for v in sorted(g.vertices - frozenset(forbidden)):
        net.add_edge(("in", v), ("out", v), capacity=big if v in unbounded else 1)
    for _, u, v in g.edges:
        if u in forbidden or v in forbidden or (u, v) in skip_edges:
            continue
        net.add_edge(("out", u), ("in", v), capacity=big)
        net.add_edge(("out", v), ("in", u), capacity=big)
    return net, big


def _flow_paths(flow):
    """Decompose an integral flow into SOURCE-SINK vertex paths."""
    remaining = {u: {v: f for v, f in sorted(out.items()) if f > 0} for u, out in flow.items()}
    paths = []
    while remaining.get(SOURCE):
        walk = [SOURCE]
        while walk[-1] != SINK:
            node = walk[-1]
            nxt = next(iter(remaining[node]))
            remaining[node][nxt] -= 1
            if remaining[node][nxt] == 0:
                del remaining[node][nxt]
            if nxt in walk:
                del walk[walk.index(nxt) + 1:]
            else:
                walk.append(nxt)
        vertices = []
        for node in walk[1:-1]:
            if not vertices or vertices[-1] != node[1]:
                vertices.append(node[1])
        paths.append(vertices)
    return paths


def _order(paths):
    return tuple(sorted((tuple(p) for p in paths), key=lambda p: (len(p), p)))


def vertex_disjoint_paths(g: MultiGraph, xs, ys, forbidden=()) -> PathFamily:
    """
    Maximum family of pairwise vertex-disjoint X-Y paths avoiding forbidden

    Each path meets X only at its first and Y only at its last vertex. The
    returned separator is a minimum X-Y vertex separator of the same size.

    Args:
        g (MultiGraph): Graph (parallel edges are irrelevant here)
        xs (iterable): Source set X, nonempty
        ys (iterable): Target set Y, nonempty
        forbidden (iterable, optional): Vertices no path may use

    Returns:
        PathFamily: Paths sorted by (length, vertices) and the separator

    Raises:
        GraphError: If X or Y is empty, or forbidden meets X or Y
    """
    xs, ys, forbidden = frozenset(xs), frozenset(ys), frozenset(forbidden)
    if not xs or not ys:
        raise GraphError("vertex_disjoint_paths needs nonempty X and Y")
    if forbidden & (xs | ys):
        raise GraphError(f"forbidden vertices {sorted(forbidden & (xs | ys))} meet X or Y")
    net, big = _network(g, forbidden)
    for x in sorted(xs):
        net.add_edge(SOURCE, ("in", x), capacity=big)
    for y in sorted(ys):
        net.add_edge(("out", y), SINK, capacity=big)

    value, flow = nx.maximum_flow(net, SOURCE, SINK, flow_func=edmonds_karp)
    _, (reach, _) = nx.minimum_cut(net, SOURCE, SINK, flow_func=edmonds_karp)
    separator = frozenset(v for v in g.vertices - forbidden
                          if ("in", v) in reach and ("out", v) not in reach)

    paths = []
    for raw in _flow_paths(flow):
        last = min(i for i, v in enumerate(raw) if v in ys)
        raw = raw[:last + 1]
        first = max(i for i, v in enumerate(raw) if v in xs)
        paths.append(raw[first:])
    logger.debug(f"menger |X|={len(xs)} |Y|={len(ys)}: {value} paths, separator {sorted(separator)}")
    return PathFamily(_order(paths), separator)


def fan_search(g: MultiGraph, center, targets, k: int) -> FanSearch:
    """
    Look for a k-fan from center to targets

    The paths run from the neighbourhood of center to targets in g - center;
    the separator certifies the maximum fan size when no k-fan exists.

    Args:
        g (MultiGraph): Graph
        center (int): Fan center
        targets (iterable): Target vertices; those outside g are ignored
        k (int): Number of paths wanted

    Returns:
        FanSearch: The fan (None if blocked), the separator and the center degree

    Raises:
        GraphError: If center lies in targets
    """
    targets = frozenset(targets) & g.vertices
    if center in targets:
        raise GraphError(f"fan center {center} lies in the target set")
    degree = len(g.neighbors(center))
    if not targets or degree == 0:
        return FanSearch(center, k, None, frozenset(), degree)
    family = vertex_disjoint_paths(g, g.neighbors(center), targets, forbidden={center})
    if len(family) < k:
        return FanSearch(center, k, None, family.separator, degree)
    paths = tuple((center,) + p for p in family.paths[:k])
    return FanSearch(center, k, Fan(center, paths), family.separator, degree)


def k_fan(g: MultiGraph, center, targets, k: int) -> Optional[Fan]:
    """A k-fan from center to targets, or None"""
    return fan_search(g, center, targets, k).fan


def k_linkage(g: MultiGraph, x, y, k: int) -> Optional[Linkage]:
    """
    k internally disjoint x-y paths, or None

    A direct x-y edge counts as one path; the rest come from a flow with
    unit capacity on every other vertex.

    Args:
        g (MultiGraph): Graph
        x (int): First endpoint
        y (int): Second endpoint
        k (int): Number of paths wanted

    Returns:
        Linkage or None: The k shortest paths found, or None if fewer exist

    Raises:
        GraphError: If x == y
    """
    if x == y:
        raise GraphError("a linkage needs distinct endpoints")
    paths = []
    adjacent = y in g.neighbors(x)
    if adjacent:
        paths.append((x, y))
    skip = {(min(x, y), max(x, y))} if adjacent else set()
    net, big = _network(g, (), unbounded={x, y}, skip_edges=skip)
    net.add_edge(SOURCE, ("out", x), capacity=big)
    net.add_edge(("in", y), SINK, capacity=big)
    _, flow = nx.maximum_flow(net, SOURCE, SINK, flow_func=edmonds_karp)
    paths.extend(_flow_paths(flow))
    paths = _order(paths)
    if len(paths) < k:
        return None
    return Linkage((x, y), paths[:k])


def max_disjoint_fans(g: MultiGraph, sources: Sequence, targets, k: int):
    """
    Greedy family of pairwise disjoint k-fans with distinct centers

    Sources are processed in order; each fan is searched in g minus the
    vertices of the fans already taken.

    Args:
        g (MultiGraph): Graph
        sources (sequence): Candidate centers, in priority order
        targets (iterable): Target vertices shared by every fan
        k (int): Paths per fan

    Returns:
        list: Fans in source order
    """
    return greedy_fans(g, sources, targets, k)[0]


def greedy_fans(g: MultiGraph, sources: Sequence, targets, k: int):
    """
    Same greedy as max_disjoint_fans, keeping every search outcome

    Returns:
        tuple: (fans, searches) where searches holds one FanSearch per source tried
    """
    targets = frozenset(targets)
    used = set()
    fans, searches = [], []
    for source in sources:
        if source in used or source not in g.vertices:
            continue
        h = g.without(used)
        search = fan_search(h, source, targets - used, k)
        searches.append(search)
        if search.fan is not None:
            fans.append(search.fan)
            used |= search.fan.vertices
    logger.debug(f"max_disjoint_fans k={k}: {len(fans)} fans from {len(searches)} sources")
    return fans, searches


def max_disjoint_linkages(g: MultiGraph, pairs: Sequence, k: int):
    """
    Greedy family of pairwise disjoint k-linkages, one per (x, y) pair in order

    Pairs touching a vertex already used, or missing from g, are skipped.

    Args:
        g (MultiGraph): Graph
        pairs (sequence): (x, y) endpoint pairs
        k (int): Paths per linkage

    Returns:
        list: Linkages in pair order
    """
    used = set()
    linkages = []
    for x, y in pairs:
        if x in used or y in used or x not in g.vertices or y not in g.vertices:
            continue
        linkage = k_linkage(g.without(used), x, y, k)
        if linkage is not None:
            linkages.append(linkage)
            used |= linkage.vertices
    return linkages
