# edgespace/graphfile.py

"""
Plain-text graph files.

    graph <name>
    # boundary 3 4 5
    v <int>
    e <edge id> <endpoint> <endpoint>
    d <edge id>

Lines starting with ``#`` are comments; a ``# boundary`` comment carries the
window boundary marks. Serialization is canonical (sorted identities), so
parsing a serialized file gives the same GraphFile back.
"""

import logging
from dataclasses import dataclass

from .edgeset import EdgeSet
from .exceptions import GraphFormatError
from .graph import MultiGraph

logger = logging.getLogger('edgespace.graphfile')

BOUNDARY_PREFIX = "boundary"


@dataclass(frozen=True)
class GraphFile:
    name: str
    graph: MultiGraph
    distinguished: EdgeSet = EdgeSet()
    comments: tuple = ()


def _ints(tokens, line_number):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(line_number, f"expected integers, got '{' '.join(tokens)}'")


def parse_graph(text: str) -> GraphFile:
    """
    Parse graph file text

    Args:
        text (str): File contents

    Returns:
        GraphFile: Parsed graph with distinguished set and comments

    Raises:
        GraphFormatError: On any malformed or inconsistent line
    """
    name = None
    vertices, edges, marks = {}, {}, {}
    boundary, comments = set(), []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            tokens = body.split()
            if tokens and tokens[0] == BOUNDARY_PREFIX:
                boundary.update((v, number) for v in _ints(tokens[1:], number))
            else:
                comments.append(body)
            continue
        kind, *tokens = line.split()
        if kind == "graph":
            if name is not None:
                raise GraphFormatError(number, "second 'graph' header")
            if len(tokens) != 1:
                raise GraphFormatError(number, "header must be 'graph <name>'")
            name = tokens[0]
            continue
        if name is None:
            raise GraphFormatError(number, "file must start with 'graph <name>'")
        if kind == "v":
            if len(tokens) != 1:
                raise GraphFormatError(number, "vertex line must be 'v <int>'")
            (v,) = _ints(tokens, number)
            if v in vertices:
                raise GraphFormatError(number, f"duplicate vertex {v}")
            vertices[v] = number
        elif kind == "e":
            if len(tokens) != 3:
                raise GraphFormatError(number, "edge line must be 'e <id> <endpoint> <endpoint>'")
            e, u, v = _ints(tokens, number)
            if e in edges:
                raise GraphFormatError(number, f"duplicate edge identity {e}")
            if u == v:
                raise GraphFormatError(number, f"edge {e} is a loop at vertex {u}")
            edges[e] = (u, v, number)
        elif kind == "d":
            if len(tokens) != 1:
                raise GraphFormatError(number, "distinguished line must be 'd <edge id>'")
            (e,) = _ints(tokens, number)
            marks[e] = number
        else:
            raise GraphFormatError(number, f"unknown line type '{kind}'")
    if name is None:
        raise GraphFormatError(1, "missing 'graph <name>' header")

    for e, (u, v, number) in sorted(edges.items()):
        for end in (u, v):
            if end not in vertices:
                raise GraphFormatError(number, f"edge {e} uses undeclared vertex {end}")
    for e, number in sorted(marks.items()):
        if e not in edges:
            raise GraphFormatError(number, f"distinguished edge {e} is not in the graph")
    for v, number in sorted(boundary):
        if v not in vertices:
            raise GraphFormatError(number, f"boundary vertex {v} is not declared")

    graph = MultiGraph.build(vertices, ((e, u, v) for e, (u, v, _) in edges.items()), {v for v, _ in boundary})
    return GraphFile(name, graph, EdgeSet(frozenset(marks)), tuple(comments))


def serialize_graph(gf: GraphFile) -> str:
    """Canonical text form: header, comments, boundary, then sorted v, e and d lines"""
    g = gf.graph
    lines = [f"graph {gf.name}"]
    lines.extend(f"# {c}" if c else "#" for c in gf.comments)
    if g.boundary:
        lines.append(f"# {BOUNDARY_PREFIX} " + " ".join(str(v) for v in sorted(g.boundary)))
    lines.extend(f"v {v}" for v in sorted(g.vertices))
    lines.extend(f"e {e} {u} {v}" for e, u, v in g.edges)
    lines.extend(f"d {e}" for e in gf.distinguished)
    return "\n".join(lines) + "\n"


def read_graph_file(path) -> GraphFile:
    with open(path, "r") as f:
        return parse_graph(f.read())


def write_graph_file(path, gf: GraphFile):
    with open(path, "w", newline="\n") as f:
        f.write(serialize_graph(gf))
    logger.info(f"Wrote graph {gf.name} to {path}")


def window_to_graphfile(w) -> GraphFile:
    """Graph file for a generator window, with its D set as d-lines"""
    comments = (f"generator {w.generator} radius {w.radius}",
                f"{len(w.graph.vertices)} vertices {len(w.graph.edges)} edges")
    return GraphFile(f"{w.generator}-r{w.radius}", w.graph, w.distinguished, comments)


def parse_edge_list(text: str) -> EdgeSet:
    """
    Edge identities from a --set value or a file of d-lines

    Accepts comma or whitespace separated integers, optionally prefixed
    by ``d`` per line; comments are skipped.

    Raises:
        GraphFormatError: On a token that is not an integer
    """
    ids = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].replace(",", " ").split()
        if line and line[0] == "d":
            line = line[1:]
        ids.extend(_ints(line, number))
    return EdgeSet(frozenset(ids))
