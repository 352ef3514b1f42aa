# edgespace/verify.py

"""
Experiments over finite graphs and generator windows.

Every experiment returns a Report. Statements about infinite graphs are
checked on windows: an infinite intersection becomes a strictly increasing
series over radii with a closed-form witness family, and the reports say so.
Independent radii may run on a thread pool; results keep radius order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import networkx as nx
import numpy as np

from .config import (DEFAULT_CIRCUIT_LENGTH, DEFAULT_CORPUS_SAMPLES, DEFAULT_CORPUS_VERTICES,
                     DEFAULT_EXHAUSTIVE_EDGES, DEFAULT_RANDOM_GRAPHS, DEFAULT_RANDOM_VERTICES,
                     DEFAULT_SAMPLE_COUNT, DEFAULT_SEARCH_DEPTH, DEFAULT_SEED, DEFAULT_SIDE_SIZE,
                     DEFAULT_WINDOW_PADDING, DEFAULT_WORKERS)
from .edgeset import EdgeSet, dense_rank, gaussian_basis, in_span, is_orthogonal, orthogonal_complement, \
    random_span_element, same_span, span_elements
from .exceptions import EdgeSpaceError, RayError
from .generators import (component_CS, disjoint_rays, get_generator, nonbond_cut, nonbond_cut_side,
                         pairs_in_window, sources_in_window, truncate_ray, window, zigzag_truncation)
from .graph import cut_from_bipartition, from_networkx, is_bond, random_multigraph, require_connected
from .menger import fan_search, greedy_fans, max_disjoint_linkages, vertex_disjoint_paths
from .models import Report, Verdict
from .spaces import (SpaceTag, circuits_up_to, cut_space_basis, cycle_space_basis, enumerate_bonds,
                     enumerate_circuits, is_circuit, membership, peel_minimal_decomposition)

logger = logging.getLogger('edgespace.verify')

EXPERIMENT_NAMES = ("duality_finite", "cor_finite", "ce_bond", "ce_ctop", "ce_calg", "fan_growth",
                    "padded", "end_degree", "theorem_window")

FINITE_EVIDENCE = "window-scale evidence for a statement about an infinite graph, not a proof"


def _map_radii(fn, radii, workers=DEFAULT_WORKERS):
    """Apply fn to every radius, in radius order"""
    radii = list(radii)
    if workers and workers > 1 and len(radii) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, radii))
    return [fn(r) for r in radii]


def _non_decreasing(series):
    return len(series) < 2 or bool(np.all(np.diff(np.asarray(series)) >= 0))


def _strictly_increasing(series):
    return len(series) < 2 or bool(np.all(np.diff(np.asarray(series)) > 0))


def _first_drop(series, radii):
    for i in range(1, len(series)):
        if series[i] < series[i - 1]:
            return {"radius": radii[i], "value": series[i], "previous": series[i - 1]}
    return None


def _require_generator(gen, expected):
    gen = gen if gen is not None else get_generator(expected)
    if gen.name != expected:
        raise EdgeSpaceError(f"this experiment runs on {expected}, not {gen.name}")
    return gen


def _span_witness(first, second):
    for v in first:
        if in_span(second, v) is None:
            return v
    for v in second:
        if in_span(first, v) is None:
            return v
    return None


def verify_duality_finite(g, bound=None, name="input") -> Report:
    """
    Check the finite duality identities on a connected graph

    C_fin = B-perp and B = C_fin-perp by span equality, dim C + dim B = |E|,
    the incidence matrix rank, that circuits and bonds span their spaces, and
    that every circuit is orthogonal to every bond.

    Args:
        g (MultiGraph): Connected graph within the brute-force bound
        bound (int, optional): Vertex bound override
        name (str): Graph name for the report

    Returns:
        Report: duality_finite report

    Raises:
        DisconnectedGraphError: If g is disconnected
        BoundExceededError: If g exceeds the bound
    """
    report = Report("duality_finite", {"graph": name, "vertices": len(g.vertices), "edges": len(g.edges)})
    require_connected(g)
    bonds = enumerate_bonds(g, bound)
    circuits = enumerate_circuits(g, bound)
    cycle = cycle_space_basis(g)
    cut = cut_space_basis(g)

    witness = _span_witness(cycle, orthogonal_complement(cut))
    report.add(Verdict.check("cycle_space_is_cut_space_perp", witness is None, witness))
    witness = _span_witness(cut, orthogonal_complement(cycle))
    report.add(Verdict.check("cut_space_is_cycle_space_perp", witness is None, witness))

    dims = {"cycle": cycle.dimension, "cut": cut.dimension, "edges": len(g.edges)}
    report.add(Verdict.check("dimensions_sum_to_edges", dims["cycle"] + dims["cut"] == dims["edges"], dims))

    rank = dense_rank([g.star(v) for v in sorted(g.vertices)], sorted(g.edge_ids))
    rank_ok = rank == len(g.vertices) - 1 == cut.dimension
    report.add(Verdict.check("incidence_rank", rank_ok, {"rank": rank, "cut_dimension": cut.dimension}))

    circuit_span = gaussian_basis(circuits, g.edge_ids)
    report.add(Verdict.check("circuits_span_cycle_space", same_span(circuit_span, cycle),
                             {"circuit_rank": circuit_span.dimension, "dimension": cycle.dimension}))
    bond_span = gaussian_basis(bonds, g.edge_ids)
    report.add(Verdict.check("bonds_span_cut_space", same_span(bond_span, cut),
                             {"bond_rank": bond_span.dimension, "dimension": cut.dimension}))

    odd = next(({"circuit": c, "bond": b} for c in circuits for b in bonds if not is_orthogonal(c, b)), None)
    report.add(Verdict.check("circuits_orthogonal_to_bonds", odd is None, odd))

    report.observe("dimensions", dims)
    report.observe("circuits", len(circuits))
    report.observe("bonds", len(bonds))
    logger.debug(f"duality {name}: {report.status} ({len(circuits)} circuits, {len(bonds)} bonds)")
    return report


def _first_odd(elements, d):
    return next((x for x in elements if not is_orthogonal(x, d)), None)


def verify_minimal_orthogonality_finite(g, d: EdgeSet, bound=None, name="input") -> Report:
    """
    Orthogonality to minimal elements against orthogonality to the space

    Checks both biconditionals: d is orthogonal to every bond iff it is
    orthogonal to B, and to every circuit iff it is orthogonal to C_fin. The
    space side is tested against a basis. Which way each side came out is
    recorded in the observations.

    Raises:
        DisconnectedGraphError: If g is disconnected
        BoundExceededError: If g exceeds the bound
    """
    report = Report("cor_finite", {"graph": name, "set": d})
    require_connected(g)
    g.check_edges(d)
    bonds = enumerate_bonds(g, bound)
    circuits = enumerate_circuits(g, bound)

    for minimal, basis, label in ((bonds, cut_space_basis(g), "bonds"),
                                  (circuits, cycle_space_basis(g), "circuits")):
        odd_minimal = _first_odd(minimal, d)
        odd_space = _first_odd(basis, d)
        space = "cut_space" if label == "bonds" else "cycle_space"
        agree = (odd_minimal is None) == (odd_space is None)
        witness = {"minimal": odd_minimal, "space": odd_space}
        report.add(Verdict.check(f"{label}_iff_{space}", agree, witness))
        report.observe(f"orthogonal_to_{label}", odd_minimal is None)
        report.observe(f"orthogonal_to_{space}", odd_space is None)
        if odd_minimal is not None:
            report.observe(f"odd_{label[:-1]}", odd_minimal)

    report.observe("member_of", {tag.value: membership(tag, g, d).member for tag in (SpaceTag.C_FIN, SpaceTag.B)})
    return report


def connected_interior_sets(g, max_size):
    """
    Connected vertex sets of size <= max_size avoiding the boundary

    Returns:
        list: Frozensets sorted by (size, sorted members)
    """
    interior = g.interior
    found = set()
    layer = {frozenset([v]) for v in interior}
    for _ in range(max_size):
        found |= layer
        grown = set()
        for part in layer:
            if len(part) == max_size:
                continue
            for v in part:
                for w in g.neighbors(v):
                    if w in interior and w not in part:
                        grown.add(part | {w})
        layer = grown - found
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def is_window_bond_side(g, side) -> bool:
    """
    True if E(side, rest) is a bond of the generator

    side must be connected and avoid the boundary; every component of the
    window minus side must reach the boundary. Components reaching the
    boundary are joined outside the ball for every built-in generator.
    """
    h = g.without(side)
    return all(part & g.boundary for part in nx.connected_components(h.simple()))


def _interior_bond_parity(w, d, side_size):
    odd, bonds = None, 0
    for side in connected_interior_sets(w.graph, side_size):
        if not is_window_bond_side(w.graph, side):
            continue
        bonds += 1
        f = cut_from_bipartition(w.graph, side)
        if odd is None and not is_orthogonal(f, d):
            odd = {"radius": w.radius, "side": side, "cut": f}
    return bonds, odd


def verify_counterexample_bond(radii, side_size=DEFAULT_SIDE_SIZE, workers=DEFAULT_WORKERS, gen=None) -> Report:
    """
    The doubled grid: D meets every bond evenly but a non-bond cut infinitely

    (a) every cut with a connected interior side of at most side_size
    vertices that is a bond meets D evenly; (b) the cut at the column-0 grid
    vertices, whose far side strands every subdivision vertex, meets D in a
    strictly increasing number of window edges.
    """
    gen = _require_generator(gen, "doubled_grid")
    radii = list(radii)
    report = Report("ce_bond", {"generator": gen.name, "radii": radii, "side_size": side_size})

    def run(r):
        w = window(gen, r)
        bonds, odd = _interior_bond_parity(w, w.distinguished, side_size)
        f = nonbond_cut(w)
        return {"bonds": bonds, "odd": odd, "nonbond": len(f & w.distinguished),
                "nonbond_is_bond": is_bond(w.graph, f), "side": len(nonbond_cut_side(w))}

    rows = _map_radii(run, radii, workers)
    odd = next((row["odd"] for row in rows if row["odd"] is not None), None)
    report.add(Verdict.check("interior_bonds_meet_d_evenly", odd is None, odd))
    series = [row["nonbond"] for row in rows]
    report.add(Verdict.check("nonbond_intersection_increasing", _strictly_increasing(series), {"series": series}))
    bonded = [r for r, row in zip(radii, rows) if row["nonbond_is_bond"]]
    report.add(Verdict.check("nonbond_cut_is_not_a_bond", not bonded, {"radii": bonded}))
    report.add_series("nonbond_intersection", series)
    report.add_series("interior_bonds_checked", [row["bonds"] for row in rows])
    report.observe("evidence", FINITE_EVIDENCE)
    report.observe("nonbond_side", "column-0 grid vertices; every subdivision vertex is isolated on the other side")
    return report


def sample_double_rays(gen, w, rng, count, end=None):
    """
    Double-ray truncations: two disjoint canonical ray tails joined by a path

    The tails start at random positions of canonical rays 0 and 1; the joining
    path is a shortest path avoiding the rest of both tails. Generators with
    fewer than two disjoint canonical rays give no samples.

    Returns:
        list: Vertex sequences, boundary to boundary
    """
    try:
        first, second = disjoint_rays(gen, end, 2, w.radius, w)
    except RayError:
        return []
    g = w.graph
    found = []
    for _ in range(count):
        a = int(rng.integers(0, len(first)))
        b = int(rng.integers(0, len(second)))
        tail_a, tail_b = first.vertices[a:], second.vertices[b:]
        h = g.without(set(tail_a[1:]) | set(tail_b[1:]))
        try:
            path = nx.shortest_path(h.simple(), tail_a[0], tail_b[0])
        except nx.NetworkXNoPath:
            continue
        found.append(tuple(reversed(tail_a)) + tuple(path[1:-1]) + tuple(tail_b))
    return found


def truncation_splits_d(gen, w, path) -> bool:
    """
    True if the path stops at a boundary subdivision vertex through a D edge

    A subdivision vertex (oracle degree 2) whose two edges are both in D
    contributes an even count to any double ray passing through it. Cutting the
    ray there leaves one of the two, so an odd count is the window's doing.
    Paths ending anywhere else carry their full D count.
    """
    if len(path) < 2:
        return False
    g = w.graph
    for end, step in ((path[0], path[1]), (path[-1], path[-2])):
        if end not in g.boundary:
            continue
        labels = [label for label, _ in gen.neighbors(w.coords[end])]
        if len(labels) != 2 or gen.d_predicate is None or not all(gen.d_predicate(x) for x in labels):
            continue
        if any(e in w.distinguished for e in g.edges_between(end, step)):
            return True
    return False


def _ctop_window(gen, r, max_length, samples, seed):
    w = window(gen, r)
    g, d = w.graph, w.distinguished
    circuits = circuits_up_to(g, max_length)
    odd_circuit = _first_odd(circuits, d)

    zigzag, crossed = zigzag_truncation(w)
    zig_edges = zigzag.edge_set(g)
    zig_odd = [v for v in g.odd_vertices(zig_edges) if v not in (zigzag.vertices[0], zigzag.vertices[-1])]

    rng = np.random.default_rng([seed, r])
    artifacts, odd_ray, sampled = 0, None, 0
    for path in sample_double_rays(gen, w, rng, samples):
        sampled += 1
        edges = g.edge_path(path)
        if is_orthogonal(edges, d):
            continue
        if truncation_splits_d(gen, w, path):
            artifacts += 1
        elif odd_ray is None:
            odd_ray = {"radius": r, "path": list(path), "edges": edges}
    return {
        "circuits": len(circuits),
        "odd_circuit": None if odd_circuit is None else {"radius": r, "circuit": odd_circuit},
        "zigzag": len(zig_edges & d),
        "crossed": crossed,
        "zigzag_odd_interior": zig_odd,
        "zigzag_path": list(zigzag.vertices),
        "odd_ray": odd_ray,
        "artifacts": artifacts,
        "double_rays": sampled,
        "d_in_calg": membership(SpaceTag.C_ALG, w, d),
    }


def _ctop_checks(report, radii, rows):
    odd = next((row["odd_circuit"] for row in rows if row["odd_circuit"] is not None), None)
    report.add(Verdict.check("finite_circuits_meet_d_evenly", odd is None, odd))
    wrong = [{"radius": r, "count": row["zigzag"], "rungs": row["crossed"]}
             for r, row in zip(radii, rows) if row["zigzag"] != 2 * row["crossed"]]
    report.add(Verdict.check("zigzag_meets_d_twice_per_rung", not wrong, wrong))
    series = [row["zigzag"] for row in rows]
    report.add(Verdict.check("zigzag_series_increasing", _strictly_increasing(series), {"series": series}))
    odd_ray = next((row["odd_ray"] for row in rows if row["odd_ray"] is not None), None)
    report.add(Verdict.check("double_rays_meet_d_evenly", odd_ray is None, odd_ray))
    report.add_series("zigzag_intersection", series)
    report.add_series("zigzag_rungs", [row["crossed"] for row in rows])
    report.add_series("circuits_checked", [row["circuits"] for row in rows])
    report.add_series("double_rays_checked", [row["double_rays"] for row in rows])
    report.observe("boundary_artifacts", sum(row["artifacts"] for row in rows))
    report.observe("evidence", FINITE_EVIDENCE)


def verify_counterexample_ctop(radii, max_length=DEFAULT_CIRCUIT_LENGTH, samples=DEFAULT_SAMPLE_COUNT,
                               seed=DEFAULT_SEED, workers=DEFAULT_WORKERS, gen=None) -> Report:
    """
    The subdivided ladder: D meets every circuit evenly but a C_top element infinitely

    The witness family is the zigzag ray through every subdivided rung, cut
    back to a rail vertex inside each window; it meets D twice per rung.
    """
    gen = _require_generator(gen, "subdivided_ladder")
    radii = list(radii)
    report = Report("ce_ctop", {"generator": gen.name, "radii": radii, "max_length": max_length,
                                "samples": samples, "seed": seed})
    rows = _map_radii(lambda r: _ctop_window(gen, r, max_length, samples, seed), radii, workers)
    _ctop_checks(report, radii, rows)
    return report


def verify_counterexample_calg(radii, max_length=DEFAULT_CIRCUIT_LENGTH, samples=DEFAULT_SAMPLE_COUNT,
                               seed=DEFAULT_SEED, workers=DEFAULT_WORKERS, gen=None) -> Report:
    """
    The C_top counterexample read with C_alg window semantics

    Same D and witness family; additionally the zigzag truncation has even
    degree at every vertex except its two ends, and D itself is audited for
    window C_alg membership (rail vertices carry one D edge each).
    """
    gen = _require_generator(gen, "subdivided_ladder")
    radii = list(radii)
    report = Report("ce_calg", {"generator": gen.name, "radii": radii, "max_length": max_length,
                                "samples": samples, "seed": seed})
    rows = _map_radii(lambda r: _ctop_window(gen, r, max_length, samples, seed), radii, workers)
    _ctop_checks(report, radii, rows)
    odd_inside = [{"radius": r, "vertices": row["zigzag_odd_interior"]}
                  for r, row in zip(radii, rows) if row["zigzag_odd_interior"]]
    report.add(Verdict.check("zigzag_even_at_interior_vertices", not odd_inside, odd_inside))
    report.observe("d_in_calg_window", {
        str(r): {"member": row["d_in_calg"].member, "certificate": row["d_in_calg"].certificate}
        for r, row in zip(radii, rows)})
    report.observe("same_witness_family", "ce_ctop")
    return report


def _disjoint(structures):
    seen = set()
    for s in structures:
        if seen & s.vertices:
            return False
        seen |= s.vertices
    return True


def _fan_window(gen, k, r, mode):
    w = window(gen, r)
    g = w.graph
    if mode == "fan":
        targets = frozenset(truncate_ray(gen, None, 0, r, w).vertices)
        sources = [v for v in sources_in_window(w, gen.fan_sources) if v not in targets]
        fans, searches = greedy_fans(g, sources, targets, k)
        blocked = [s for s in searches if s.fan is None]
        valid = all(f.is_valid(g, targets) for f in fans) and _disjoint(fans)
        return {"count": len(fans), "valid": valid,
                "separators": sorted({len(s.separator) for s in blocked}),
                "certificate": None if not blocked else {"center": blocked[0].center,
                                                         "separator": blocked[0].separator}}
    pairs = pairs_in_window(w, gen.linkage_pairs)
    linkages = max_disjoint_linkages(g, pairs, k)
    valid = all(link.is_valid(g) for link in linkages) and _disjoint(linkages)
    return {"count": len(linkages), "valid": valid, "separators": [], "certificate": None}


def fan_growth_study(gen, k, radii, mode="fan", workers=DEFAULT_WORKERS) -> Report:
    """
    Count pairwise disjoint k-fans (or k-linkages) per window

    Fans run from the generator's source sequence to canonical ray 0; linkages
    join the generator's vertex pairs. The growth check holds when the counts
    never drop and the last exceeds the first.

    Raises:
        ValueError: If mode is neither fan nor linkage
    """
    if mode not in ("fan", "linkage"):
        raise ValueError(f"unknown growth mode '{mode}'")
    radii = list(radii)
    report = Report("fan_growth", {"generator": gen.name, "k": k, "radii": radii, "mode": mode})
    rows = _map_radii(lambda r: _fan_window(gen, k, r, mode), radii, workers)
    counts = [row["count"] for row in rows]

    invalid = [r for r, row in zip(radii, rows) if not row["valid"]]
    report.add(Verdict.check("structures_valid_and_disjoint", not invalid, {"radii": invalid}))
    drop = _first_drop(counts, radii)
    report.add(Verdict.check("counts_non_decreasing", drop is None, drop))
    if len(counts) < 2:
        report.add(Verdict.inconclusive("counts_grow", "growth needs at least two radii"))
    else:
        grows = _non_decreasing(counts) and counts[-1] > counts[0]
        report.add(Verdict.check("counts_grow", grows, {"series": counts, "certificate": rows[-1]["certificate"]}))
    report.add_series("counts", counts)
    report.add_series("separator_sizes", [row["separators"] for row in rows])
    report.observe("evidence", FINITE_EVIDENCE)
    return report


def padded_witness_radius(gen, end, k, s_radius, depth=DEFAULT_SEARCH_DEPTH,
                          padding=DEFAULT_WINDOW_PADDING) -> Report:
    """
    Least r' > s_radius where every vertex at distance r' in C(S, end) has a k-fan to the ray

    S is the ball of radius s_radius. Each candidate r' is searched in
    window(r' + padding), with fans confined to C(S, end) and aimed at the
    canonical ray inside it.

    Returns:
        Report: holds with the radius in the observations, or inconclusive
                with the last blocking certificate when none is found up to
                s_radius + depth
    """
    info = gen.end(end)
    report = Report("padded", {"generator": gen.name, "end": info.name, "k": k, "s_radius": s_radius,
                               "depth": depth, "padding": padding})
    tried, blocked = [], None
    for rp in range(s_radius + 1, s_radius + depth + 1):
        w = window(gen, rp + padding)
        S = w.ball(s_radius)
        part = component_CS(gen, w.radius, S, info.name, w)
        sub = w.graph.induced(part)
        ray = frozenset(v for v in truncate_ray(gen, info.name, 0, w.radius, w).vertices if v in part)
        centres = sorted(v for v in w.layer(rp) if v in part)
        if not centres:
            continue
        tried.append(rp)
        failure = None
        for u in centres:
            search = fan_search(sub, u, ray - {u}, k)
            if search.fan is None:
                failure = {"radius": rp, "vertex": u, "coord": w.coords[u],
                           "separator": search.separator, "degree": search.degree}
                break
        if failure is None:
            report.add(Verdict.holds("padded_radius_found"))
            report.observe("radius", rp)
            report.observe("tried", tried)
            return report
        blocked = failure
        logger.debug(f"padded {gen.name} k={k}: r'={rp} blocked at vertex {failure['vertex']}")
    report.add(Verdict.inconclusive("padded_radius_found", f"not found up to {s_radius + depth}"))
    report.observe("tried", tried)
    report.observe("last_certificate", blocked)
    return report


def _end_degree_window(gen, r):
    w = window(gen, r)
    xs, ys = w.ball(r // 2), w.graph.boundary
    if not ys:
        return {"value": 0, "separator": frozenset()}
    family = vertex_disjoint_paths(w.graph, xs, ys)
    return {"value": len(family), "separator": family.separator}


def end_degree_estimate(gen, end, radii, workers=DEFAULT_WORKERS) -> Report:
    """
    Menger lower bound for the vertex-degree of an end, per radius

    Counts vertex-disjoint paths from the ball of radius r // 2 to the
    boundary of window(r), with the matching separator, and compares the
    series with the documented vertex-degree.
    """
    info = gen.end(end)
    radii = list(radii)
    report = Report("end_degree", {"generator": gen.name, "end": info.name, "radii": radii})
    rows = _map_radii(lambda r: _end_degree_window(gen, r), radii, workers)
    series = [row["value"] for row in rows]
    drop = _first_drop(series, radii)
    report.add(Verdict.check("series_non_decreasing", drop is None, drop))
    if info.vertex_degree is not None:
        plateau = bool(series) and series[-1] == info.vertex_degree and max(series) == info.vertex_degree
        report.add(Verdict.check("plateau_matches_metadata", plateau,
                                 {"series": series, "vertex_degree": info.vertex_degree}))
    elif len(series) < 2:
        report.add(Verdict.inconclusive("series_grows", "growth needs at least two radii"))
    else:
        report.add(Verdict.check("series_grows", series[-1] > series[0], {"series": series}))
    report.add_series("estimate", series)
    report.add_series("separator_sizes", [len(row["separator"]) for row in rows])
    report.observe("documented_vertex_degree", info.vertex_degree)
    report.observe("at_least_three_from", next((r for r, v in zip(radii, series) if v >= 3), None))
    return report


def default_distinguished_labels(gen):
    """Labels of the least circuit of length <= 4 in window(2): an interior finite circuit"""
    w = window(gen, 2)
    circuits = circuits_up_to(w.graph, 4)
    return frozenset(w.labels_of(circuits[0])) if circuits else frozenset()


def _premise(gen, part, radii, workers):
    info = gen.end()
    if part in ("i", "ii"):
        if info.vertex_degree is not None and info.vertex_degree < 3:
            return False, f"end {info.name} has vertex-degree {info.vertex_degree} < 3"
        estimate = end_degree_estimate(gen, None, radii, workers)
        last = estimate.series["estimate"][-1]
        if last < 3:
            return False, f"end-degree estimate {last} < 3 at radius {radii[-1]}"
        return True, f"end-degree estimate {last} >= 3"
    padded = padded_witness_radius(gen, None, 3, 1)
    if padded.status != "holds":
        return False, "no 3-padded witness radius found"
    return True, f"3-padded witness radius {padded.observations['radius']}"


def _theorem_window(gen, r, part, predicate, max_length, side_size, samples, seed):
    w = window(gen, r)
    g = w.graph
    d = EdgeSet(frozenset(e for e, label in enumerate(w.labels) if predicate(label)))
    checked, odd = 0, None
    if part in ("i", "ii"):
        for c in circuits_up_to(g, max_length):
            checked += 1
            if odd is None and not is_orthogonal(c, d):
                odd = {"radius": r, "kind": "circuit", "edges": c}
        rng = np.random.default_rng([seed, r])
        for path in sample_double_rays(gen, w, rng, samples):
            checked += 1
            edges = g.edge_path(path)
            if odd is None and not is_orthogonal(edges, d):
                odd = {"radius": r, "kind": "double-ray-truncation", "edges": edges}
    else:
        for side in connected_interior_sets(g, side_size):
            if not is_window_bond_side(g, side):
                continue
            checked += 1
            f = cut_from_bipartition(g, side)
            if odd is None and not is_orthogonal(f, d):
                odd = {"radius": r, "kind": "bond", "side": side, "edges": f}
    if odd is not None:
        odd["labels"] = w.labels_of(odd["edges"])
    return {"checked": checked, "odd": odd, "d_size": len(d)}


def verify_theorem_window(gen, radii, part="iii", d_predicate=None, max_length=8, side_size=2,
                          samples=DEFAULT_SAMPLE_COUNT, seed=DEFAULT_SEED, workers=DEFAULT_WORKERS) -> Report:
    """
    Premise audit plus minimal-element parity evidence for the duality theorem

    Parts i and ii need every end to have vertex-degree at least 3 (audited by
    end_degree_estimate); part iii needs 3-paddedness (audited by
    padded_witness_radius). The two premises are never mixed. With the premise
    in place, finite circuits and double-ray truncations (i, ii) or interior
    bonds (iii) are checked for even intersection with D.

    Args:
        gen (GeneratorGraph): Generator
        radii (list): Radii
        part (str): i, ii or iii
        d_predicate (callable, optional): Label predicate for D; defaults to
                                          the generator's D, else an interior
                                          finite circuit

    Raises:
        ValueError: On an unknown part
    """
    if part not in ("i", "ii", "iii"):
        raise ValueError(f"unknown theorem part '{part}'")
    radii = list(radii)
    report = Report("theorem_window", {"generator": gen.name, "radii": radii, "part": part,
                                       "max_length": max_length, "side_size": side_size,
                                       "samples": samples, "seed": seed})
    ok, reason = _premise(gen, part, radii, workers)
    report.observe("premise", reason)
    if not ok:
        report.add(Verdict.inconclusive("premise", reason))
        return report
    report.add(Verdict.holds("premise"))

    predicate = d_predicate or gen.d_predicate
    if predicate is None:
        labels = default_distinguished_labels(gen)
        predicate = labels.__contains__
        report.observe("distinguished", "interior finite circuit " + str(sorted(labels)))

    rows = _map_radii(lambda r: _theorem_window(gen, r, part, predicate, max_length, side_size, samples, seed),
                      radii, workers)
    odd = next((row["odd"] for row in rows if row["odd"] is not None), None)
    report.add(Verdict.check("minimal_elements_meet_d_evenly", odd is None, odd))
    report.add_series("checked", [row["checked"] for row in rows])
    report.add_series("d_size", [row["d_size"] for row in rows])
    report.observe("evidence", FINITE_EVIDENCE)
    return report


def finite_corpus(max_vertices=DEFAULT_CORPUS_VERTICES, random_graphs=DEFAULT_RANDOM_GRAPHS,
                  random_vertices=DEFAULT_RANDOM_VERTICES, seed=DEFAULT_SEED):
    """
    Connected atlas graphs on at most max_vertices vertices plus seeded random multigraphs

    Returns:
        list: (name, MultiGraph) pairs
    """
    graphs = []
    for index, h in enumerate(nx.graph_atlas_g()):
        n = h.number_of_nodes()
        if n > max_vertices:
            break
        if n == 0 or not nx.is_connected(h):
            continue
        graphs.append((f"atlas-{index}", from_networkx(h)))
    rng = np.random.default_rng(seed)
    for i in range(random_graphs):
        n = int(rng.integers(2, random_vertices + 1))
        graphs.append((f"random-{i}", random_multigraph(rng, n)))
    logger.info(f"finite corpus: {len(graphs)} graphs")
    return graphs


def check_peeling(g, rng, samples=DEFAULT_CORPUS_SAMPLES, exhaustive_edges=DEFAULT_EXHAUSTIVE_EDGES):
    """
    Peel elements of both spaces and re-certify every part

    Graphs with at most exhaustive_edges edges have every span element
    peeled; larger graphs get samples random span elements per space.

    Returns:
        tuple: (first failure or None, number of elements peeled)
    """
    exhaustive = len(g.edges) <= exhaustive_edges
    peeled = 0
    for tag, basis, certify in ((SpaceTag.C_FIN, cycle_space_basis(g), is_circuit),
                                (SpaceTag.B, cut_space_basis(g), is_bond)):
        if exhaustive:
            elements = span_elements(basis)
        else:
            elements = (random_span_element(basis, rng) for _ in range(samples))
        for f in elements:
            peeled += 1
            parts = peel_minimal_decomposition(tag, g, f)
            if parts.total() != f or not parts.is_pairwise_disjoint():
                return {"space": tag.value, "element": f, "parts": list(parts.parts)}, peeled
            bad = next((p for p in parts.parts if not certify(g, p)), None)
            if bad is not None:
                return {"space": tag.value, "element": f, "part": bad}, peeled
    return None, peeled


def minimal_orthogonality_sweep(g, rng, samples=DEFAULT_CORPUS_SAMPLES, exhaustive_edges=DEFAULT_EXHAUSTIVE_EDGES,
                                bound=None):
    """
    The minimal-orthogonality biconditionals for many edge sets D at once

    Bonds, circuits and both bases are enumerated once and held as integer
    bitmasks over the sorted edge identities. Every D is checked when the
    graph has at most exhaustive_edges edges, otherwise samples random ones.

    Returns:
        tuple: (first failure or None, number of edge sets checked)

    Raises:
        BoundExceededError: If g exceeds the bound
    """
    order = {e: i for i, e in enumerate(sorted(g.edge_ids))}

    def bits(edges):
        return sum(1 << order[e] for e in edges)

    sides = (("bonds_iff_cut_space", [bits(b) for b in enumerate_bonds(g, bound)],
              [bits(b) for b in cut_space_basis(g)]),
             ("circuits_iff_cycle_space", [bits(c) for c in enumerate_circuits(g, bound)],
              [bits(c) for c in cycle_space_basis(g)]))
    m = len(order)
    if m <= exhaustive_edges:
        candidates = range(1 << m)
    else:
        candidates = (bits(e for e, bit in zip(sorted(order), rng.integers(0, 2, size=m)) if bit)
                      for _ in range(samples))

    checked = 0
    for d in candidates:
        checked += 1
        for check, minimal, basis in sides:
            odd_minimal = any(bin(x & d).count("1") & 1 for x in minimal)
            odd_space = any(bin(x & d).count("1") & 1 for x in basis)
            if odd_minimal != odd_space:
                edges = EdgeSet(frozenset(e for e, i in order.items() if d >> i & 1))
                return {"check": check, "set": edges, "odd_minimal": odd_minimal}, checked
    return None, checked


def verify_duality_corpus(max_vertices=DEFAULT_CORPUS_VERTICES, random_graphs=DEFAULT_RANDOM_GRAPHS,
                          random_vertices=DEFAULT_RANDOM_VERTICES, seed=DEFAULT_SEED,
                          samples=DEFAULT_CORPUS_SAMPLES, exhaustive_edges=DEFAULT_EXHAUSTIVE_EDGES,
                          workers=DEFAULT_WORKERS) -> Report:
    """
    Finite duality, peeling and minimal-orthogonality over the whole corpus

    Each graph gets verify_duality_finite, then peeling of every element of
    both spaces and the minimal-orthogonality biconditionals for every edge
    set. Graphs with more than exhaustive_edges edges fall back to samples
    random span elements and samples random edge sets.
    """
    corpus = finite_corpus(max_vertices, random_graphs, random_vertices, seed)
    report = Report("duality_finite", {"corpus": len(corpus), "max_vertices": max_vertices,
                                       "random_graphs": random_graphs, "random_vertices": random_vertices,
                                       "seed": seed, "samples": samples, "exhaustive_edges": exhaustive_edges})

    def run(item):
        index, (name, g) = item
        rng = np.random.default_rng([seed, index])
        duality = verify_duality_finite(g, name=name)
        peel, peeled = check_peeling(g, rng, samples, exhaustive_edges)
        minimal, checked = minimal_orthogonality_sweep(g, rng, samples, exhaustive_edges)
        logger.debug(f"corpus {name}: {peeled} elements peeled, {checked} edge sets checked")
        return {"name": name, "duality": duality, "peel": peel, "peeled": peeled,
                "minimal": minimal, "checked": checked, "exhaustive": len(g.edges) <= exhaustive_edges}

    items = list(enumerate(corpus))
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, items))
    else:
        results = [run(item) for item in items]

    duality = next(({"graph": row["name"], "checks": [v.to_dict() for v in row["duality"].failures]}
                    for row in results if row["duality"].failed), None)
    report.add(Verdict.check("duality", duality is None, duality))
    peel = next(({"graph": row["name"], **row["peel"]} for row in results if row["peel"] is not None), None)
    report.add(Verdict.check("peeling", peel is None, peel))
    minimal = next(({"graph": row["name"], **row["minimal"]} for row in results if row["minimal"] is not None),
                   None)
    report.add(Verdict.check("minimal_orthogonality", minimal is None, minimal))
    report.observe("graphs", len(results))
    report.observe("exhaustive_graphs", sum(1 for row in results if row["exhaustive"]))
    report.observe("span_elements_peeled", sum(row["peeled"] for row in results))
    report.observe("edge_sets_checked", sum(row["checked"] for row in results))
    return report
