# edgespace/cli.py

"""
Command-line front end: ``python -m edgespace <command>``.

Exit codes: 0 ok, 1 a verification check failed, 2 usage, parse or
unknown-name errors, 3 disconnected graph, 4 brute-force bound exceeded.
"""

import argparse
import logging
import sys

from . import __version__
from .config import get_radii, get_vertex_bound
from .exceptions import BoundExceededError, DisconnectedGraphError, EdgeSpaceError, UnknownExperimentError
from .generators import generator_catalog, generator_names, get_generator, window
from .graphfile import parse_edge_list, read_graph_file, window_to_graphfile, serialize_graph, write_graph_file
from .spaces import SpaceTag, cut_space_basis, cycle_space_basis, membership
from .verify import (EXPERIMENT_NAMES, end_degree_estimate, fan_growth_study, padded_witness_radius,
                     verify_counterexample_bond, verify_counterexample_calg, verify_counterexample_ctop,
                     verify_duality_corpus, verify_duality_finite, verify_minimal_orthogonality_finite,
                     verify_theorem_window)

logger = logging.getLogger('edgespace.cli')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_BOUND = 4

DEFAULT_RADII = {
    "ce_bond": "3..7",
    "ce_ctop": "3..8",
    "ce_calg": "3..8",
    "fan_growth": "3..8",
    "end_degree": "2..8",
    "theorem_window": "3..6",
}

DEFAULT_GENERATOR = {
    "fan_growth": "clique_chain",
    "padded": "clique_chain",
    "end_degree": "ladder",
    "theorem_window": "grid_NZ",
}


def _basis_lines(tag, basis):
    lines = [f"{tag.value} dimension {basis.dimension}"]
    lines.extend(f"  {list(v.sorted())}" for v in basis)
    return lines


def cmd_spaces(args):
    """Print bases and dimensions of the requested spaces"""
    gf = read_graph_file(args.input)
    tags = [SpaceTag(args.space)] if args.space else [SpaceTag.C_FIN, SpaceTag.B]
    for tag in tags:
        collapsed = tag.finite_collapse
        basis = cycle_space_basis(gf.graph) if collapsed == SpaceTag.C_FIN else cut_space_basis(gf.graph)
        lines = _basis_lines(tag, basis)
        if collapsed != tag:
            lines[0] += f" (equals {collapsed.value} on a finite graph)"
        print("\n".join(lines))
    return EXIT_OK


def _read_set(args, gf):
    if args.set_file:
        with open(args.set_file, "r") as f:
            return parse_edge_list(f.read())
    if args.set is not None:
        return parse_edge_list(args.set)
    return gf.distinguished


def cmd_check(args):
    """Print membership with certificate and, within the bound, the minimal-element audit"""
    gf = read_graph_file(args.input)
    g = gf.graph
    d = _read_set(args, gf)
    result = membership(args.space, g, d)
    verdict = "member of" if result.member else "not a member of"
    print(f"{list(d.sorted())} is {verdict} {result.space.value}")
    for key, value in sorted(result.certificate.items()):
        print(f"  {key}: {value}")

    bound = get_vertex_bound(args.bound)
    if not args.exhaustive and len(g.vertices) > bound:
        print(f"minimal-element audit skipped: {len(g.vertices)} vertices > bound {bound}")
        return EXIT_OK
    report = verify_minimal_orthogonality_finite(g, d, bound=bound, name=gf.name)
    obs = report.observations
    print(f"orthogonal to all bonds: {obs['orthogonal_to_bonds']}; to B: {obs['orthogonal_to_cut_space']}")
    print(f"orthogonal to all circuits: {obs['orthogonal_to_circuits']}; "
          f"to C_fin: {obs['orthogonal_to_cycle_space']}")
    print("\n".join(report.summary_lines()))
    return EXIT_FAILED if report.failed else EXIT_OK


def cmd_generate(args):
    """Write a generator window as a graph file"""
    gen = get_generator(args.generator)
    gf = window_to_graphfile(window(gen, args.radius))
    if args.out:
        write_graph_file(args.out, gf)
    else:
        sys.stdout.write(serialize_graph(gf))
    return EXIT_OK


def _radii(args):
    return get_radii(args.radii or DEFAULT_RADII.get(args.experiment, "3..6"))


def _generator(args):
    return get_generator(args.generator or DEFAULT_GENERATOR.get(args.experiment, "ladder"))


def run_experiment(args):
    """Dispatch an experiment name to its verify function"""
    name = args.experiment
    if name not in EXPERIMENT_NAMES:
        raise UnknownExperimentError(name, EXPERIMENT_NAMES)
    if name == "duality_finite":
        if args.input:
            gf = read_graph_file(args.input)
            return verify_duality_finite(gf.graph, bound=args.bound, name=gf.name)
        return verify_duality_corpus(seed=args.seed, workers=args.workers)
    if name == "cor_finite":
        if not args.input:
            raise EdgeSpaceError("cor_finite needs --input")
        gf = read_graph_file(args.input)
        return verify_minimal_orthogonality_finite(gf.graph, _read_set(args, gf), bound=args.bound, name=gf.name)
    if name == "ce_bond":
        return verify_counterexample_bond(_radii(args), workers=args.workers)
    if name == "ce_ctop":
        return verify_counterexample_ctop(_radii(args), samples=args.samples, seed=args.seed, workers=args.workers)
    if name == "ce_calg":
        return verify_counterexample_calg(_radii(args), samples=args.samples, seed=args.seed, workers=args.workers)
    if name == "fan_growth":
        return fan_growth_study(_generator(args), args.k, _radii(args), mode=args.mode, workers=args.workers)
    if name == "padded":
        return padded_witness_radius(_generator(args), None, args.k, args.s_radius)
    if name == "end_degree":
        return end_degree_estimate(_generator(args), None, _radii(args), workers=args.workers)
    return verify_theorem_window(_generator(args), _radii(args), part=args.part, samples=args.samples,
                                 seed=args.seed, workers=args.workers)


def cmd_verify(args):
    """Run an experiment, print one line per check and optionally write JSON"""
    report = run_experiment(args)
    if args.json:
        with open(args.json, "w", newline="\n") as f:
            f.write(report.to_json())
        logger.info(f"Wrote report to {args.json}")
    print("\n".join(report.summary_lines()))
    return EXIT_FAILED if report.failed else EXIT_OK


def cmd_catalog(args):
    """List generators and experiments"""
    for gen in generator_catalog():
        ends = ", ".join(f"{e.name} (vertex-degree {e.vertex_degree if e.vertex_degree is not None else 'infinite'})"
                         for e in gen.ends)
        d = "with D" if gen.has_distinguished else "no D"
        print(f"{gen.name}: \"{gen.quote}\"; ends: {ends}; {d}")
    print("experiments: " + ", ".join(EXPERIMENT_NAMES))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="edgespace", description="GF(2) edge-space duality toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    spaces = sub.add_parser("spaces", help="Print cycle and cut space bases of a graph file")
    spaces.add_argument("input", help="Graph file")
    spaces.add_argument("--space", choices=[t.value for t in SpaceTag], help="Space tag (default: C_fin and B)")
    spaces.set_defaults(func=cmd_spaces)

    check = sub.add_parser("check", help="Membership and minimal-element orthogonality of an edge set")
    check.add_argument("input", help="Graph file")
    check.add_argument("--set", help="Edge identities, comma or space separated (default: the file's d-lines)")
    check.add_argument("--set-file", help="File of edge identities or d-lines")
    check.add_argument("--space", default=SpaceTag.C_FIN.value, choices=[t.value for t in SpaceTag],
                       help="Space tag (default: C_fin)")
    check.add_argument("--exhaustive", action="store_true", help="Require the minimal-element audit")
    check.add_argument("--bound", type=int, help="Vertex bound (default: EDGESPACE_BOUND or 12)")
    check.set_defaults(func=cmd_check)

    generate = sub.add_parser("generate", help="Write a generator window as a graph file")
    generate.add_argument("--generator", required=True, help=f"One of: {', '.join(generator_names())}")
    generate.add_argument("--radius", type=int, required=True, help="Window radius")
    generate.add_argument("--out", help="Output path (default: stdout)")
    generate.set_defaults(func=cmd_generate)

    verify = sub.add_parser("verify", help="Run an experiment")
    verify.add_argument("--experiment", required=True, help=f"One of: {', '.join(EXPERIMENT_NAMES)}")
    verify.add_argument("--radii", help="Radii as a..b or a comma list")
    verify.add_argument("--json", help="Write the report as JSON to this path")
    verify.add_argument("--input", help="Graph file for finite experiments")
    verify.add_argument("--set", help="Edge identities for cor_finite")
    verify.add_argument("--set-file", help="File of edge identities for cor_finite")
    verify.add_argument("--generator", help="Generator name")
    verify.add_argument("--k", type=int, default=3, help="Fan or linkage size (default: 3)")
    verify.add_argument("--mode", choices=["fan", "linkage"], default="fan", help="Growth study mode")
    verify.add_argument("--s-radius", type=int, default=2, help="Radius of S for the padded search")
    verify.add_argument("--part", choices=["i", "ii", "iii"], default="iii", help="Theorem part")
    verify.add_argument("--samples", type=int, default=200, help="Sample count for sampled checks")
    verify.add_argument("--seed", type=int, default=0, help="Random seed")
    verify.add_argument("--workers", type=int, default=1, help="Threads for independent radii")
    verify.add_argument("--bound", type=int, help="Vertex bound (default: EDGESPACE_BOUND or 12)")
    verify.set_defaults(func=cmd_verify)

    catalog = sub.add_parser("catalog", help="List generators and experiments")
    catalog.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    """Main function"""
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.debug:
        logging.getLogger('edgespace').setLevel(logging.DEBUG)

    try:
        return args.func(args)
    except DisconnectedGraphError as e:
        logger.error(str(e))
        return EXIT_DISCONNECTED
    except BoundExceededError as e:
        logger.error(str(e))
        return EXIT_BOUND
    except (EdgeSpaceError, ValueError, OSError) as e:
        logger.error(str(e))
        return EXIT_USAGE
