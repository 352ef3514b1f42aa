# edgespace/__init__.py

__version__ = "0.1.0"
__license__ = "MIT"

from .edgeset import EdgeSet, Basis, symmetric_sum, is_orthogonal, gaussian_basis, in_span, orthogonal_complement
from .graph import (MultiGraph, components, is_connected, cut_from_bipartition, cut_side, is_cut, is_bond,
                    spanning_tree, fundamental_circuit, fundamental_cut)
from .menger import (PathFamily, Fan, Linkage, FanSearch, vertex_disjoint_paths, fan_search, k_fan, k_linkage,
                     max_disjoint_fans, max_disjoint_linkages)
from .spaces import (SpaceTag, DUAL_OF, Decomposition, Membership, cycle_space_basis, cut_space_basis,
                     enumerate_bonds, enumerate_circuits, circuits_up_to, peel_minimal_decomposition,
                     decompose_even_set_into_circuits, decompose_cut_into_bonds,
                     decompose_into_circuits_and_double_rays, membership)
from .generators import (GeneratorGraph, EndInfo, Window, RayPath, window, generator_catalog, get_generator,
                         component_CS, truncate_ray, disjoint_rays)
from .models import Report, Verdict
from .verify import (verify_duality_finite, verify_minimal_orthogonality_finite, verify_counterexample_bond,
                     verify_counterexample_ctop, verify_counterexample_calg, fan_growth_study,
                     padded_witness_radius, end_degree_estimate, verify_theorem_window, finite_corpus,
                     verify_duality_corpus)
from .graphfile import GraphFile, parse_graph, serialize_graph
from .exceptions import (EdgeSpaceError, GraphError, LinearAlgebraError, GraphFormatError, DisconnectedGraphError,
                         BoundExceededError, NotInSpaceError, OddDegreeError, NotACutError, RayError,
                         UnknownGeneratorError, UnknownExperimentError)

# Export public classes and functions
__all__ = [
    'EdgeSet', 'Basis', 'symmetric_sum', 'is_orthogonal', 'gaussian_basis', 'in_span', 'orthogonal_complement',
    'MultiGraph', 'components', 'is_connected', 'cut_from_bipartition', 'cut_side', 'is_cut', 'is_bond',
    'spanning_tree', 'fundamental_circuit', 'fundamental_cut',
    'PathFamily', 'Fan', 'Linkage', 'FanSearch', 'vertex_disjoint_paths', 'fan_search', 'k_fan', 'k_linkage',
    'max_disjoint_fans', 'max_disjoint_linkages',
    'SpaceTag', 'DUAL_OF', 'Decomposition', 'Membership', 'cycle_space_basis', 'cut_space_basis',
    'enumerate_bonds', 'enumerate_circuits', 'circuits_up_to', 'peel_minimal_decomposition',
    'decompose_even_set_into_circuits', 'decompose_cut_into_bonds', 'decompose_into_circuits_and_double_rays',
    'membership',
    'GeneratorGraph', 'EndInfo', 'Window', 'RayPath', 'window', 'generator_catalog', 'get_generator',
    'component_CS', 'truncate_ray', 'disjoint_rays',
    'Report', 'Verdict',
    'verify_duality_finite', 'verify_minimal_orthogonality_finite', 'verify_counterexample_bond',
    'verify_counterexample_ctop', 'verify_counterexample_calg', 'fan_growth_study', 'padded_witness_radius',
    'end_degree_estimate', 'verify_theorem_window', 'finite_corpus', 'verify_duality_corpus',
    'GraphFile', 'parse_graph', 'serialize_graph',
    'EdgeSpaceError', 'GraphError', 'LinearAlgebraError', 'GraphFormatError', 'DisconnectedGraphError',
    'BoundExceededError', 'NotInSpaceError', 'OddDegreeError', 'NotACutError', 'RayError',
    'UnknownGeneratorError', 'UnknownExperimentError',
]
