"""Exact tree-graph machinery and a machine check of the layered-octahedron counterexample."""

from .counterexample import (
    LabelBinding,
    arboreal_induction_check,
    build_cycle_family,
    find_alpha_beta,
    verify_counterexample,
)
from .graph import EdgeSet, Graph, build_graph, enumerate_cycles, is_biconnected, is_connected, is_cycle
from .plane import (
    FacePair,
    PlaneGraph,
    cyclic_face_decomposition,
    diagonal_edges,
    interior_faces,
    layered_octahedron,
    lemma_two_faces,
    octahedron,
)
from .spanning import SpanningTree, count_spanning_trees, enumerate_spanning_trees, fundamental_cycles
from .treegraph import (
    ALL,
    CycleFamily,
    SpanWitness,
    TreeGraphAdjacency,
    build_tree_graph,
    components_summary,
    cyclically_spans,
    is_arboreal,
)

__version__ = "0.1.0"

__all__ = [
    'ALL',
    'CycleFamily',
    'EdgeSet',
    'FacePair',
    'Graph',
    'LabelBinding',
    'PlaneGraph',
    'SpanWitness',
    'SpanningTree',
    'TreeGraphAdjacency',
    'arboreal_induction_check',
    'build_cycle_family',
    'build_graph',
    'build_tree_graph',
    'components_summary',
    'count_spanning_trees',
    'cyclic_face_decomposition',
    'cyclically_spans',
    'diagonal_edges',
    'enumerate_cycles',
    'enumerate_spanning_trees',
    'find_alpha_beta',
    'fundamental_cycles',
    'interior_faces',
    'is_arboreal',
    'is_biconnected',
    'is_connected',
    'is_cycle',
    'layered_octahedron',
    'lemma_two_faces',
    'octahedron',
    'verify_counterexample',
]
