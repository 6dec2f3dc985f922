"""Exact small-case tools for generalized Turán problems.

Bitset graphs on at most 64 vertices, exact subgraph counting,
isomorph-free enumeration of F-free graphs, path counts in complete
multipartite graphs and the vertex-move and bound-difference checks
built on them.
"""

from .counting import (
    automorphism_count,
    count_copies,
    count_embeddings,
    h_degree_profile,
    matching_embeddings,
    prune_by_h_degree,
    spectral_radius,
    walk_count,
)
from .enumeration import enumerate_f_free, enumerate_graphs, generalized_turan, turan_good_scan
from .graph import (
    Graph,
    GraphError,
    chromatic_number,
    clique_number,
    color_critical_edges,
    is_subgraph,
    matching_number,
    new_graph,
)
from .graph6 import graph6_decode, graph6_encode
from .kernels import BACKEND
from .presets import parse_graph
from .turan import complete_multipartite, compositions, turan_edge_count, turan_graph

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Graph",
    "GraphError",
    "automorphism_count",
    "chromatic_number",
    "clique_number",
    "color_critical_edges",
    "complete_multipartite",
    "compositions",
    "count_copies",
    "count_embeddings",
    "enumerate_f_free",
    "enumerate_graphs",
    "generalized_turan",
    "graph6_decode",
    "graph6_encode",
    "h_degree_profile",
    "is_subgraph",
    "matching_embeddings",
    "matching_number",
    "new_graph",
    "parse_graph",
    "prune_by_h_degree",
    "spectral_radius",
    "turan_edge_count",
    "turan_good_scan",
    "turan_graph",
    "walk_count",
]
