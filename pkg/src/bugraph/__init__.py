"""Exact betweenness centrality and structural checks for betweenness-uniform graphs."""

__version__ = "0.1.0"

from .betweenness import (BetweennessReport, adjusted_betweenness, average_betweenness, betweenness_report,
                          edge_betweenness, is_betweenness_uniform, mean_betweenness_via_distance,
                          pair_induced_betweenness, path_counts, subset_induced_betweenness, vertex_betweenness)
from .connectivity import (TwoCutAnalysis, all_two_cuts, component_subgraphs, is_k_connected, k_plus,
                           minimal_two_cut, vertex_connectivity)
from .graph import (Graph, bfs_distances, components, diameter, from_edge_list, induced_subgraph, is_connected,
                    is_cycle_graph)
from .graph6 import decode_graph6, encode_graph6

__all__ = [
    "BetweennessReport", "Graph", "TwoCutAnalysis", "adjusted_betweenness", "all_two_cuts", "average_betweenness",
    "betweenness_report", "bfs_distances", "component_subgraphs", "components", "decode_graph6", "diameter",
    "edge_betweenness", "encode_graph6", "from_edge_list", "induced_subgraph", "is_betweenness_uniform",
    "is_connected", "is_cycle_graph", "is_k_connected", "k_plus", "mean_betweenness_via_distance",
    "minimal_two_cut", "pair_induced_betweenness", "path_counts", "subset_induced_betweenness",
    "vertex_betweenness", "vertex_connectivity",
]
