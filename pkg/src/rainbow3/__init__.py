"""3-rainbow index toolkit: constructions, bounds, verification and exact search."""

from .graph import Graph, GraphError, LimitError, parse_edge_list, serialize_edge_list
from .kernels import BACKEND
from .rainbow import EdgeColoring, exists_rainbow_tree, is_k_rainbow, rx3_exact

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "EdgeColoring", "Graph", "GraphError", "LimitError", "exists_rainbow_tree",
    "is_k_rainbow", "parse_edge_list", "rx3_exact", "serialize_edge_list",
]
