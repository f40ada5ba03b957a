"""
Graph layer for regtool.

Pure values and functions: a graph is an immutable bit-row adjacency structure,
and every operation returns a new graph.
"""

from graphs.classify import ClassificationReport, Constancy, Status, classify
from graphs.core import EdgePair, Graph, GraphError, from_edge_list
from graphs.ops import OperationKind, apply_operation

__all__ = [
    "ClassificationReport",
    "Constancy",
    "EdgePair",
    "Graph",
    "GraphError",
    "OperationKind",
    "Status",
    "apply_operation",
    "classify",
    "from_edge_list",
]
