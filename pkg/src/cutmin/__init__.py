"""Exact first Cheeger constants of simplices via cut-minimal graphs."""

from .errors import InfeasibleSizeError
from .graphs import Graph, h_graph, is_cut_minimal, staircase
from .partitions import Partition, h_partition, n_min
from .search import cheeger_number

__all__ = [
    "Graph",
    "InfeasibleSizeError",
    "Partition",
    "cheeger_number",
    "h_graph",
    "h_partition",
    "is_cut_minimal",
    "n_min",
    "staircase",
]
__version__ = "0.1.0"
