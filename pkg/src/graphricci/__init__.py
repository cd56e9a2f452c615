"""Discrete Bakry-Emery Ricci curvature of graphs and Coxeter weak orders."""

from .curvature import global_ricci, local_ricci, local_ricci_oracle
from .errors import RicciError
from .graph import Graph, load_graph, local_neighborhood

__all__ = [
    "Graph",
    "RicciError",
    "global_ricci",
    "load_graph",
    "local_neighborhood",
    "local_ricci",
    "local_ricci_oracle",
]

__version__ = "0.1.0"
