"""Exact combinatorics of the algebra of basic k-covers of a bipartite graph."""

from basiccovers.errors import CoverError
from basiccovers.graph import BipartiteGraph, from_edges, generate
from basiccovers.covers import Cover, enumerate_basic, is_basic, is_cover

__all__ = [
    "BipartiteGraph",
    "Cover",
    "CoverError",
    "enumerate_basic",
    "from_edges",
    "generate",
    "is_basic",
    "is_cover",
]

__version__ = "0.1.0"
