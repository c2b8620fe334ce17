"""A_sigma spectral machinery for connected graphs with prescribed independence number."""
from __future__ import annotations

from .graphs import Graph, graph6_decode, graph6_encode, new_graph

__version__ = "0.1.0"

__all__ = ["Graph", "new_graph", "graph6_encode", "graph6_decode", "__version__"]
