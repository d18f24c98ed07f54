"""Edge-coloured graphs, simple digraphs and standard multigraphs: reductions,
exact pattern searches, extremal constructions and small-case verification
of rainbow-clique theorems."""

from .core import (
    EdgeColoredGraph,
    SimpleDigraph,
    SimpleGraph,
    StandardMultigraph,
    color_degree,
    color_degree_profile,
    heavy_edge_graph,
    multigraph_complement,
    multigraph_stats,
)

__version__ = "0.1.0"
