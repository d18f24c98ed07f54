"""Reductions between edge-coloured graphs, digraphs and standard multigraphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from numbers import Real

from .core import (
    EdgeColoredGraph,
    SimpleDigraph,
    SimpleGraph,
    StandardMultigraph,
    bits,
    digraph_complement,
    norm_edge,
)

__all__ = [
    "ReductionTrace",
    "edge_minimal_reduce",
    "is_edge_minimal",
    "build_gcm_digraph",
    "two_cycle_graph",
    "digraph_to_multigraph",
    "digraph_complement",
    "orientation_coloring",
]


@dataclass
class ReductionTrace:
    """Audit trail of :func:`edge_minimal_reduce`.

    ``rounds`` counts scans under restart-after-deletion semantics, i.e.
    one per deletion plus the final scan that finds nothing to delete.
    """

    deleted_edges: list[tuple[tuple[int, int], int]] = field(default_factory=list)
    rounds: int = 0

    def replay(self, G: EdgeColoredGraph) -> EdgeColoredGraph:
        gone = {e for e, _ in self.deleted_edges}
        return G.restrict(e for e in G.color if e not in gone)


def edge_minimal_reduce(G: EdgeColoredGraph) -> tuple[EdgeColoredGraph, ReductionTrace]:
    """Delete edges whose colour repeats at both endpoints until none remain.

    Edges are scanned in lexicographic order.  A deletion only lowers colour
    multiplicities, so an edge that was not deletable stays that way and a
    single pass gives the same result as restarting the scan after every
    deletion.
    """
    count = [Counter(G.colors_at(v).values()) for v in range(G.n)]
    trace = ReductionTrace()
    keep = []
    for e in G.edges:
        u, v = e
        q = G.color[e]
        if count[u][q] >= 2 and count[v][q] >= 2:
            count[u][q] -= 1
            count[v][q] -= 1
            trace.deleted_edges.append((e, q))
        else:
            keep.append(e)
    trace.rounds = len(trace.deleted_edges) + 1
    return G.restrict(keep), trace


def is_edge_minimal(G: EdgeColoredGraph) -> bool:
    """True iff no monochromatic path on three edges exists.

    Checked directly on paths ``a-b-c-d``: for every edge ``bc`` look for a
    second ``b``-edge and a second ``c``-edge of the same colour with distinct
    far endpoints.
    """
    for (b, c), q in G.color.items():
        left = [a for a, k in G.colors_at(b).items() if k == q and a != c]
        right = [d for d, k in G.colors_at(c).items() if k == q and d != b]
        if any(a != d for a in left for d in right):
            return False
    return True


def _color_classes(G: EdgeColoredGraph, v: int) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for w, q in G.colors_at(v).items():
        classes.setdefault(q, []).append(w)
    return classes


def build_gcm_digraph(G: EdgeColoredGraph, m: Real, choose=min) -> SimpleDigraph:
    """An arc from ``v`` to one representative of each colour class of size
    at most ``m`` at ``v``.

    ``choose`` picks the representative from the class (a list of vertices);
    the default takes the smallest id.  ``m`` may be any real ``>= 1``;
    Python compares ints against floats and fractions exactly.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    arcs = []
    for v in range(G.n):
        for q, Q in sorted(_color_classes(G, v).items()):
            if len(Q) <= m:
                arcs.append((v, choose(Q)))
    return SimpleDigraph(G.n, arcs)


def two_cycle_graph(D: SimpleDigraph) -> SimpleGraph:
    """Edges ``vw`` with both ``(v, w)`` and ``(w, v)`` arcs."""
    return SimpleGraph(D.n, ((v, w) for v in range(D.n) for w in bits(D.out[v] & D.inn[v]) if v < w))


def digraph_to_multigraph(D: SimpleDigraph) -> StandardMultigraph:
    """Forget orientations: each pair gets the number of arcs between it."""
    mult: dict[tuple[int, int], int] = {}
    for u, v in D.arcs:
        e = norm_edge(u, v)
        mult[e] = mult.get(e, 0) + 1
    return StandardMultigraph(D.n, mult)


def orientation_coloring(D: SimpleDigraph) -> EdgeColoredGraph:
    """Colour each edge of an oriented graph by the head of its arc."""
    if not D.is_oriented():
        u = next(v for v in range(D.n) if D.out[v] & D.inn[v])
        w = next(bits(D.out[u] & D.inn[u]))
        raise ValueError(f"digraph has a 2-cycle on {{{u}, {w}}}; head colouring is ambiguous")
    return EdgeColoredGraph(D.n, {norm_edge(u, v): v for u, v in D.arcs})
