"""Explicit colourings used as positive and negative controls for the searchers,
plus seeded random generators for property suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .core import EdgeColoredGraph, SimpleDigraph, StandardMultigraph
from .transforms import orientation_coloring

__all__ = [
    "ConstructionParams",
    "proper_multipartite",
    "regular_tournament",
    "transitive_tournament",
    "tournament_coloring",
    "statement_ii_construction",
    "li_average_construction",
    "random_colored_graph",
    "random_digraph",
    "random_multigraph",
]


def _round_robin_color(N: int, u: int, v: int) -> int:
    """Colour of ``uv`` in a proper colouring of ``K_N`` with at most ``N`` colours."""
    if N % 2:
        return (u + v) % N
    m = N - 1
    if v == m:
        return 2 * u % m
    if u == m:
        return 2 * v % m
    return (u + v) % m


def proper_multipartite(parts: int, L: int) -> EdgeColoredGraph:
    """Complete balanced ``parts``-partite graph with classes of size ``L``,
    properly coloured by restricting a round-robin factorisation of ``K_{parts*L}``.

    Class ``i`` is ``{i*L, ..., i*L + L - 1}``.
    """
    if parts < 1 or L < 1:
        raise ValueError(f"need parts >= 1 and L >= 1, got parts={parts}, L={L}")
    N = parts * L
    colors = {
        (u, v): _round_robin_color(N, u, v) for u, v in combinations(range(N), 2) if u // L != v // L
    }
    return EdgeColoredGraph(N, colors)


def regular_tournament(n: int) -> SimpleDigraph:
    """Rotational tournament: arcs ``(i, i + j mod n)`` for ``j = 1..(n-1)/2``."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"regular tournament needs odd n >= 1, got {n}")
    return SimpleDigraph(n, ((i, (i + j) % n) for i in range(n) for j in range(1, (n - 1) // 2 + 1)))


def transitive_tournament(n: int) -> SimpleDigraph:
    return SimpleDigraph(n, combinations(range(n), 2))


def tournament_coloring(n: int) -> EdgeColoredGraph:
    """Head colouring of the rotational regular tournament on ``n`` vertices."""
    return orientation_coloring(regular_tournament(n))


def statement_ii_construction(s: int, r: int, ell: int, L: int) -> EdgeColoredGraph:
    """Colouring of ``K_n``, ``n = L(s-1-r)``, with no rainbow ``K_{s-r}^ell``
    while every colour degree equals ``n - L + (L+1)/2``.

    The vertex set is cut into ``s-1-r`` classes of ``L`` consecutive ids.
    Inside a class, edges get the head colouring of a rotational tournament
    (colours are vertex ids, so below ``n``).  Edges between classes get
    pairwise distinct fresh colours ``n, n+1, ...`` in lexicographic order.
    """
    if r < 0 or s < max(1 + 2 * r, 2):
        raise ValueError(f"need s >= max(1 + 2r, 2), got s={s}, r={r}")
    if ell < 1 + s - r:
        raise ValueError(f"need ell >= 1 + s - r = {1 + s - r}, got ell={ell}")
    if L < 1 or L % 2 == 0:
        raise ValueError(f"need odd L >= 1, got L={L}")
    k = s - 1 - r
    n = L * k
    T = regular_tournament(L)
    colors: dict[tuple[int, int], int] = {}
    for i in range(k):
        off = i * L
        for a, b in T.arcs:
            u, v = a + off, b + off
            colors[(min(u, v), max(u, v))] = v
    fresh = n
    for u, v in combinations(range(n), 2):
        if u // L != v // L:
            colors[(u, v)] = fresh
            fresh += 1
    return EdgeColoredGraph(n, colors)


def li_average_construction(n: int) -> EdgeColoredGraph:
    """``K_n`` with each edge coloured by its larger endpoint."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return EdgeColoredGraph(n, {(u, v): v for u, v in combinations(range(n), 2)})


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_colored_graph(n: int, edge_prob: float, palette: int, seed=None) -> EdgeColoredGraph:
    """Each pair becomes an edge with probability ``edge_prob`` and receives a
    uniform colour from ``0..palette-1``.  Reproducible for a fixed seed."""
    if not 0 <= edge_prob <= 1:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    if palette < 1:
        raise ValueError(f"palette must be >= 1, got {palette}")
    rng = _rng(seed)
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < edge_prob
    cols = rng.integers(0, palette, size=len(pairs))
    return EdgeColoredGraph(n, {e: int(c) for e, k, c in zip(pairs, keep, cols) if k})


def random_digraph(n: int, arc_prob: float, seed=None) -> SimpleDigraph:
    rng = _rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = rng.random(len(pairs)) < arc_prob
    return SimpleDigraph(n, (a for a, k in zip(pairs, keep) if k))


def random_multigraph(n: int, weights=(1, 1, 1), seed=None) -> StandardMultigraph:
    """Multiplicities drawn independently with relative ``weights`` for 0, 1, 2."""
    rng = _rng(seed)
    p = np.asarray(weights, dtype=float)
    pairs = list(combinations(range(n), 2))
    mus = rng.choice(3, size=len(pairs), p=p / p.sum())
    return StandardMultigraph(n, {e: int(k) for e, k in zip(pairs, mus)})


_BUILDERS = {
    "proper-multipartite": (proper_multipartite, ("parts", "L")),
    "regular-tournament": (regular_tournament, ("n",)),
    "tournament-coloring": (tournament_coloring, ("n",)),
    "statement-ii": (statement_ii_construction, ("s", "r", "ell", "L")),
    "li-average": (li_average_construction, ("n",)),
    "random": (random_colored_graph, ("n", "edge_prob", "palette")),
}


@dataclass(frozen=True)
class ConstructionParams:
    """Named construction plus its parameters; ``build()`` validates and runs it."""

    kind: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def build(self):
        if self.kind not in _BUILDERS:
            raise ValueError(f"unknown construction {self.kind!r}; choose from {sorted(_BUILDERS)}")
        fn, names = _BUILDERS[self.kind]
        missing = [k for k in names if k not in self.params]
        if missing:
            raise ValueError(f"{self.kind} needs parameters {missing}")
        args = [self.params[k] for k in names]
        if self.kind == "random":
            return fn(*args, seed=self.seed)
        return fn(*args)
