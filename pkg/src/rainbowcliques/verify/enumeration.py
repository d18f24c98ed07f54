"""Enumeration engines: graphs up to isomorphism, set partitions of an edge set
as restricted-growth strings, and the pruned colouring search."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from ..core import EdgeColoredGraph, SimpleGraph, bits

__all__ = [
    "restricted_growth_strings",
    "bell_number",
    "canonical_form",
    "graphs_up_to_iso",
    "ColoringSearch",
]


def restricted_growth_strings(m: int) -> Iterator[tuple[int, ...]]:
    """All ``a`` of length ``m`` with ``a[0] = 0`` and ``a[i] <= max(a[:i]) + 1``."""
    if m == 0:
        yield ()
        return
    a = [0] * m

    def go(i: int, top: int):
        if i == m:
            yield tuple(a)
            return
        for q in range(top + 2):
            a[i] = q
            yield from go(i + 1, max(top, q))

    yield from go(1, 0)


@lru_cache(maxsize=None)
def bell_number(k: int) -> int:
    """Number of set partitions of a ``k``-set, via the Bell triangle."""
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _refine(n: int, adj: Sequence[int]) -> list[int]:
    """Stable vertex colouring by iterated degree refinement; colours are
    ranks of isomorphism-invariant keys."""
    col = [adj[v].bit_count() for v in range(n)]
    ncls = -1
    while True:
        keys = [(col[v], tuple(sorted(col[w] for w in bits(adj[v])))) for v in range(n)]
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        col = [ranks[k] for k in keys]
        if len(ranks) == ncls:
            return col
        ncls = len(ranks)


def canonical_form(n: int, edges) -> tuple[int, int]:
    """Canonical ``(n, mask)`` of a simple graph.

    ``mask`` has bit ``j*(j-1)/2 + i`` set for each edge ``i < j``, minimised
    over all labellings that respect the refined vertex partition.  Two graphs
    are isomorphic iff their canonical forms agree.
    """
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    col = _refine(n, adj)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(col[v], []).append(v)
    ordered = [cells[k] for k in sorted(cells)]
    edge_list = [(u, v) for u in range(n) for v in bits(adj[u]) if u < v]
    best = None
    for choice in product(*(permutations(c) for c in ordered)):
        pos = [0] * n
        i = 0
        for cell in choice:
            for v in cell:
                pos[v] = i
                i += 1
        mask = 0
        for u, v in edge_list:
            a, b = pos[u], pos[v]
            if a > b:
                a, b = b, a
            mask |= 1 << (b * (b - 1) // 2 + a)
        if best is None or mask < best:
            best = mask
    return n, best or 0


def mask_to_graph(n: int, mask: int) -> SimpleGraph:
    return SimpleGraph(n, ((i, j) for j in range(n) for i in range(j) if mask >> (j * (j - 1) // 2 + i) & 1))


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    out = set()
    for mask in _iso_classes(n - 1):
        g = mask_to_graph(n - 1, mask)
        for nb in range(1 << (n - 1)):
            edges = list(g.edges) + [(u, n - 1) for u in bits(nb)]
            out.add(canonical_form(n, edges)[1])
    return tuple(sorted(out))


def graphs_up_to_iso(n: int, min_degree: int = 0) -> list[SimpleGraph]:
    """One representative per isomorphism class of ``n``-vertex graphs, built
    by vertex augmentation; optionally only those with minimum degree at
    least ``min_degree``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return [SimpleGraph(0)]
    gs = [mask_to_graph(n, m) for m in _iso_classes(n)]
    return [g for g in gs if all(g.degree(v) >= min_degree for v in range(n))]


class ColoringSearch:
    """Backtracking over colourings of a fixed graph, one per set partition of
    its edge set (colours assigned as a restricted-growth string in colex
    edge order).

    Branches are cut when some vertex can no longer reach ``min_color_degree``
    distinct colours, and, with ``forbid_rainbow_triangle``, as soon as a
    triangle becomes rainbow.  Neither cut discards a colouring that meets the
    constraints, so the leaves are exactly the qualifying colourings.
    """

    def __init__(self, G: SimpleGraph, min_color_degree: int = 0, forbid_rainbow_triangle: bool = False):
        self.G = G
        self.t = min_color_degree
        self.forbid = forbid_rainbow_triangle
        self.edges = sorted(G.edges, key=lambda e: (e[1], e[0]))
        index = {e: i for i, e in enumerate(self.edges)}
        # triangles closed by edge i: the other two edges precede it
        self.closing: list[list[tuple[int, int]]] = [[] for _ in self.edges]
        for a, b, c in combinations(range(G.n), 3):
            if G.has_edge(a, b) and G.has_edge(a, c) and G.has_edge(b, c):
                es = sorted((index[(a, b)], index[(a, c)], index[(b, c)]))
                self.closing[es[2]].append((es[0], es[1]))
        # remaining uncoloured edges at each endpoint after edge i is coloured
        remaining = [G.degree(v) for v in range(G.n)]
        self.rem_after = []
        for u, v in self.edges:
            remaining[u] -= 1
            remaining[v] -= 1
            self.rem_after.append((remaining[u], remaining[v]))
        self.nodes = 0

    def feasible_start(self) -> bool:
        return all(self.G.degree(v) >= self.t for v in range(self.G.n))

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """All surviving partial colourings of the first ``depth`` edges."""
        depth = min(depth, len(self.edges))
        return list(self._run((), stop=depth))

    def colorings(self, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
        """Yield qualifying colourings (tuples aligned with ``self.edges``)
        extending ``prefix``."""
        return self._run(prefix, stop=len(self.edges))

    def to_colored(self, cols: Sequence[int]) -> EdgeColoredGraph:
        return EdgeColoredGraph(self.G.n, dict(zip(self.edges, cols)))

    def _run(self, prefix: tuple[int, ...], stop: int) -> Iterator[tuple[int, ...]]:
        if not self.feasible_start():
            return
        n = self.G.n
        m = len(self.edges)
        t = self.t
        edges, closing, rem_after, forbid = self.edges, self.closing, self.rem_after, self.forbid
        col = [-1] * m
        counts = [dict() for _ in range(n)]
        distinct = [0] * n

        def assign(i, q):
            u, v = edges[i]
            col[i] = q
            for x in (u, v):
                c = counts[x]
                k = c.get(q, 0)
                if k == 0:
                    distinct[x] += 1
                c[q] = k + 1

        def unassign(i):
            u, v = edges[i]
            q = col[i]
            col[i] = -1
            for x in (u, v):
                c = counts[x]
                k = c[q] - 1
                if k == 0:
                    del c[q]
                    distinct[x] -= 1
                else:
                    c[q] = k

        def ok(i):
            u, v = edges[i]
            ru, rv = rem_after[i]
            if distinct[u] + ru < t or distinct[v] + rv < t:
                return False
            if forbid:
                q = col[i]
                for e1, e2 in closing[i]:
                    a, b = col[e1], col[e2]
                    if a != b and q != a and q != b:
                        return False
            return True

        top = -1
        for i, q in enumerate(prefix):
            assign(i, q)
            if not ok(i):
                return
            top = max(top, q)

        def go(i, top):
            if i == stop:
                yield tuple(col[:stop])
                return
            for q in range(top + 2):
                self.nodes += 1
                assign(i, q)
                if ok(i):
                    yield from go(i + 1, max(top, q))
                unassign(i)

        if m == 0 or stop == 0:
            yield ()
            return
        if not prefix:
            # first edge always takes colour 0
            self.nodes += 1
            assign(0, 0)
            if ok(0):
                yield from go(1, 0)
            return
        yield from go(len(prefix), top)
