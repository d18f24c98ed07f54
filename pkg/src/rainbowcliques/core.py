"""Immutable graph types and the degree arithmetic shared by every other module.

Vertices are the integers ``0..n-1``.  Adjacency is kept as one Python ``int``
bit-set per vertex so neighbourhood intersections are a single ``&``.
Degrees are exact integers and averages are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for n={n}")


class SimpleGraph:
    """Loop-free undirected graph on ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        _check_n(n)
        es = set()
        adj = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            e = norm_edge(u, v)
            if e in es:
                raise ValueError(f"duplicate edge {e}")
            es.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        self.adj: tuple[int, ...] = tuple(adj)

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, combinations(range(n), 2))

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self, vertices: Iterable[int] | None = None) -> int:
        """Number of edges, or of edges inside ``vertices`` when given."""
        if vertices is None:
            return len(self.edges)
        m = mask_of(vertices)
        return sum((self.adj[v] & m).bit_count() for v in bits(m)) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={sorted(self.edges)})"


class EdgeColoredGraph:
    """A simple graph together with a total colouring of its edges.

    ``colors`` maps unordered vertex pairs to nonnegative integer colour ids.
    Pairs may be given in either orientation; they are normalised to ``(u, v)``
    with ``u < v``.
    """

    __slots__ = ("n", "color", "adj", "_nbr_color")

    def __init__(self, n: int, colors: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]]):
        _check_n(n)
        items = colors.items() if isinstance(colors, Mapping) else (((u, v), c) for u, v, c in colors)
        col: dict[Edge, int] = {}
        adj = [0] * n
        nbr: list[dict[int, int]] = [{} for _ in range(n)]
        for (u, v), c in items:
            _check_vertex(n, u)
            _check_vertex(n, v)
            e = norm_edge(u, v)
            if e in col:
                raise ValueError(f"duplicate edge {e}")
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"colour of {e} must be a nonnegative int, got {c!r}")
            col[e] = c
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            nbr[u][v] = c
            nbr[v][u] = c
        self.n = n
        self.color: dict[Edge, int] = col
        self.adj: tuple[int, ...] = tuple(adj)
        self._nbr_color: tuple[dict[int, int], ...] = tuple(nbr)

    @classmethod
    def from_labels(cls, n: int, labels: Mapping[tuple[int, int], Hashable]) -> EdgeColoredGraph:
        """Build from arbitrary hashable colour labels, renumbered by first appearance
        in sorted edge order."""
        ids: dict[Hashable, int] = {}
        normed = {norm_edge(u, v): lab for (u, v), lab in labels.items()}
        out = {}
        for e in sorted(normed):
            out[e] = ids.setdefault(normed[e], len(ids))
        return cls(n, out)

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.color)

    @property
    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.color)

    def c(self, u: int, v: int) -> int:
        """Colour of edge ``uv``; ``KeyError`` if absent."""
        return self._nbr_color[u][v]

    def colors_at(self, v: int) -> dict[int, int]:
        """Neighbour -> colour map of the star at ``v`` (read-only by convention)."""
        return self._nbr_color[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.adj[v].bit_count()

    def palette(self) -> set[int]:
        return set(self.color.values())

    def canonical(self) -> EdgeColoredGraph:
        """Relabel colours ``0..k-1`` by first appearance in sorted edge order."""
        return EdgeColoredGraph.from_labels(self.n, self.color)

    def restrict(self, edges: Iterable[tuple[int, int]]) -> EdgeColoredGraph:
        """Spanning subgraph on the given edges, keeping their colours."""
        return EdgeColoredGraph(self.n, {norm_edge(u, v): self.c(u, v) for u, v in edges})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeColoredGraph) and self.n == other.n and self.color == other.color

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.color.items())))

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self.n}, m={len(self.color)}, colors={len(self.palette())})"


class SimpleDigraph:
    """Loop-free digraph with at most one copy of each ordered pair."""

    __slots__ = ("n", "arcs", "out", "inn")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        _check_n(n)
        out = [0] * n
        inn = [0] * n
        aset = set()
        for u, v in arcs:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"loop arc at vertex {u}")
            if (u, v) in aset:
                raise ValueError(f"duplicate arc {(u, v)}")
            aset.add((u, v))
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.arcs: frozenset[tuple[int, int]] = frozenset(aset)
        self.out: tuple[int, ...] = tuple(out)
        self.inn: tuple[int, ...] = tuple(inn)

    @classmethod
    def complete(cls, n: int) -> SimpleDigraph:
        return cls(n, ((u, v) for u in range(n) for v in range(n) if u != v))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def out_degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.out[v].bit_count()

    def in_degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return self.inn[v].bit_count()

    def out_neighbors(self, v: int) -> list[int]:
        return list(bits(self.out[v]))

    def is_oriented(self) -> bool:
        return all(not (self.out[v] & self.inn[v]) for v in range(self.n))

    def underlying_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, {norm_edge(u, v) for u, v in self.arcs})

    def complement(self) -> SimpleDigraph:
        """Ordered-pair complement over the non-diagonal pairs."""
        return digraph_complement(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleDigraph) and (self.n, self.arcs) == (other.n, other.arcs)

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"SimpleDigraph(n={self.n}, arcs={sorted(self.arcs)})"


class StandardMultigraph:
    """Loop-free multigraph with every multiplicity in ``{0, 1, 2}``.

    Only pairs of positive multiplicity are stored.  ``heavy`` and ``light``
    are bit-set rows of the multiplicity-2 and multiplicity-1 neighbours.
    """

    __slots__ = ("n", "mult", "heavy", "light")

    def __init__(self, n: int, mult: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] = ()):
        _check_n(n)
        items = mult.items() if isinstance(mult, Mapping) else (((u, v), k) for u, v, k in mult)
        mu: dict[Edge, int] = {}
        heavy = [0] * n
        light = [0] * n
        for (u, v), k in items:
            _check_vertex(n, u)
            _check_vertex(n, v)
            e = norm_edge(u, v)
            if e in mu:
                raise ValueError(f"duplicate pair {e}")
            if k not in (0, 1, 2):
                raise ValueError(f"multiplicity of {e} must be 0, 1 or 2, got {k!r}")
            if k == 0:
                continue
            mu[e] = k
            rows = heavy if k == 2 else light
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.mult: dict[Edge, int] = mu
        self.heavy: tuple[int, ...] = tuple(heavy)
        self.light: tuple[int, ...] = tuple(light)

    @classmethod
    def complete(cls, n: int, k: int = 2) -> StandardMultigraph:
        return cls(n, {e: k for e in combinations(range(n), 2)})

    def mu(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self.mult.get(norm_edge(u, v), 0)

    def degree(self, v: int, within: Iterable[int] | None = None) -> int:
        """``d_M(v)``, or ``d_M(v, U)`` when ``within`` is given."""
        _check_vertex(self.n, v)
        if within is None:
            return 2 * self.heavy[v].bit_count() + self.light[v].bit_count()
        m = mask_of(within)
        return 2 * (self.heavy[v] & m).bit_count() + (self.light[v] & m).bit_count()

    def edge_count(self) -> int:
        """``e(M)``: the sum of all multiplicities."""
        return sum(self.mult.values())

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        m = mask_of(vertices)
        total = 0
        for v in bits(m):
            total += 2 * (self.heavy[v] & m).bit_count() + (self.light[v] & m).bit_count()
        return total // 2

    def support(self) -> SimpleGraph:
        """The underlying simple graph ``G(M)``."""
        return SimpleGraph(self.n, self.mult)

    def induced(self, vertices: Iterable[int]) -> tuple[StandardMultigraph, list[int]]:
        """Induced submultigraph relabelled to ``0..k-1``; also returns the old labels."""
        keep = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(keep)}
        mu = {(idx[u], idx[v]): k for (u, v), k in self.mult.items() if u in idx and v in idx}
        return StandardMultigraph(len(keep), mu), keep

    def complement(self) -> StandardMultigraph:
        return multigraph_complement(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StandardMultigraph) and (self.n, self.mult) == (other.n, other.mult)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.mult.items())))

    def __repr__(self) -> str:
        return f"StandardMultigraph(n={self.n}, e={self.edge_count()})"


def color_degree(G: EdgeColoredGraph, v: int) -> int:
    """Number of distinct colours on the edges at ``v``."""
    _check_vertex(G.n, v)
    return len(set(G.colors_at(v).values()))


def color_degree_profile(G: EdgeColoredGraph) -> tuple[int, Fraction]:
    """Minimum and exact average colour degree."""
    if G.n == 0:
        raise ValueError("colour-degree profile of an empty vertex set")
    cds = [color_degree(G, v) for v in range(G.n)]
    return min(cds), Fraction(sum(cds), G.n)


def multigraph_stats(
    M: StandardMultigraph, U: Iterable[int] | None = None, U2: Iterable[int] | None = None
) -> tuple[int, int, int, int]:
    """Return ``(delta(M), Delta(M), e(M), e_M(U, U2))``.

    ``e_M(U, U2)`` sums ``d_M(u, U2)`` over ``u`` in ``U``, so pairs inside
    ``U & U2`` are counted twice.  Both sets default to all vertices.
    """
    U = list(range(M.n)) if U is None else list(U)
    U2 = list(range(M.n)) if U2 is None else list(U2)
    for v in (*U, *U2):
        _check_vertex(M.n, v)
    if M.n == 0:
        return 0, 0, 0, 0
    degs = [M.degree(v) for v in range(M.n)]
    m2 = mask_of(U2)
    cross = sum(2 * (M.heavy[u] & m2).bit_count() + (M.light[u] & m2).bit_count() for u in set(U))
    return min(degs), max(degs), M.edge_count(), cross


def multigraph_complement(M: StandardMultigraph) -> StandardMultigraph:
    """Pairwise complement ``mu -> 2 - mu``."""
    return StandardMultigraph(M.n, {e: 2 - M.mult.get(e, 0) for e in combinations(range(M.n), 2)})


def heavy_edge_graph(M: StandardMultigraph) -> SimpleGraph:
    """Simple graph of the multiplicity-2 pairs."""
    return SimpleGraph(M.n, (e for e, k in M.mult.items() if k == 2))


def light_edge_graph(M: StandardMultigraph) -> SimpleGraph:
    return SimpleGraph(M.n, (e for e, k in M.mult.items() if k == 1))


def digraph_complement(D: SimpleDigraph) -> SimpleDigraph:
    full = (1 << D.n) - 1
    arcs = [(u, v) for u in range(D.n) for v in bits(full & ~D.out[u] & ~(1 << u))]
    return SimpleDigraph(D.n, arcs)
