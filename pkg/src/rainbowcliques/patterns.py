"""Exact backtracking searches for rainbow cliques and joins, near-complete
multigraph and digraph patterns, and cyclic triangles.

Every searcher returns a :class:`Witness` or ``None``.  ``None`` always means
the whole search space was exhausted.  When a ``max_nodes`` cap is given and
hit first, :class:`SearchBudgetExceeded` is raised instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import EdgeColoredGraph, SimpleDigraph, StandardMultigraph, bits, mask_of

__all__ = [
    "SearchBudgetExceeded",
    "PatternSpec",
    "Witness",
    "is_rainbow",
    "is_properly_colored",
    "find_rainbow_clique",
    "find_rainbow_join",
    "find_multigraph_pattern",
    "find_digraph_pattern",
    "find_cyclic_triangle",
    "validate_witness",
    "max_proper_subgraph",
    "iterative_rainbow_hypothesis",
    "find_iterative_rainbow_vertex",
    "proper_to_rainbow_join",
]


class SearchBudgetExceeded(RuntimeError):
    """Raised when a search hits its node cap before finishing."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes


class _Budget:
    __slots__ = ("cap", "nodes")

    def __init__(self, cap: int | None):
        self.cap = cap
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.cap is not None and self.nodes > self.cap:
            raise SearchBudgetExceeded(self.cap)


KINDS = ("rainbow_clique", "rainbow_join", "multigraph", "digraph", "cyclic_triangle")


@dataclass(frozen=True)
class PatternSpec:
    """Declarative description of a target structure.

    ``s``, ``r`` and ``ell`` are read according to ``kind``; unused ones are
    ignored.  Parameter ranges are checked on construction.
    """

    kind: str
    s: int = 3
    r: int = 0
    ell: int = 1
    with_triangle: bool = False

    def __post_init__(self):
        s, r, ell = self.s, self.r, self.ell
        if self.kind not in KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "rainbow_clique" and s < 2:
            raise ValueError("rainbow clique needs s >= 2")
        if self.kind == "rainbow_join":
            if r < 0 or s < max(1 + 2 * r, 2):
                raise ValueError(f"rainbow join needs s >= max(1 + 2r, 2), got s={s}, r={r}")
            if ell < 1:
                raise ValueError(f"rainbow join needs ell >= 1, got {ell}")
        if self.kind == "multigraph" and not (s >= 1 and 0 <= 2 * r <= s):
            raise ValueError(f"multigraph pattern needs 0 <= r <= s/2, got s={s}, r={r}")
        if self.kind == "digraph":
            if self.with_triangle and not (s >= 3 and 0 <= 2 * r <= s - 3):
                raise ValueError(f"digraph pattern with triangle needs 0 <= r <= (s-3)/2, got s={s}, r={r}")
            if not self.with_triangle and not (s >= 1 and 0 <= 2 * r <= s):
                raise ValueError(f"digraph pattern needs 0 <= r <= s/2, got s={s}, r={r}")

    def search(self, host, max_nodes: int | None = None) -> Witness | None:
        if self.kind == "rainbow_clique":
            return find_rainbow_clique(host, self.s, max_nodes=max_nodes)
        if self.kind == "rainbow_join":
            return find_rainbow_join(host, self.r, self.s, self.ell, max_nodes=max_nodes)
        if self.kind == "multigraph":
            return find_multigraph_pattern(host, self.s, self.r, max_nodes=max_nodes)
        if self.kind == "digraph":
            return find_digraph_pattern(host, self.s, self.r, self.with_triangle, max_nodes=max_nodes)
        return find_cyclic_triangle(host)


@dataclass(frozen=True)
class Witness:
    """A located pattern.

    ``parts`` depends on the pattern: the join's parts (singletons first),
    the multigraph's light pairs, or for digraphs the removed triangle
    ``(i, j, k)`` followed by the removed matching arcs.
    """

    vertices: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...] = ()


# -- predicates ---------------------------------------------------------------


def _induced_edges(G: EdgeColoredGraph, S: Iterable[int]):
    S = sorted(set(S))
    for v in S:
        if not 0 <= v < G.n:
            raise IndexError(f"vertex {v} out of range for n={G.n}")
    m = mask_of(S)
    for u in S:
        for v in bits(G.adj[u] & m & ~((2 << u) - 1)):
            yield u, v


def is_rainbow(G: EdgeColoredGraph, S: Iterable[int]) -> bool:
    """All edges of ``G[S]`` carry pairwise distinct colours."""
    seen = set()
    for u, v in _induced_edges(G, S):
        q = G.c(u, v)
        if q in seen:
            return False
        seen.add(q)
    return True


def is_properly_colored(G: EdgeColoredGraph, S: Iterable[int]) -> bool:
    """No two edges of ``G[S]`` sharing an endpoint share a colour."""
    S = set(S)
    m = mask_of(S)
    for v in S:
        cols = [G.c(v, w) for w in bits(G.adj[v] & m)]
        if len(cols) != len(set(cols)):
            return False
    return True


# -- rainbow cliques and joins --------------------------------------------------


def find_rainbow_clique(G: EdgeColoredGraph, s: int, max_nodes: int | None = None) -> Witness | None:
    """Exact search for ``s`` vertices spanning a rainbow ``K_s``."""
    if s < 2:
        raise ValueError(f"clique size must be >= 2, got {s}")
    budget = _Budget(max_nodes)
    order = sorted(range(G.n), key=lambda v: (-G.adj[v].bit_count(), v))
    adj = G.adj
    nbr = G._nbr_color

    def expand(C: list[int], P: int, used: frozenset) -> list[int] | None:
        if len(C) == s:
            return C
        for v in order:
            if len(C) + P.bit_count() < s:
                return None
            if not P >> v & 1:
                continue
            budget.tick()
            cv = nbr[v]
            new = [cv[u] for u in C]
            fresh = set(new)
            if len(fresh) == len(new) and used.isdisjoint(fresh):
                found = expand(C + [v], P & adj[v], used | fresh)
                if found:
                    return found
            P &= ~(1 << v)
        return None

    hit = expand([], (1 << G.n) - 1, frozenset())
    return Witness(tuple(sorted(hit))) if hit else None


def find_rainbow_join(
    G: EdgeColoredGraph, r: int, s: int, ell: int, max_nodes: int | None = None
) -> Witness | None:
    """Exact search for a rainbow ``K_r`` joined to a balanced complete
    ``(s - r)``-partite graph with parts of size ``ell``.

    Pairs inside one part are not part of the pattern, so they may or may
    not be edges of ``G``.
    """
    PatternSpec("rainbow_join", s=s, r=r, ell=ell)
    budget = _Budget(max_nodes)
    sizes = [1] * r + [ell] * (s - r)
    nparts = len(sizes)
    nbr = G._nbr_color
    full = (1 << G.n) - 1
    parts: list[list[int]] = [[] for _ in sizes]

    def place(j: int, common: int, placed: int, used: frozenset, outside: list[int]):
        # `common`: vertices adjacent to everything placed outside part j
        part = parts[j]
        if len(part) == sizes[j]:
            if j + 1 == nparts:
                return True
            nxt_common = common
            for v in part:
                nxt_common &= G.adj[v]
            return place(j + 1, nxt_common, placed, used, outside + part)
        cand = common & ~placed
        if part:
            cand &= ~((2 << part[-1]) - 1)
        elif j > 0 and sizes[j] == sizes[j - 1] and j >= r:
            # parts of equal size are interchangeable: order by first vertex
            cand &= ~((2 << parts[j - 1][0]) - 1)
        elif 0 < j < r:
            cand &= ~((2 << parts[j - 1][0]) - 1)
        need = sizes[j] - len(part)
        for v in bits(cand):
            if cand.bit_count() < need:
                return False
            cand &= ~(1 << v)
            budget.tick()
            cv = nbr[v]
            new = [cv[u] for u in outside]
            fresh = set(new)
            if len(fresh) != len(new) or not used.isdisjoint(fresh):
                continue
            part.append(v)
            if place(j, common, placed | 1 << v, used | fresh, outside):
                return True
            part.pop()
        return False

    if place(0, full, 0, frozenset(), []):
        return Witness(tuple(v for p in parts for v in p), tuple(tuple(p) for p in parts))
    return None


# -- multigraph patterns ----------------------------------------------------------


def find_multigraph_pattern(
    M: StandardMultigraph, s: int, r: int, induced: bool = False, max_nodes: int | None = None
) -> Witness | None:
    """Find ``s`` vertices that are pairwise adjacent and whose light pairs
    form a matching of at most ``r`` pairs; every other pair is heavy.

    With ``induced=True`` the light pairs must number exactly ``r``.  The
    witness ``parts`` lists the light pairs.
    """
    PatternSpec("multigraph", s=s, r=r)
    budget = _Budget(max_nodes)
    supp = [M.heavy[v] | M.light[v] for v in range(M.n)]
    light = M.light

    def expand(S: list[int], cand: int, in_light: int, pairs: list[tuple[int, int]]):
        if len(S) == s:
            return (not induced or len(pairs) == r) and (S, pairs)
        while cand:
            if len(S) + cand.bit_count() < s:
                return None
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            budget.tick()
            smask = mask_of(S)
            lv = light[v] & smask
            k = lv.bit_count()
            if k > 1 or (k == 1 and (lv & in_light or len(pairs) == r)):
                continue
            if k == 1:
                u = lv.bit_length() - 1
                found = expand(S + [v], cand & supp[v], in_light | lv | 1 << v, pairs + [(u, v)])
            else:
                found = expand(S + [v], cand & supp[v], in_light, pairs)
            if found:
                return found
        return None

    hit = expand([], (1 << M.n) - 1, 0, [])
    if not hit:
        return None
    S, pairs = hit
    return Witness(tuple(S), tuple(pairs))


# -- digraph patterns ---------------------------------------------------------------


def _digraph_cover(S: Sequence[int], missing: list[tuple[int, int]], r: int, with_triangle: bool):
    """Label the missing arcs of ``D[S]`` as a cyclic triangle plus an oriented
    matching padded to exactly ``r`` arcs, or return ``None``."""
    outm: dict[int, list[int]] = {}
    inm: dict[int, list[int]] = {}
    for u, v in missing:
        outm.setdefault(u, []).append(v)
        inm.setdefault(v, []).append(u)

    def pad(matching, blocked):
        free = [v for v in S if v not in blocked]
        extra = []
        for a, b in matching:
            free.remove(a), free.remove(b)
        while len(matching) + len(extra) < r:
            extra.append((free.pop(0), free.pop(0)))
        return list(matching) + extra

    def is_matching(arcs, blocked):
        seen = set(blocked)
        for u, v in arcs:
            if u in seen or v in seen:
                return False
            seen.update((u, v))
        return True

    if not with_triangle:
        if len(missing) <= r and is_matching(missing, ()):
            return (), pad(sorted(missing), ())
        return None

    tri_options = []
    deg2 = [v for v in S if len(outm.get(v, ())) + len(inm.get(v, ())) >= 2]
    if deg2:
        x = deg2[0]
        if len(outm.get(x, ())) != 1 or len(inm.get(x, ())) != 1:
            return None
        y, z = outm[x][0], inm[x][0]
        if y == z:
            return None
        tri_options.append((x, y, z))
    else:
        # missing arcs form a matching; the triangle absorbs at most one of them
        touched = {v for a in missing for v in a}
        free = [v for v in S if v not in touched]
        if len(free) >= 3:
            tri_options.append(tuple(free[:3]))
        if free:
            for g, h in missing:
                tri_options.append((g, h, free[0]))
    for i, j, k in tri_options:
        tri = {(i, j), (j, k), (k, i)}
        rest = sorted(a for a in missing if a not in tri)
        if len(rest) <= r and is_matching(rest, (i, j, k)):
            return (i, j, k), pad(rest, {i, j, k})
    return None


def find_digraph_pattern(
    D: SimpleDigraph, s: int, r: int, with_triangle: bool, max_nodes: int | None = None
) -> Witness | None:
    """Find ``s`` vertices whose induced subdigraph contains every ordered pair
    except (optionally) the arcs of one cyclic triangle ``(i,j),(j,k),(k,i)``
    and the arcs of an oriented ``r``-matching disjoint from the triangle.

    The witness ``parts`` holds the triangle triple (when requested) followed
    by the ``r`` matching arcs.
    """
    PatternSpec("digraph", s=s, r=r, with_triangle=with_triangle)
    budget = _Budget(max_nodes)
    max_deg = 2 if with_triangle else 1
    max_missing = r + (3 if with_triangle else 0)

    def expand(S: list[int], cand: int, missing: list, mdeg: dict[int, int]):
        if len(S) == s:
            cover = _digraph_cover(S, missing, r, with_triangle)
            if cover is None:
                return None
            tri, matching = cover
            parts = ((tri,) if with_triangle else ()) + tuple(matching)
            return Witness(tuple(S), parts)
        while cand:
            if len(S) + cand.bit_count() < s:
                return None
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            budget.tick()
            new = []
            for u in S:
                fwd, bwd = D.out[u] >> v & 1, D.out[v] >> u & 1
                if not fwd:
                    new.append((u, v))
                if not bwd:
                    new.append((v, u))
            if len(missing) + len(new) > max_missing:
                continue
            deg = dict(mdeg)
            for a, b in new:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if any(d > max_deg for d in deg.values()) or sum(d == 2 for d in deg.values()) > 3:
                continue
            found = expand(S + [v], cand & (D.out[v] | D.inn[v]), missing + new, deg)
            if found:
                return found
        return None

    return expand([], (1 << D.n) - 1, [], {})


def find_cyclic_triangle(D: SimpleDigraph) -> Witness | None:
    """A triple ``(x, y, z)`` with arcs ``(x,y), (y,z), (z,x)``; ``x`` is the
    smallest vertex of the first such triangle found."""
    for x in range(D.n):
        for y in bits(D.out[x]):
            closing = D.out[y] & D.inn[x]
            if closing:
                z = (closing & -closing).bit_length() - 1
                return Witness((x, y, z))
    return None


def validate_witness(host, spec: PatternSpec, w: Witness) -> bool:
    """Re-check a witness against its host by direct predicate evaluation."""
    V = list(w.vertices)
    if len(set(V)) != len(V) or any(not 0 <= v < host.n for v in V):
        return False
    if spec.kind == "rainbow_clique":
        return len(V) == spec.s and all(host.has_edge(u, v) for u, v in combinations(V, 2)) and is_rainbow(host, V)
    if spec.kind == "rainbow_join":
        parts = [list(p) for p in w.parts]
        sizes = [1] * spec.r + [spec.ell] * (spec.s - spec.r)
        if [len(p) for p in parts] != sizes or sorted(V) != sorted(v for p in parts for v in p):
            return False
        cols = []
        for i, j in combinations(range(len(parts)), 2):
            for u in parts[i]:
                for v in parts[j]:
                    if not host.has_edge(u, v):
                        return False
                    cols.append(host.c(u, v))
        return len(cols) == len(set(cols))
    if spec.kind == "multigraph":
        if len(V) != spec.s:
            return False
        lights = [(u, v) for u, v in combinations(V, 2) if host.mu(u, v) == 1]
        if any(host.mu(u, v) == 0 for u, v in combinations(V, 2)):
            return False
        ends = [x for p in lights for x in p]
        return len(ends) == len(set(ends)) and len(lights) <= spec.r
    if spec.kind == "digraph":
        if len(V) != spec.s:
            return False
        removed = set()
        parts = list(w.parts)
        touched = []
        if spec.with_triangle:
            i, j, k = parts.pop(0)
            removed |= {(i, j), (j, k), (k, i)}
            touched += [i, j, k]
        if len(parts) != spec.r:
            return False
        for g, h in parts:
            removed.add((g, h))
            touched += [g, h]
        if len(touched) != len(set(touched)) or not set(touched) <= set(V):
            return False
        return all(host.has_arc(u, v) for u in V for v in V if u != v and (u, v) not in removed)
    x, y, z = V
    return host.has_arc(x, y) and host.has_arc(y, z) and host.has_arc(z, x)


# -- properly coloured subgraphs ------------------------------------------------------


def max_proper_subgraph(G: EdgeColoredGraph, S: Iterable[int]) -> list[tuple[int, int]]:
    """A largest properly coloured edge set inside ``G[S]`` (exhaustive)."""
    edges = list(_induced_edges(G, S))
    cols = [G.c(u, v) for u, v in edges]
    best: list[int] = []
    taken: set[tuple[int, int]] = set()
    chosen: list[int] = []

    def go(i: int):
        nonlocal best
        if len(chosen) + len(edges) - i <= len(best):
            return
        if i == len(edges):
            best = list(chosen)
            return
        u, v = edges[i]
        q = cols[i]
        if (u, q) not in taken and (v, q) not in taken:
            taken.update(((u, q), (v, q)))
            chosen.append(i)
            go(i + 1)
            chosen.pop()
            taken.difference_update(((u, q), (v, q)))
        go(i + 1)

    go(0)
    return [edges[i] for i in best]


# -- constructive rainbow steps --------------------------------------------------------


def iterative_rainbow_hypothesis(G: EdgeColoredGraph, A: Iterable[int], B: Iterable[int]) -> bool:
    """``|B| > |A| * e(G[A])`` and the edges between ``A`` and ``B`` are properly coloured."""
    A, B = set(A), set(B)
    if A & B:
        return False
    if len(B) <= len(A) * len(list(_induced_edges(G, A))):
        return False
    mb, ma = mask_of(B), mask_of(A)
    for a in A:
        cols = [G.c(a, b) for b in bits(G.adj[a] & mb)]
        if len(cols) != len(set(cols)):
            return False
    for b in B:
        cols = [G.c(b, a) for a in bits(G.adj[b] & ma)]
        if len(cols) != len(set(cols)):
            return False
    return True


def find_iterative_rainbow_vertex(G: EdgeColoredGraph, A: Iterable[int], B: Iterable[int]) -> int | None:
    """Smallest ``b`` in ``B`` none of whose edges into ``A`` reuses a colour of ``G[A]``."""
    A = sorted(set(A))
    inner = {G.c(u, v) for u, v in _induced_edges(G, A)}
    for b in sorted(set(B)):
        cb = G.colors_at(b)
        if all(cb[a] not in inner for a in A if a in cb):
            return b
    return None


def proper_to_rainbow_join(
    G: EdgeColoredGraph, A_parts: Sequence[Sequence[int]], B_parts: Sequence[Sequence[int]], k: int
) -> Witness | None:
    """Grow a rainbow join of the given rainbow multipartite graph on ``A_parts``
    with ``k`` vertices from each part of ``B_parts``.

    Vertices are added one at a time, each chosen so that its edges to the
    structure built so far avoid every colour already used and are pairwise
    distinct.  Returns ``None`` when some part runs out of candidates.
    """
    parts = [list(p) for p in A_parts]
    built = [v for p in parts for v in p]
    used: set[int] = set()
    for i, j in combinations(range(len(parts)), 2):
        for u in parts[i]:
            for v in parts[j]:
                used.add(G.c(u, v))
    for pool in B_parts:
        chosen: list[int] = []
        for _ in range(k):
            pick = None
            for b in pool:
                if b in chosen:
                    continue
                targets = [v for v in built if v not in chosen]
                if not all(G.has_edge(b, v) for v in targets):
                    continue
                cols = [G.c(b, v) for v in targets]
                if len(cols) == len(set(cols)) and used.isdisjoint(cols):
                    pick = b
                    break
            if pick is None:
                return None
            used.update(G.c(pick, v) for v in built if v not in chosen)
            chosen.append(pick)
            built.append(pick)
        parts.append(chosen)
    return Witness(tuple(built), tuple(tuple(p) for p in parts))
