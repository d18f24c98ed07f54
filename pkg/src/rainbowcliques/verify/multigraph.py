"""Structure predicates on standard multigraphs and simple graphs: min-degree
peeling, (K_s, beta)-extremality, the sparse-class properties P1/P2, and the
hypothesis/conclusion pairs of the degree observations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

from ..core import SimpleGraph, StandardMultigraph, bits, mask_of
from ..patterns import find_multigraph_pattern

__all__ = [
    "Peeled",
    "peel_to_min_degree",
    "peel_hypothesis",
    "ExtremalityResult",
    "extremality_check",
    "satisfies_p1",
    "satisfies_p2",
    "heavy_degree_hypothesis",
    "heavy_degree_conclusion",
    "degree_bound_hypothesis",
    "degree_bound_conclusion",
]


class Peeled(NamedTuple):
    multigraph: StandardMultigraph
    kept: list[int]
    removed: list[int]


def _F(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def peel_to_min_degree(M: StandardMultigraph, d, beta) -> Peeled:
    """Repeatedly delete a vertex of degree below ``2(d - beta)`` times the
    current order; stop at the first iterate where no such vertex exists.

    The victim is a vertex of least degree, ties to the lowest id.  The
    result is relabelled to ``0..k-1``; ``kept`` maps back to ``M``'s ids.
    """
    d, beta = _F(d), _F(beta)
    if not 0 < beta < 1:
        raise ValueError(f"beta must lie in (0, 1), got {beta}")
    alive = (1 << M.n) - 1
    deg = [M.degree(v) for v in range(M.n)]
    removed = []
    while alive:
        order = alive.bit_count()
        v = min(bits(alive), key=lambda x: (deg[x], x))
        if deg[v] >= 2 * (d - beta) * order:
            break
        alive &= ~(1 << v)
        removed.append(v)
        for w in bits(M.heavy[v] & alive):
            deg[w] -= 2
        for w in bits(M.light[v] & alive):
            deg[w] -= 1
    sub, kept = M.induced(bits(alive))
    return Peeled(sub, kept, removed)


def peel_hypothesis(M: StandardMultigraph, d, alpha, beta) -> bool:
    """Concrete hypotheses under which peeling provably keeps ``> (1-beta)n``
    vertices.

    Requires ``0 < alpha < beta^2 < beta < 1``, ``d <= 1``,
    ``e(M) >= (d - alpha) n^2``, ``ceil(beta n)/n < beta + sqrt(beta^2 - alpha)``
    (the concrete form of "n large"), and ``e(M_t) <= d (n-t)^2`` for every
    peeled iterate ``M_t`` with ``t <= ceil(beta n)``.  The last condition
    restricts the density bound to the iterates the argument inspects.
    """
    d, alpha, beta = _F(d), _F(alpha), _F(beta)
    n = M.n
    if not (0 < alpha < beta * beta < beta < 1) or d > 1 or n == 0:
        return False
    if M.edge_count() < (d - alpha) * n * n:
        return False
    t_max = math.ceil(beta * n)
    if not Fraction(t_max, n) < beta + math.sqrt(beta * beta - alpha):
        return False
    alive = (1 << n) - 1
    deg = [M.degree(v) for v in range(n)]
    e = M.edge_count()
    for t in range(t_max + 1):
        if e > d * (n - t) ** 2:
            return False
        if t == t_max or not alive:
            break
        order = alive.bit_count()
        v = min(bits(alive), key=lambda x: (deg[x], x))
        if deg[v] >= 2 * (d - beta) * order:
            break
        e -= deg[v]
        alive &= ~(1 << v)
        for w in bits(M.heavy[v] & alive):
            deg[w] -= 2
        for w in bits(M.light[v] & alive):
            deg[w] -= 1
    return True


# -- extremality -----------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalityResult:
    """``status`` is ``"extremal"`` (with ``parts``), ``"not_extremal"``
    (certified by exhaustive search) or ``"unknown"`` (heuristic gave up)."""

    status: str
    parts: tuple[tuple[int, ...], ...] = ()


def _part_size(n: int, s: int, beta: Fraction) -> int:
    return max(0, math.ceil(Fraction(n, s - 1) - beta * n))


def _valid_parts(G: SimpleGraph, s: int, beta: Fraction, parts) -> bool:
    n = G.n
    k = Fraction(n, s - 1) - beta * n
    seen: set[int] = set()
    for p in parts:
        if seen & set(p) or len(p) < k or G.edge_count(p) >= beta * n * n:
            return False
        seen |= set(p)
    return len(parts) == s - 1


def extremality_check(G: SimpleGraph, s: int, beta, exact_limit: int = 16, restarts: int = 50, seed=0):
    """Look for ``s - 1`` disjoint classes, each of size at least
    ``n/(s-1) - beta*n`` and spanning fewer than ``beta*n^2`` edges.

    Classes can be shrunk without adding edges, so it suffices to look for
    classes of exactly the minimum size.  Up to ``exact_limit`` vertices the
    search is exhaustive; beyond that a seeded greedy plus swap search runs
    and failure is reported as ``"unknown"``.
    """
    beta = _F(beta)
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    n = G.n
    k = _part_size(n, s, beta)
    cap = beta * n * n
    if k == 0:
        return ExtremalityResult("extremal", tuple(() for _ in range(s - 1)))
    if (s - 1) * k > n:
        return ExtremalityResult("not_extremal")
    if n <= exact_limit:
        parts = _exact_parts(G, s - 1, k, cap)
        return ExtremalityResult("extremal", parts) if parts else ExtremalityResult("not_extremal")
    parts = _heuristic_parts(G, s - 1, k, cap, restarts, np.random.default_rng(seed))
    if parts and _valid_parts(G, s, beta, parts):
        return ExtremalityResult("extremal", parts)
    return ExtremalityResult("unknown")


def _sparse_sets(G: SimpleGraph, k: int, cap: Fraction) -> list[int]:
    """Bit masks of all ``k``-sets spanning fewer than ``cap`` edges."""
    out = []
    n = G.n
    adj = G.adj

    def go(start: int, mask: int, size: int, e: int):
        if size == k:
            out.append(mask)
            return
        for v in range(start, n - (k - size) + 1):
            e2 = e + (adj[v] & mask).bit_count()
            if e2 < cap:
                go(v + 1, mask | 1 << v, size + 1, e2)

    go(0, 0, 0, 0)
    return out


def _exact_parts(G: SimpleGraph, count: int, k: int, cap: Fraction):
    sets = _sparse_sets(G, k, cap)

    def pick(i: int, used: int, chosen: list[int]):
        if len(chosen) == count:
            return chosen
        for j in range(i, len(sets)):
            if not sets[j] & used:
                found = pick(j + 1, used | sets[j], chosen + [sets[j]])
                if found:
                    return found
        return None

    found = pick(0, 0, [])
    if found is None:
        return None
    return tuple(tuple(bits(m)) for m in found)


def _heuristic_parts(G: SimpleGraph, count: int, k: int, cap: Fraction, restarts: int, rng):
    n = G.n
    adj = G.adj
    for _ in range(restarts):
        free = set(range(n))
        parts = []
        for _ in range(count):
            start = int(rng.choice(sorted(free)))
            part = [start]
            free.discard(start)
            pmask = 1 << start
            while len(part) < k:
                v = min(free, key=lambda x: ((adj[x] & pmask).bit_count(), rng.random()))
                part.append(v)
                free.discard(v)
                pmask |= 1 << v
            parts.append(part)
        # swap moves: exchange a part vertex for a free vertex with fewer inside neighbours
        improved = True
        while improved:
            improved = False
            for part in parts:
                pmask = mask_of(part)
                for i, v in enumerate(part):
                    inside = (adj[v] & pmask).bit_count()
                    for w in sorted(free):
                        if (adj[w] & pmask & ~(1 << v)).bit_count() < inside:
                            free.add(v)
                            free.discard(w)
                            part[i] = w
                            pmask = mask_of(part)
                            improved = True
                            break
        if all(G.edge_count(p) < cap for p in parts):
            return tuple(tuple(sorted(p)) for p in parts)
    return None


# -- sparse classes P1 / P2 --------------------------------------------------------------


def satisfies_p1(M: StandardMultigraph, U: Iterable[int], s: int, beta) -> bool:
    """``U`` is independent in ``M`` and ``|U| >= (1/(s-1) - beta) n``."""
    U = set(U)
    m = mask_of(U)
    indep = all(not ((M.heavy[u] | M.light[u]) & m) for u in U)
    return indep and len(U) >= (Fraction(1, s - 1) - _F(beta)) * M.n


def satisfies_p2(M: StandardMultigraph, U: Iterable[int], s: int, beta) -> bool:
    """No three points of ``U`` span five or more edges, and
    ``|U| >= (2/(s-1) - beta) n``."""
    U = sorted(set(U))
    sub, _ = M.induced(U)
    sparse = sub.n < 3 or find_multigraph_pattern(sub, 3, 1) is None
    return sparse and len(U) >= (Fraction(2, s - 1) - _F(beta)) * M.n


def heavy_degree_hypothesis(M: StandardMultigraph, U, s: int, alpha, beta) -> bool:
    """``delta(M) >= 2(1 - 1/(s-1) - alpha) n`` and ``U`` satisfies P1 or P2."""
    n = M.n
    if n == 0 or s < 2:
        return False
    delta = min(M.degree(v) for v in range(n))
    if delta < 2 * (1 - Fraction(1, s - 1) - _F(alpha)) * n:
        return False
    return satisfies_p1(M, U, s, beta) or satisfies_p2(M, U, s, beta)


def heavy_degree_conclusion(M: StandardMultigraph, U, alpha, beta) -> bool:
    """Every ``u`` in ``U`` has at least ``|V - U| - (4 alpha + 2 beta) n`` heavy
    neighbours outside ``U``."""
    U = set(U)
    out = mask_of(set(range(M.n)) - U)
    need = (M.n - len(U)) - (4 * _F(alpha) + 2 * _F(beta)) * M.n
    return all((M.heavy[u] & out).bit_count() >= need for u in U)


def degree_bound_hypothesis(M: StandardMultigraph, U, p: int, q: int, alpha, beta) -> bool:
    """``q >= p >= 2``, ``0 < beta < 1``, ``delta(M) >= 2((q-2)/(q-1) - alpha) n``,
    ``|U| >= ((p-1)/(q-1) - alpha) n``, and ``alpha`` small enough that
    ``1 - (1 + alpha(q-1))/(p-1-alpha(q-1)) >= (p-2)/(p-1) - beta``."""
    alpha, beta = _F(alpha), _F(beta)
    n = M.n
    if not (q >= p >= 2 and 0 < beta < 1 and alpha > 0 and n > 0):
        return False
    denom = p - 1 - alpha * (q - 1)
    if denom <= 0 or 1 - (1 + alpha * (q - 1)) / denom < Fraction(p - 2, p - 1) - beta:
        return False
    delta = min(M.degree(v) for v in range(n))
    if delta < 2 * (Fraction(q - 2, q - 1) - alpha) * n:
        return False
    return len(set(U)) >= (Fraction(p - 1, q - 1) - alpha) * n


def degree_bound_conclusion(M: StandardMultigraph, U, p: int, beta) -> bool:
    """Every vertex ``v`` has ``d_M(v, U) >= 2((p-2)/(p-1) - beta)|U|``."""
    U = set(U)
    need = 2 * (Fraction(p - 2, p - 1) - _F(beta)) * len(U)
    return all(M.degree(v, U) >= need for v in range(M.n))
