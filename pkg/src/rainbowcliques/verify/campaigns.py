"""Small-n verification campaigns for the rainbow-triangle theorem and the
multigraph Turan theorem."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, product

from ..core import EdgeColoredGraph, SimpleGraph, StandardMultigraph, color_degree_profile
from ..patterns import PatternSpec, find_multigraph_pattern, is_properly_colored
from .enumeration import ColoringSearch, canonical_form, graphs_up_to_iso
from .report import VerificationReport, serialize_instance

__all__ = [
    "LI_EXHAUSTIVE_MAX_N",
    "LI_PRUNED_MAX_N",
    "TURAN_EXHAUSTIVE_MAX_N",
    "check_li_triangle",
    "classify_rainbow_free",
    "check_multigraph_turan",
    "turan_threshold",
]

LI_EXHAUSTIVE_MAX_N = 5
LI_PRUNED_MAX_N = 8
TURAN_EXHAUSTIVE_MAX_N = 5


class _BudgetHit(Exception):
    pass


def _map(fn, tasks, threads: int):
    if threads <= 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, *zip(*tasks), chunksize=max(1, len(tasks) // (4 * threads))))


# -- rainbow triangles -----------------------------------------------------------


def _bipartite_form(n: int) -> tuple[int, int]:
    h = n // 2
    return canonical_form(n, [(u, v) for u in range(h) for v in range(h, n)])


def classify_rainbow_free(G: EdgeColoredGraph) -> tuple[str, str]:
    """Classify a rainbow-triangle-free colouring with ``delta^c >= n/2``.

    Returns ``("counterexample", reason)`` if it contradicts the theorem,
    otherwise ``("witness", kind)``.
    """
    n = G.n
    dmin, _ = color_degree_profile(G)
    if 2 * dmin > n:
        return "counterexample", "rainbow-triangle-free with delta_c > n/2"
    if 2 * dmin < n:
        return "counterexample", "instance below the colour-degree threshold"
    host = canonical_form(n, G.color)
    if n % 2 == 0 and host == _bipartite_form(n) and is_properly_colored(G, range(n)):
        return "witness", "balanced-bipartite-proper"
    if n == 4:
        name = {6: "K4", 5: "K4-e"}.get(len(G.color), f"{len(G.color)}-edge host")
        proper = "proper" if is_properly_colored(G, range(n)) else "improper"
        return "witness", f"n4-exception:{name}:{proper}"
    return "counterexample", "rainbow-triangle-free at delta_c = n/2 but not a properly coloured K_{n/2,n/2}"


def _li_task(n, host_edges, t, forbid, prefix, budget):
    G = SimpleGraph(n, host_edges)
    cs = ColoringSearch(G, t, forbid_rainbow_triangle=forbid)
    tris = [tri for i, cl in enumerate(cs.closing) for tri in ((a, b, i) for a, b in cl)]
    examined = 0
    free = []
    hit = False
    try:
        for cols in cs.colorings(prefix):
            examined += 1
            if budget is not None and cs.nodes > budget:
                raise _BudgetHit
            if forbid or not any(
                cols[a] != cols[b] and cols[a] != cols[c] and cols[b] != cols[c] for a, b, c in tris
            ):
                free.append(cols)
    except _BudgetHit:
        hit = True
    return examined, free, cs.nodes, hit


def check_li_triangle(
    n: int,
    mode: str = "pruned",
    threads: int = 1,
    budget: int | None = None,
    prefix_depth: int = 3,
    archive_limit: int | None = 1000,
) -> VerificationReport:
    """Search every ``n``-vertex graph (up to isomorphism) and every colouring
    (set partition of its edges) with minimum colour degree at least ``n/2``.

    Each rainbow-triangle-free colouring found is classified: it is a
    counterexample when its colour degree exceeds ``n/2``, or when it is not a
    properly coloured ``K_{n/2,n/2}`` (except at ``n = 4``, where such
    colourings are archived as witnesses).  ``mode="exhaustive"`` visits all
    qualifying colourings and tests each for a rainbow triangle;
    ``mode="pruned"`` cuts every branch as soon as a rainbow triangle appears.

    ``budget`` caps search nodes per task (one host graph and one colouring
    prefix), so the report is the same for every thread count.
    """
    if mode not in ("exhaustive", "pruned"):
        raise ValueError(f"mode must be 'exhaustive' or 'pruned', got {mode!r}")
    bound = LI_EXHAUSTIVE_MAX_N if mode == "exhaustive" else LI_PRUNED_MAX_N
    if not 1 <= n <= bound:
        raise ValueError(f"{mode} rainbow-triangle campaign supports 1 <= n <= {bound}, got n={n}")
    start = time.perf_counter()
    t = math.ceil(Fraction(n, 2))
    forbid = mode == "pruned"
    hosts = graphs_up_to_iso(n, min_degree=t)
    tasks = []
    for G in hosts:
        cs = ColoringSearch(G, t, forbid_rainbow_triangle=forbid)
        for p in cs.prefixes(prefix_depth):
            tasks.append((n, sorted(G.edges), t, forbid, p, budget))
    results = _map(_li_task, tasks, threads)

    rep = VerificationReport("li-triangle", {"n": n, "mode": mode, "min_color_degree": t})
    kinds: dict[str, int] = {}
    nodes = 0
    budget_hit = False
    for (n_, host_edges, *_), (examined, free, k, hit) in zip(tasks, results):
        rep.instances_examined += examined
        nodes += k
        budget_hit |= hit
        cs = ColoringSearch(SimpleGraph(n_, host_edges))
        for cols in free:
            G = cs.to_colored(cols)
            verdict, why = classify_rainbow_free(G)
            if verdict == "counterexample":
                rep.counterexamples.append(serialize_instance(G, reason=why))
            else:
                kinds[why] = kinds.get(why, 0) + 1
                if archive_limit is None or len(rep.extremal_witnesses) < archive_limit:
                    rep.extremal_witnesses.append(serialize_instance(G, kind=why))
    rep.stats = {
        "hosts": len(hosts),
        "nodes": nodes,
        "rainbow_free": sum(kinds.values()) + len(rep.counterexamples),
        "n_range_checked": f"{n}..{n}",
        "witness_kinds": dict(sorted(kinds.items())),
    }
    rep.elapsed = time.perf_counter() - start
    return rep.finalize(budget_hit)


# -- multigraph Turan ---------------------------------------------------------------


def turan_threshold(n: int, s: int, statement: int, r: int | None = None) -> tuple[Fraction, int]:
    """Edge threshold and the matching bound ``q`` of the multigraph Turan theorem.

    Statement 1: ``e(M) > (1 - 1/(s-1)) n^2`` forces ``K_s - M_q`` with
    ``q <= s/2``.  Statement 2: ``e(M) > (1 - 1/(2(s-1-r))) n^2`` forces it
    with ``q <= r``.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    if statement == 1:
        return (1 - Fraction(1, s - 1)) * n * n, s // 2
    if statement == 2:
        if r is None or not 0 <= 2 * r <= s - 1:
            raise ValueError(f"statement 2 needs 0 <= r <= (s-1)/2, got r={r}")
        return (1 - Fraction(1, 2 * (s - 1 - r))) * n * n, r
    raise ValueError(f"statement must be 1 or 2, got {statement}")


def _turan_scan(n, s, q, thr, rows, archive_limit):
    pairs = list(combinations(range(n), 2))
    floor_thr = math.floor(thr)
    above = boundary = lacking = 0
    cx, bw = [], []
    for mus in rows:
        e = sum(mus)
        if e <= thr and e != floor_thr:
            continue
        M = StandardMultigraph(n, dict(zip(pairs, mus)))
        found = find_multigraph_pattern(M, s, q) is not None
        if e > thr:
            above += 1
            if not found:
                cx.append(serialize_instance(M, reason=f"e(M)={e} > {thr} without K_{s} - M_q, q <= {q}"))
        else:
            boundary += 1
            if not found:
                lacking += 1
                if len(bw) < archive_limit:
                    bw.append(serialize_instance(M, kind="boundary-without-pattern", e=e))
    return above, boundary, lacking, cx, bw


def _turan_task(n, s, q, thr, head, archive_limit):
    m = n * (n - 1) // 2
    rows = (head + tail for tail in product(range(3), repeat=m - len(head)))
    return _turan_scan(n, s, q, thr, rows, archive_limit)


def check_multigraph_turan(
    n: int,
    s: int,
    r: int | None = None,
    statement: int | None = None,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int = 0,
    threads: int = 1,
    archive_limit: int = 5,
) -> VerificationReport:
    """Check the multigraph Turan implication on every standard multigraph on
    ``n`` vertices (``mode="exhaustive"``) or on ``samples`` random ones.

    Multigraphs with exactly ``floor(threshold)`` edges that lack the pattern
    are counted and a few archived as sharpness evidence.  ``statement``
    defaults to 2 when ``r`` is given, else 1.
    """
    if statement is None:
        statement = 1 if r is None else 2
    thr, q = turan_threshold(n, s, statement, r)
    PatternSpec("multigraph", s=s, r=q)
    start = time.perf_counter()
    m = n * (n - 1) // 2
    rep = VerificationReport(
        "multigraph-turan",
        {"n": n, "s": s, "r": r if r is not None else "-", "statement": statement, "mode": mode},
    )
    if mode == "exhaustive":
        if not 1 <= n <= TURAN_EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive multigraph campaign supports 1 <= n <= {TURAN_EXHAUSTIVE_MAX_N}, got n={n}")
        split = min(2, m)
        tasks = [(n, s, q, thr, head, archive_limit) for head in product(range(3), repeat=split)]
        results = _map(_turan_task, tasks, threads)
        rep.instances_examined = 3**m
    elif mode == "sampled":
        import numpy as np

        rng = np.random.default_rng(seed)
        draws = rng.integers(0, 3, size=(samples, m))
        results = [_turan_scan(n, s, q, thr, [tuple(int(x) for x in row) for row in draws], archive_limit)]
        rep.instances_examined = samples
        rep.params.update(samples=samples, seed=seed)
    else:
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")
    above = boundary = lacking = 0
    for a, b, c, cx, bw in results:
        above += a
        boundary += b
        lacking += c
        rep.counterexamples.extend(cx)
        for w in bw:
            if len(rep.extremal_witnesses) < archive_limit:
                rep.extremal_witnesses.append(w)
    rep.stats = {
        "threshold": str(thr),
        "q_max": q,
        "above_threshold": above,
        "boundary_edges": math.floor(thr),
        "boundary_total": boundary,
        "boundary_without_pattern": lacking,
    }
    rep.elapsed = time.perf_counter() - start
    return rep.finalize()
