"""Randomised property suite: each trial draws instances, keeps those meeting an
observation's hypotheses, and checks its conclusion."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations

import numpy as np

from ..constructions import random_colored_graph, random_multigraph
from ..core import EdgeColoredGraph, SimpleDigraph, StandardMultigraph, color_degree
from ..patterns import (
    find_iterative_rainbow_vertex,
    is_rainbow,
    iterative_rainbow_hypothesis,
    max_proper_subgraph,
    proper_to_rainbow_join,
)
from ..transforms import (
    build_gcm_digraph,
    edge_minimal_reduce,
    is_edge_minimal,
    orientation_coloring,
    two_cycle_graph,
)
from .multigraph import (
    degree_bound_conclusion,
    degree_bound_hypothesis,
    heavy_degree_conclusion,
    heavy_degree_hypothesis,
    peel_hypothesis,
    peel_to_min_degree,
)
from .report import VerificationReport, serialize_instance

PIPELINE = ("reduce", "arc-coverage", "out-degree-bound", "two-cycle-proper", "two-cycle-count")
OBSERVATIONS = PIPELINE + ("tournament-proper", "iterative-rainbow", "proper-to-rainbow", "peeling", "heavy-degree", "degree-bound")

PASS, FAIL, SKIP = "passed", "failed", "skipped"


def _pick_m(rng, n: int):
    top = max(1, n - 1)
    return [1, math.sqrt(n) if n >= 1 else 1, top, Fraction(int(rng.integers(4, 4 * top + 1)), 4)][
        int(rng.integers(4))
    ]


def _random_choice(rng):
    return lambda Q: sorted(Q)[int(rng.integers(len(Q)))]


def _out_degrees(D: SimpleDigraph) -> list[int]:
    return [D.out_degree(v) for v in range(D.n)]


def check_pipeline(G: EdgeColoredGraph, m, rng) -> dict[str, bool]:
    """Run the reduction pipeline on one instance and evaluate every pipeline
    observation.  All of them have no hypotheses beyond the construction."""
    n = G.n
    F, trace = edge_minimal_reduce(G)
    F2, trace2 = edge_minimal_reduce(F)
    cdG = [color_degree(G, v) for v in range(n)]
    res = {
        "reduce": (
            all(color_degree(F, v) == cdG[v] for v in range(n))
            and F2 == F
            and not trace2.deleted_edges
            and is_edge_minimal(F)
            and trace.replay(G) == F
            and set(F.color) <= set(G.color)
        )
    }
    choose = _random_choice(rng)
    D = build_gcm_digraph(G, m, choose)
    DF = build_gcm_digraph(F, m, choose)
    res["arc-coverage"] = all(DF.has_arc(u, v) or DF.has_arc(v, u) for u, v in F.color)

    # a skipped class has more than m edges, hence at least floor(m) + 1;
    # for fractional m this is the bound that actually holds
    k = math.floor(Fraction(m)) + 1
    dD = _out_degrees(D)
    ok = all(dD[v] >= cdG[v] - G.degree(v) // k for v in range(n))
    Dfull = build_gcm_digraph(G, max(1, n - 1), choose)
    res["out-degree-bound"] = ok and _out_degrees(Dfull) == cdG

    proper = True
    for D_ in (D, DF, Dfull):
        H = two_cycle_graph(D_)
        host = G if D_ is not DF else F
        for v in range(n):
            cols = [host.c(v, w) for w in range(n) if H.has_edge(v, w)]
            proper &= len(cols) == len(set(cols))
    res["two-cycle-proper"] = proper

    eH, eHF = len(two_cycle_graph(D).edges), len(two_cycle_graph(DF).edges)
    res["two-cycle-count"] = eH + len(G.color) >= sum(dD) and eHF + len(F.color) == sum(_out_degrees(DF))
    return res


def _trial_tournament_proper(rng):
    n = int(rng.integers(3, 9))
    arcs = []
    for u, v in combinations(range(n), 2):
        x = rng.random()
        if x < 0.45:
            arcs.append((u, v))
        elif x < 0.9:
            arcs.append((v, u))
    G = orientation_coloring(SimpleDigraph(n, arcs))
    k = int(rng.integers(1, min(5, n) + 1))
    S = sorted(int(x) for x in rng.choice(n, size=k, replace=False))
    return (len(max_proper_subgraph(G, S)) <= len(S)), G


def _trial_iterative_rainbow(rng):
    a = int(rng.integers(1, 4))
    P0 = int(rng.integers(1, 4))
    inner = {(u, v): int(rng.integers(P0)) for u, v in combinations(range(a), 2) if rng.random() < 0.8}
    nb = a * len(inner) + 1 + int(rng.integers(0, 3))
    P = nb + a + 2
    sigma = rng.permutation(P)
    cols = dict(inner)
    for i in range(a):
        for j in range(nb):
            if rng.random() < 0.8:
                cols[(i, a + j)] = int(sigma[(i + j) % P])
    G = EdgeColoredGraph(a + nb, cols)
    A, B = range(a), range(a, a + nb)
    if not iterative_rainbow_hypothesis(G, A, B):
        return None, G
    b0 = find_iterative_rainbow_vertex(G, A, B)
    used = {G.c(u, v) for u, v in combinations(A, 2) if G.has_edge(u, v)}
    good = b0 is not None and b0 in B and all(G.c(x, b0) not in used for x in A if G.has_edge(x, b0))
    return good, G


def _trial_proper_to_rainbow(rng):
    """Rainbow ``K_a^ell`` on A, properly coloured ``K_b^L`` on B, properly
    coloured complete ``[A, B]``, with disjoint palettes for the three edge
    groups so every star is proper; ``L`` exceeds the greedy blocking bound."""
    while True:
        a, ell, b, k = (int(x) for x in rng.integers(1, 3, size=4))
        if a * ell + b * k <= 5:
            break
    size = a * ell + b * k
    pattern_edges = size * (size - 1) // 2 - a * ell * (ell - 1) // 2 - b * k * (k - 1) // 2
    L = size * pattern_edges + k + 1 + int(rng.integers(0, 3))
    nA, nB = a * ell, b * L
    cols: dict[tuple[int, int], int] = {}
    fresh = 0
    for u, v in combinations(range(nA), 2):
        if u // ell != v // ell:
            cols[(u, v)] = fresh
            fresh += 1
    base_b = fresh
    N = nB + (nB % 2)
    for u, v in combinations(range(nB), 2):
        if u // L != v // L:
            m = N - 1
            c = (u + v) % m if v != m else 2 * u % m
            cols[(nA + u, nA + v)] = base_b + c
    base_x = base_b + N
    P = nA + nB
    sigma = rng.permutation(P)
    for i in range(nA):
        for j in range(nB):
            cols[(i, nA + j)] = base_x + int(sigma[(i + j) % P])
    G = EdgeColoredGraph(nA + nB, cols)
    A_parts = [list(range(p * ell, (p + 1) * ell)) for p in range(a)]
    B_parts = [list(range(nA + p * L, nA + (p + 1) * L)) for p in range(b)]
    w = proper_to_rainbow_join(G, A_parts, B_parts, k)
    if w is None:
        return False, G
    parts = [list(p) for p in w.parts]
    ok = [len(p) for p in parts] == [ell] * a + [k] * b
    edges = [(u, v) for i, j in combinations(range(len(parts)), 2) for u in parts[i] for v in parts[j]]
    ok &= all(G.has_edge(u, v) for u, v in edges)
    ok &= len({G.c(u, v) for u, v in edges}) == len(edges)
    return ok, G


def _trial_peeling(rng):
    n = int(rng.integers(30, 61))
    M = random_multigraph(n, (1, 2, 6), seed=rng)
    # a few sparse vertices so that peeling has work to do
    sparse = int(rng.integers(0, max(1, n // 10)))
    mult = dict(M.mult)
    for v in range(sparse):
        for w in range(n):
            if w != v and rng.random() < 0.8:
                mult.pop((min(v, w), max(v, w)), None)
    M = StandardMultigraph(n, mult)
    alpha, beta = Fraction(1, 20), Fraction(3, 10)
    d = Fraction(M.edge_count(), n * n) + alpha * Fraction(int(rng.integers(0, 11)), 10)
    if not peel_hypothesis(M, d, alpha, beta):
        return None, M
    out = peel_to_min_degree(M, d, beta)
    order = out.multigraph.n
    ok = order >= (1 - beta) * n and all(out.multigraph.degree(v) >= 2 * (d - beta) * order for v in range(order))
    return ok, M


def _trial_heavy_degree(rng):
    s = int(rng.integers(3, 5))
    n = int(rng.integers(10, 31))
    use_p2 = bool(rng.integers(2))
    size = math.ceil(n * (2 if use_p2 else 1) / (s - 1)) - int(rng.integers(0, 2))
    size = max(1, min(n - 1, size))
    U = list(range(size))
    mult = {}
    for u, v in combinations(range(n), 2):
        if u < size and v < size:
            mult[(u, v)] = int(rng.integers(0, 2)) if use_p2 else 0
        else:
            mult[(u, v)] = 2 if rng.random() < 0.93 else int(rng.integers(0, 2))
    M = StandardMultigraph(n, mult)
    alpha = Fraction(int(rng.integers(0, 11)), 100)
    beta = Fraction(int(rng.integers(1, 16)), 100)
    if not heavy_degree_hypothesis(M, U, s, alpha, beta):
        return None, M
    return heavy_degree_conclusion(M, U, alpha, beta), M


def _trial_degree_bound(rng):
    q = int(rng.integers(2, 6))
    p = int(rng.integers(2, q + 1))
    n = int(rng.integers(8, 31))
    M = random_multigraph(n, (1, 1, 12), seed=rng)
    alpha = Fraction(int(rng.integers(1, 6)), 100)
    beta = Fraction(int(rng.integers(1, 40)), 100)
    k = int(rng.integers(1, n + 1))
    U = sorted(int(x) for x in rng.choice(n, size=k, replace=False))
    if not degree_bound_hypothesis(M, U, p, q, alpha, beta):
        return None, M
    return degree_bound_conclusion(M, U, p, beta), M


_TRIALS = {
    "tournament-proper": _trial_tournament_proper,
    "iterative-rainbow": _trial_iterative_rainbow,
    "proper-to-rainbow": _trial_proper_to_rainbow,
    "peeling": _trial_peeling,
    "heavy-degree": _trial_heavy_degree,
    "degree-bound": _trial_degree_bound,
}


def _run_trials(seed: int, lo: int, hi: int, observations: tuple[str, ...], n_max: int):
    counts = {o: {PASS: 0, FAIL: 0, SKIP: 0} for o in observations}
    violations = []
    pipeline = [o for o in observations if o in PIPELINE]
    for trial in range(lo, hi):
        rng = np.random.default_rng([seed, trial])
        if pipeline:
            n = int(rng.integers(2, n_max + 1))
            G = random_colored_graph(n, rng.uniform(0.2, 1.0), int(rng.integers(1, n + 1)), seed=rng)
            m = _pick_m(rng, n)
            res = check_pipeline(G, m, rng)
            for o in pipeline:
                counts[o][PASS if res[o] else FAIL] += 1
                if not res[o]:
                    violations.append(serialize_instance(G, observation=o, trial=trial, m=str(m)))
        for o in observations:
            if o in PIPELINE:
                continue
            ok, inst = _TRIALS[o](rng)
            key = SKIP if ok is None else PASS if ok else FAIL
            counts[o][key] += 1
            if ok is False:
                violations.append(serialize_instance(inst, observation=o, trial=trial))
    return counts, violations


def property_suite(
    trials: int,
    seed: int = 0,
    observations=None,
    n_max: int = 30,
    threads: int = 1,
) -> VerificationReport:
    """Run ``trials`` seeded random trials of every selected observation.

    Trial ``i`` draws from ``numpy.random.default_rng([seed, i])``, so the
    report does not depend on ``threads``.  Instances failing an observation's
    hypotheses count as skipped; a failed conclusion is stored as a
    counterexample.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    observations = tuple(OBSERVATIONS if observations is None else observations)
    unknown = set(observations) - set(OBSERVATIONS)
    if unknown:
        raise ValueError(f"unknown observations {sorted(unknown)}; choose from {OBSERVATIONS}")
    start = time.perf_counter()
    chunks = max(1, threads) * 4
    bounds = sorted({trials * i // chunks for i in range(chunks + 1)})
    tasks = [(seed, lo, hi, observations, n_max) for lo, hi in zip(bounds, bounds[1:])]
    if threads <= 1:
        results = [_run_trials(*t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_trials, *zip(*tasks)))
    rep = VerificationReport("property-suite", {"trials": trials, "seed": seed, "n_max": n_max})
    totals = {o: {PASS: 0, FAIL: 0, SKIP: 0} for o in observations}
    for counts, violations in results:
        for o, c in counts.items():
            for k, v in c.items():
                totals[o][k] += v
        rep.counterexamples.extend(violations)
    rep.instances_examined = trials
    rep.stats = totals
    rep.elapsed = time.perf_counter() - start
    return rep.finalize()
