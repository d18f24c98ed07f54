"""End-to-end acceptance checks.

Each test prints a single ``criterion N: PASS|FAIL ...`` line; run with
``pytest tests/test_acceptance.py -s`` to see them.
"""

import time
from fractions import Fraction
from itertools import combinations

import numpy as np

import oracles
from rainbowcliques.constructions import (
    random_colored_graph,
    random_digraph,
    random_multigraph,
    statement_ii_construction,
    tournament_coloring,
)
from rainbowcliques.core import color_degree, color_degree_profile
from rainbowcliques.patterns import (
    find_digraph_pattern,
    find_multigraph_pattern,
    find_rainbow_clique,
    find_rainbow_join,
    max_proper_subgraph,
)
from rainbowcliques.verify import PIPELINE, check_li_triangle, check_multigraph_turan, property_suite

CORPUS_SEED = 20240601


def verdict(number, ok, detail):
    print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def test_criterion_1_triangle_theorem_n5_exhaustive():
    t0 = time.perf_counter()
    rep = check_li_triangle(5, mode="exhaustive", threads=1)
    took = time.perf_counter() - t0
    ok = rep.verdict == "confirmed" and not rep.counterexamples and rep.instances_examined > 0 and took <= 300
    verdict(1, ok, f"instances={rep.instances_examined} counterexamples={len(rep.counterexamples)} seconds={took:.2f}")


def test_criterion_2_balanced_bipartite_characterisation_n6():
    t0 = time.perf_counter()
    rep = check_li_triangle(6, mode="pruned", threads=1)
    took = time.perf_counter() - t0
    kinds = rep.stats["witness_kinds"]
    ok = (
        rep.verdict == "confirmed"
        and not rep.counterexamples
        and set(kinds) == {"balanced-bipartite-proper"}
        and took <= 1800
    )
    verdict(2, ok, f"verdict={rep.verdict} witness_kinds={kinds} seconds={took:.2f}")


def test_criterion_3_four_vertex_exception():
    rep = check_li_triangle(4, mode="exhaustive", archive_limit=None)
    kinds = rep.stats["witness_kinds"]
    improper_hosts = {k.split(":")[1] for k in kinds if k.startswith("n4-exception") and k.endswith(":improper")}
    ok = rep.verdict == "confirmed" and improper_hosts == {"K4", "K4-e"}
    verdict(3, ok, f"improper_hosts={sorted(improper_hosts)} witness_kinds={kinds}")


def test_criterion_4_multigraph_turan_n5_s3():
    t0 = time.perf_counter()
    rep = check_multigraph_turan(5, 3)
    took = time.perf_counter() - t0
    st = rep.stats
    ok = (
        rep.instances_examined == 3**10
        and rep.verdict == "confirmed"
        and Fraction(st["threshold"]) == Fraction(25, 2)
        and st["boundary_edges"] == 12
        and st["boundary_without_pattern"] >= 1
        and took <= 60
    )
    verdict(
        4,
        ok,
        f"instances={rep.instances_examined} counterexamples={len(rep.counterexamples)} "
        f"e12_without_pattern={st['boundary_without_pattern']} seconds={took:.2f}",
    )


def test_criterion_5_statement_ii_sharpness_instance():
    t0 = time.perf_counter()
    G = statement_ii_construction(3, 1, 3, 9)
    degs = {color_degree(G, v) for v in range(G.n)}
    w = find_rainbow_join(G, 0, 2, 3)
    took = time.perf_counter() - t0
    n, L = 9, 9
    ok = G.n == n and degs == {n - L + (L + 1) // 2} and w is None and took <= 60
    verdict(5, ok, f"n={G.n} colour_degrees={sorted(degs)} rainbow_K33={'absent' if w is None else w} seconds={took:.2f}")


def test_criterion_6_tournament_colourings():
    details, ok = [], True
    for n in (7, 9):
        G = tournament_coloring(n)
        dmin, _ = color_degree_profile(G)
        worst = max(
            len(max_proper_subgraph(G, S)) - len(S) for k in range(1, 6) for S in combinations(range(n), k)
        )
        naive = oracles.has_large_proper_subgraph(G, 5)
        ok &= dmin == (n + 1) // 2 and worst <= 0 and not naive
        details.append(f"n={n} delta_c={dmin} max_excess={worst} naive_found={naive}")
    verdict(6, ok, "; ".join(details))


def test_criterion_7_pipeline_suite():
    rep = property_suite(10_000, seed=CORPUS_SEED, observations=PIPELINE, n_max=30)
    passed = {o: c["passed"] for o, c in rep.stats.items()}
    failed = sum(c["failed"] for c in rep.stats.values())
    skipped = sum(c["skipped"] for c in rep.stats.values())
    ok = (
        rep.verdict == "confirmed"
        and failed == skipped == 0
        and all(v == 10_000 for v in passed.values())
        and not rep.counterexamples
    )
    verdict(7, ok, f"trials={rep.instances_examined} failures={failed} skipped={skipped} passes={passed} seconds={rep.elapsed:.1f}")


def _join_params(n):
    for s in range(2, n + 1):
        for r in range(0, (s - 1) // 2 + 1):
            for ell in range(1, n + 1):
                if r + (s - r) * ell <= n + 1:
                    yield r, s, ell


def test_criterion_8_searchers_match_naive_enumeration():
    mismatches, checks = [], 0
    for i in range(500):
        rng = np.random.default_rng([CORPUS_SEED, i])
        n = int(rng.integers(1, 7))
        G = random_colored_graph(n, rng.uniform(0.3, 1), int(rng.integers(1, 8)), seed=rng)
        for s in range(2, n + 2):
            checks += 1
            if (find_rainbow_clique(G, s) is not None) != oracles.rainbow_clique(G, s):
                mismatches.append(("clique", i, s))
        for r, s, ell in _join_params(n):
            checks += 1
            if (find_rainbow_join(G, r, s, ell) is not None) != oracles.rainbow_join(G, r, s, ell):
                mismatches.append(("join", i, r, s, ell))

        M = random_multigraph(n, tuple(rng.uniform(0.1, 1, size=3)), seed=rng)
        for s in range(1, n + 2):
            for r in range(s // 2 + 1):
                for induced in (False, True):
                    checks += 1
                    got = find_multigraph_pattern(M, s, r, induced=induced) is not None
                    if got != oracles.multigraph_pattern(M, s, r, induced):
                        mismatches.append(("multigraph", i, s, r, induced))

        D = random_digraph(n, rng.uniform(0.3, 1), seed=rng)
        for s in range(1, n + 2):
            for r in range(s // 2 + 1):
                for tri in (False, True):
                    if tri and not (s >= 3 and 2 * r <= s - 3):
                        continue
                    checks += 1
                    if (find_digraph_pattern(D, s, r, tri) is not None) != oracles.digraph_pattern(D, s, r, tri):
                        mismatches.append(("digraph", i, s, r, tri))
    verdict(8, not mismatches, f"instances=500x3 checks={checks} mismatches={mismatches[:5]}")
