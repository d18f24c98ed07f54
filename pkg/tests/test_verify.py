import json
import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

import oracles
from rainbowcliques.constructions import proper_multipartite, random_multigraph
from rainbowcliques.core import EdgeColoredGraph, SimpleGraph, StandardMultigraph
from rainbowcliques.patterns import find_multigraph_pattern, find_rainbow_clique
from rainbowcliques.verify import (
    SCHEMA,
    VerificationReport,
    check_li_triangle,
    check_multigraph_turan,
    check_pipeline,
    classify_rainbow_free,
    deserialize_instance,
    property_suite,
    serialize_instance,
    turan_threshold,
)
from rainbowcliques.verify.multigraph import (
    degree_bound_conclusion,
    degree_bound_hypothesis,
    extremality_check,
    heavy_degree_conclusion,
    heavy_degree_hypothesis,
    peel_hypothesis,
    peel_to_min_degree,
    satisfies_p1,
    satisfies_p2,
)
from rainbowcliques.verify.suite import OBSERVATIONS, PIPELINE


class TestLiCampaign:
    def test_n4_exceptions(self):
        rep = check_li_triangle(4, mode="pruned")
        assert rep.verdict == "confirmed" and not rep.counterexamples
        kinds = rep.stats["witness_kinds"]
        improper_hosts = {k.split(":")[1] for k in kinds if k.endswith(":improper")}
        assert improper_hosts == {"K4", "K4-e"}
        for w in rep.extremal_witnesses:
            G = deserialize_instance(w)
            assert find_rainbow_clique(G, 3) is None

    def test_n4_modes_agree(self):
        a = check_li_triangle(4, mode="pruned")
        b = check_li_triangle(4, mode="exhaustive")
        assert a.stats["witness_kinds"] == b.stats["witness_kinds"]
        assert b.instances_examined >= a.instances_examined

    def test_n5_exhaustive(self):
        rep = check_li_triangle(5, mode="exhaustive")
        assert rep.verdict == "confirmed"
        assert rep.stats["rainbow_free"] == 0 and rep.instances_examined > 0
        assert rep.stats["n_range_checked"] == "5..5"

    @pytest.mark.parametrize("n", [2, 3])
    def test_tiny(self, n):
        assert check_li_triangle(n).verdict == "confirmed"

    def test_thread_count_invariance(self):
        a = check_li_triangle(5, mode="exhaustive", threads=1)
        b = check_li_triangle(5, mode="exhaustive", threads=2)
        assert a.content() == b.content()

    def test_budget_verdict(self):
        rep = check_li_triangle(5, mode="exhaustive", budget=3)
        assert rep.verdict == "exhausted-budget"

    def test_refuses_large_n(self):
        with pytest.raises(ValueError, match="supports"):
            check_li_triangle(6, mode="exhaustive")
        with pytest.raises(ValueError, match="supports"):
            check_li_triangle(9)
        with pytest.raises(ValueError):
            check_li_triangle(4, mode="sampled")

    def test_classification(self):
        assert classify_rainbow_free(proper_multipartite(2, 3)) == ("witness", "balanced-bipartite-proper")
        # monochromatic triangle sits below the colour-degree threshold
        G = EdgeColoredGraph(3, {(0, 1): 0, (1, 2): 0, (0, 2): 0})
        assert classify_rainbow_free(G)[0] == "counterexample"
        # colour degree n/2 on a host other than K_{3,3}
        cols = dict(proper_multipartite(2, 3).color)
        cols[(0, 1)] = cols[(0, 3)]
        G = EdgeColoredGraph(6, cols)
        assert classify_rainbow_free(G)[0] == "counterexample"


class TestTuranCampaign:
    def test_thresholds(self):
        assert turan_threshold(5, 3, 1) == (Fraction(25, 2), 1)
        assert turan_threshold(4, 3, 2, 0) == (Fraction(12), 0)
        with pytest.raises(ValueError):
            turan_threshold(5, 3, 2, 2)
        with pytest.raises(ValueError):
            turan_threshold(5, 3, 3)

    def test_n4_statement_one(self):
        rep = check_multigraph_turan(4, 3)
        assert rep.verdict == "confirmed" and rep.instances_examined == 3**6

    def test_n4_statement_two_vacuous(self):
        rep = check_multigraph_turan(4, 3, r=0)
        assert rep.stats["above_threshold"] == 0 and rep.verdict == "confirmed"

    def test_oracle_agreement_n4(self):
        # recount above-threshold instances and pattern presence by brute force
        from itertools import product

        pairs = list(combinations(range(4), 2))
        above = 0
        for mus in product(range(3), repeat=6):
            if sum(mus) > 8:
                M = StandardMultigraph(4, dict(zip(pairs, mus)))
                assert oracles.multigraph_pattern(M, 3, 1)
                above += 1
        assert check_multigraph_turan(4, 3).stats["above_threshold"] == above

    def test_sampled_mode_is_seeded(self):
        a = check_multigraph_turan(6, 3, mode="sampled", samples=300, seed=5)
        b = check_multigraph_turan(6, 3, mode="sampled", samples=300, seed=5)
        assert a.content() == b.content() and a.verdict == "confirmed"

    def test_thread_count_invariance(self):
        a = check_multigraph_turan(4, 3, threads=1)
        b = check_multigraph_turan(4, 3, threads=2)
        assert a.content() == b.content()

    def test_all_heavy_has_pattern(self):
        for s in range(1, 6):
            for r in range(s // 2 + 1):
                assert find_multigraph_pattern(StandardMultigraph.complete(6), s, r) is not None

    def test_refuses_large_exhaustive(self):
        with pytest.raises(ValueError, match="supports"):
            check_multigraph_turan(6, 3)


class TestReport:
    def make(self):
        rep = VerificationReport("demo", {"n": 3}, 7, stats={"a": 1, "b": {"x": 2}})
        rep.extremal_witnesses.append(serialize_instance(proper_multipartite(2, 2), kind="k"))
        return rep.finalize()

    def test_json_round_trip(self):
        rep = self.make()
        text = rep.to_json()
        assert json.loads(text)["schema"] == SCHEMA
        assert VerificationReport.from_json(text) == rep

    def test_rejects_wrong_schema(self):
        with pytest.raises(ValueError):
            VerificationReport.from_json(json.dumps({"schema": "other", "campaign": "x"}))

    def test_summary_is_key_value(self):
        line = self.make().summary()
        fields = dict(tok.split("=", 1) for tok in line.split())
        assert fields["verdict"] == "confirmed" and fields["b.x"] == "2" and fields["n"] == "3"

    def test_verdicts(self):
        rep = VerificationReport("x")
        assert rep.finalize(budget_hit=True).verdict == "exhausted-budget"
        rep.counterexamples.append({})
        assert rep.finalize(budget_hit=True).verdict == "refuted"

    def test_instance_round_trip(self):
        for obj in (proper_multipartite(2, 2), random_multigraph(5, seed=1)):
            assert deserialize_instance(serialize_instance(obj)) == obj


class TestPeeling:
    def test_already_dense_unchanged(self):
        M = StandardMultigraph.complete(6)
        out = peel_to_min_degree(M, Fraction(1), Fraction(1, 2))
        assert out.multigraph == M and out.removed == []

    def test_star_peels_leaves_first(self):
        M = StandardMultigraph(5, {(0, v): 2 for v in range(1, 5)} | {(1, 2): 1})
        out = peel_to_min_degree(M, Fraction(1), Fraction(1, 10))
        assert out.removed[:2] == [3, 4]

    @pytest.mark.parametrize("seed", range(20))
    def test_min_degree_after_peel(self, seed):
        M = random_multigraph(15, (2, 1, 3), seed=seed)
        d, beta = Fraction(1, 2), Fraction(1, 10)
        out = peel_to_min_degree(M, d, beta)
        k = out.multigraph.n
        assert all(out.multigraph.degree(v) >= 2 * (d - beta) * k for v in range(k))
        assert sorted(out.kept + out.removed) == list(range(15))
        sub, _ = M.induced(out.kept)
        assert sub == out.multigraph

    def test_bad_beta(self):
        with pytest.raises(ValueError):
            peel_to_min_degree(StandardMultigraph(2), 1, 0)

    def test_hypothesis_rejects_bad_parameters(self):
        M = StandardMultigraph.complete(40)
        assert not peel_hypothesis(M, 1, Fraction(1, 2), Fraction(1, 2))
        assert not peel_hypothesis(M, 2, Fraction(1, 20), Fraction(3, 10))


class TestExtremality:
    def test_multipartite_classes(self):
        G = proper_multipartite(3, 4).graph
        res = extremality_check(G, 4, Fraction(1, 20))
        assert res.status == "extremal"
        assert sorted(sorted(p) for p in res.parts) == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]]

    def test_complete_graph_not_extremal(self):
        assert extremality_check(SimpleGraph.complete(10), 2, Fraction(1, 20)).status == "not_extremal"

    def test_large_beta_trivial(self):
        assert extremality_check(SimpleGraph.complete(6), 3, Fraction(1)).status == "extremal"

    def test_heuristic_only_returns_verified(self):
        G = proper_multipartite(2, 10).graph
        res = extremality_check(G, 3, Fraction(1, 20), exact_limit=8)
        assert res.status == "extremal"
        k = Fraction(20, 2) - Fraction(1, 20) * 20
        for p in res.parts:
            assert len(p) >= k and G.edge_count(p) < Fraction(1, 20) * 400
        res = extremality_check(SimpleGraph.complete(20), 3, Fraction(1, 20), exact_limit=8)
        assert res.status == "unknown"

    @pytest.mark.parametrize("seed", range(15))
    def test_exact_against_brute_force(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(4, 9))
        G = SimpleGraph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.4])
        s, beta = 3, Fraction(int(rng.integers(1, 6)), 40)
        k = max(0, math.ceil(Fraction(n, 2) - beta * n))
        sparse = [set(S) for S in combinations(range(n), k) if G.edge_count(S) < beta * n * n]
        expect = any(not (a & b) for a, b in combinations(sparse, 2))
        assert (extremality_check(G, s, beta).status == "extremal") == expect


class TestSparseClasses:
    def test_p1(self):
        M = StandardMultigraph(6, {(u, v): 2 for u, v in combinations(range(6), 2) if not (u < 3 and v < 3)})
        assert satisfies_p1(M, [0, 1, 2], 3, Fraction(1, 10))
        assert not satisfies_p1(M, [0, 1, 2, 3], 3, Fraction(1, 10))

    def test_p2(self):
        M = StandardMultigraph(4, {(0, 1): 2, (1, 2): 2, (0, 2): 1})
        assert not satisfies_p2(M, [0, 1, 2], 3, Fraction(1, 2))
        M = StandardMultigraph(4, {(0, 1): 2, (1, 2): 2})
        assert satisfies_p2(M, [0, 1, 2], 3, Fraction(1, 2))

    def test_heavy_degree_pair(self):
        n = 12
        mult = {(u, v): 2 for u, v in combinations(range(n), 2) if not (u < 6 and v < 6)}
        M = StandardMultigraph(n, mult)
        U = range(6)
        assert heavy_degree_hypothesis(M, U, 3, Fraction(0), Fraction(1, 10))
        assert heavy_degree_conclusion(M, U, Fraction(0), Fraction(1, 10))

    def test_degree_bound_pair(self):
        M = StandardMultigraph.complete(10)
        assert degree_bound_hypothesis(M, range(10), 3, 4, Fraction(1, 100), Fraction(1, 5))
        assert degree_bound_conclusion(M, range(10), 3, Fraction(1, 5))
        assert not degree_bound_hypothesis(M, range(10), 5, 4, Fraction(1, 100), Fraction(1, 5))


class TestPropertySuite:
    def test_pipeline_small(self):
        rep = property_suite(300, seed=3, observations=PIPELINE)
        assert rep.verdict == "confirmed"
        assert all(c["failed"] == 0 and c["passed"] == 300 for c in rep.stats.values())

    def test_all_observations_small(self):
        rep = property_suite(120, seed=9)
        assert rep.verdict == "confirmed"
        for o in OBSERVATIONS:
            assert rep.stats[o]["failed"] == 0
            assert rep.stats[o]["passed"] > 0, o

    def test_thread_invariance(self):
        a = property_suite(60, seed=2, threads=1)
        b = property_suite(60, seed=2, threads=2)
        assert a.content() == b.content()

    def test_unknown_observation(self):
        with pytest.raises(ValueError):
            property_suite(1, observations=("no-such-check",))

    def test_pipeline_bound_uses_integer_part_of_m(self):
        # one colour class of size 2 at vertex 0 and m = 3/2: the class is skipped,
        # so d+ = 0 while d^c - floor(2 / (m + 1)) = 1
        G = EdgeColoredGraph(3, {(0, 1): 0, (0, 2): 0})
        from rainbowcliques.transforms import build_gcm_digraph

        D = build_gcm_digraph(G, Fraction(3, 2))
        assert D.out_degree(0) == 0
        assert D.out_degree(0) < 1 - 2 // Fraction(5, 2)
        assert D.out_degree(0) >= 1 - 2 // (1 + 1)
        assert all(check_pipeline(G, Fraction(3, 2), np.random.default_rng(0)).values())

    def test_pipeline_equality_at_full_window(self):
        for seed in range(20):
            rng = np.random.default_rng(seed)
            from rainbowcliques.constructions import random_colored_graph

            G = random_colored_graph(9, 0.6, 3, seed=rng)
            assert all(check_pipeline(G, 8, rng).values())
