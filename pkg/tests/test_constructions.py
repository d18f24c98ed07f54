from fractions import Fraction
from itertools import combinations

import pytest

import oracles
from rainbowcliques.constructions import (
    ConstructionParams,
    li_average_construction,
    proper_multipartite,
    random_colored_graph,
    random_digraph,
    random_multigraph,
    regular_tournament,
    statement_ii_construction,
    tournament_coloring,
    transitive_tournament,
)
from rainbowcliques.core import EdgeColoredGraph, SimpleDigraph, StandardMultigraph, color_degree, color_degree_profile
from rainbowcliques.patterns import find_rainbow_clique, find_rainbow_join, is_properly_colored


class TestProperMultipartite:
    def test_c4(self):
        G = proper_multipartite(2, 2)
        assert len(G.color) == 4 and len(G.palette()) == 2
        assert is_properly_colored(G, range(4))

    @pytest.mark.parametrize("parts,L", [(p, L) for p in range(1, 5) for L in range(1, 5) if p * L <= 12])
    def test_proper_and_no_big_rainbow_clique(self, parts, L):
        G = proper_multipartite(parts, L)
        n = parts * L
        assert len(G.color) == (n * n - parts * L * L) // 2
        assert all(G.has_edge(u, v) == (u // L != v // L) for u, v in combinations(range(n), 2))
        assert is_properly_colored(G, range(n))
        assert len(G.palette()) <= n
        if parts + 1 <= n:
            assert find_rainbow_clique(G, parts + 1) is None

    def test_no_rainbow_k4_oracle(self):
        assert not oracles.rainbow_clique(proper_multipartite(3, 3), 4)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            proper_multipartite(0, 3)


class TestTournaments:
    def test_three_is_cyclic(self):
        assert set(regular_tournament(3).arcs) == {(0, 1), (1, 2), (2, 0)}

    @pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11])
    def test_regular(self, n):
        T = regular_tournament(n)
        assert all(T.out_degree(v) == T.in_degree(v) == (n - 1) // 2 for v in range(n))
        assert T.is_oriented() and len(T.arcs) == n * (n - 1) // 2

    def test_even_rejected(self):
        with pytest.raises(ValueError):
            regular_tournament(6)

    def test_transitive(self):
        T = transitive_tournament(5)
        assert [T.out_degree(v) for v in range(5)] == [4, 3, 2, 1, 0]

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_colouring_degree(self, n):
        G = tournament_coloring(n)
        assert all(color_degree(G, v) == (n + 1) // 2 for v in range(n))
        assert color_degree_profile(G) == ((n + 1) // 2, Fraction(n + 1, 2))


class TestStatementII:
    def test_small_instance(self):
        G = statement_ii_construction(3, 1, 3, 5)
        assert G.n == 5
        assert all(color_degree(G, v) == 3 for v in range(5))
        assert 3 > Fraction(1, 2) * 5

    def test_two_classes_fresh_colours(self):
        G = statement_ii_construction(4, 1, 4, 3)
        assert G.n == 6 and len(G.color) == 15
        cross = [G.c(u, v) for u, v in combinations(range(6), 2) if u // 3 != v // 3]
        inner = [G.c(u, v) for u, v in combinations(range(6), 2) if u // 3 == v // 3]
        assert len(cross) == 9 and len(set(cross)) == 9
        assert min(cross) >= 6 and max(inner) < 6

    @pytest.mark.parametrize("s,r,ell,L", [(3, 1, 3, 5), (3, 1, 3, 9), (4, 1, 4, 3), (4, 0, 5, 3), (5, 2, 4, 7), (5, 1, 5, 5)])
    def test_common_colour_degree(self, s, r, ell, L):
        G = statement_ii_construction(s, r, ell, L)
        n = L * (s - 1 - r)
        assert G.n == n and len(G.color) == n * (n - 1) // 2
        target = n - L + (L + 1) // 2
        assert all(color_degree(G, v) == target for v in range(n))
        assert Fraction(target) > (1 - Fraction(1, 2 * (s - 1 - r))) * n

    def test_classes_get_tournament_colouring(self):
        G = statement_ii_construction(4, 1, 4, 5)
        for off in (0, 5):
            sub = EdgeColoredGraph(5, {(u - off, v - off): G.c(u, v) - off for u, v in combinations(range(off, off + 5), 2)})
            assert sub == tournament_coloring(5)
            assert not oracles.has_large_proper_subgraph(sub, 5)

    def test_no_rainbow_bipartite(self):
        assert find_rainbow_join(statement_ii_construction(3, 1, 3, 9), 0, 2, 3) is None

    @pytest.mark.parametrize("args", [(3, 2, 3, 5), (3, 1, 2, 5), (3, 1, 3, 4), (1, 0, 3, 3)])
    def test_rejects_bad_parameters(self, args):
        with pytest.raises(ValueError):
            statement_ii_construction(*args)


class TestLiAverage:
    def test_three(self):
        assert li_average_construction(3).color == {(0, 1): 1, (0, 2): 2, (1, 2): 2}

    @pytest.mark.parametrize("n", range(3, 9))
    def test_no_rainbow_triangle(self, n):
        G = li_average_construction(n)
        for i, j, k in combinations(range(n), 3):
            assert G.c(i, k) == G.c(j, k) == k
        assert find_rainbow_clique(G, 3) is None

    def test_average_against_boundary(self):
        _, avg = color_degree_profile(li_average_construction(6))
        assert avg == Fraction(10, 3) and avg < Fraction(7, 2)


class TestRandom:
    def test_edge_prob_extremes(self):
        assert random_colored_graph(6, 0, 3, seed=0).color == {}
        G = random_colored_graph(6, 1, 1, seed=0)
        assert len(G.color) == 15 and G.palette() == {0}

    def test_seeded(self):
        assert random_colored_graph(8, 0.5, 3, seed=4) == random_colored_graph(8, 0.5, 3, seed=4)
        assert random_digraph(8, 0.5, seed=4) == random_digraph(8, 0.5, seed=4)
        assert random_multigraph(8, seed=4) == random_multigraph(8, seed=4)

    def test_multigraph_weights(self):
        assert random_multigraph(6, weights=(0, 0, 1), seed=1) == StandardMultigraph.complete(6)
        assert random_multigraph(6, weights=(1, 0, 0), seed=1) == StandardMultigraph(6)

    def test_validation(self):
        with pytest.raises(ValueError):
            random_colored_graph(4, 1.5, 2)
        with pytest.raises(ValueError):
            random_colored_graph(4, 0.5, 0)


class TestParams:
    def test_builds_each_kind(self):
        assert ConstructionParams("tournament-coloring", {"n": 7}).build() == tournament_coloring(7)
        assert isinstance(ConstructionParams("regular-tournament", {"n": 5}).build(), SimpleDigraph)
        G = ConstructionParams("random", {"n": 5, "edge_prob": 0.5, "palette": 2}, seed=3).build()
        assert G == random_colored_graph(5, 0.5, 2, seed=3)
        assert ConstructionParams("statement-ii", {"s": 3, "r": 1, "ell": 3, "L": 5}).build().n == 5

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="unknown construction"):
            ConstructionParams("petersen").build()

    def test_missing_parameter(self):
        with pytest.raises(ValueError, match="needs parameters"):
            ConstructionParams("proper-multipartite", {"parts": 2}).build()
