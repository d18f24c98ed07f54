"""Constructions that sit exactly at the colour-degree thresholds."""
from fractions import Fraction

from rainbowcliques import color_degree
from rainbowcliques.constructions import statement_ii_construction, tournament_coloring
from rainbowcliques.patterns import find_rainbow_join, max_proper_subgraph
from itertools import combinations

s, r, ell, L = 3, 1, 3, 9
G = statement_ii_construction(s, r, ell, L)
degs = sorted({color_degree(G, v) for v in range(G.n)})
bound = (1 - Fraction(1, 2 * (s - 1 - r))) * G.n
print(f"n={G.n}: colour degrees {degs}, above {bound}; rainbow K33 -> {find_rainbow_join(G, 0, 2, 3)}")

for n in (7, 9):
    T = tournament_coloring(n)
    excess = max(len(max_proper_subgraph(T, S)) - len(S) for k in range(1, 6) for S in combinations(range(n), k))
    print(f"tournament colouring n={n}: colour degree {color_degree(T, 0)}, best proper |E|-|V| on <=5 vertices = {excess}")
