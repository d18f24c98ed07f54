"""Heavy/light pair patterns in standard multigraphs and their digraph cousins."""
from rainbowcliques import StandardMultigraph, multigraph_stats
from rainbowcliques.constructions import random_multigraph, regular_tournament
from rainbowcliques.patterns import find_cyclic_triangle, find_digraph_pattern, find_multigraph_pattern

M = random_multigraph(8, weights=(1, 2, 6), seed=3)
print("stats:", multigraph_stats(M))
for s in (3, 4, 5):
    print(f"s={s}: at most {s // 2} light pairs ->", find_multigraph_pattern(M, s, s // 2))

# All pairs heavy except one light edge: the pattern with r = 0 has to avoid it.
N = StandardMultigraph(4, {(0, 1): 1, (0, 2): 2, (0, 3): 2, (1, 2): 2, (1, 3): 2, (2, 3): 2})
print("r=0:", find_multigraph_pattern(N, 4, 0), " r=1:", find_multigraph_pattern(N, 4, 1))

T = regular_tournament(5)
print("cyclic triangle in the regular 5-tournament:", find_cyclic_triangle(T).vertices)
print("tournament minus a cyclic triangle pattern, s=3:", find_digraph_pattern(T, 3, 0, True))
