"""Colour degree versus rainbow triangles on a few hand-built colourings."""
from rainbowcliques import color_degree_profile
from rainbowcliques.constructions import li_average_construction, proper_multipartite, tournament_coloring
from rainbowcliques.patterns import find_rainbow_clique

# A properly coloured K_{3,3} has colour degree 3 = n/2 everywhere and no triangle at all.
K33 = proper_multipartite(2, 3)
print("K33   ", color_degree_profile(K33), find_rainbow_clique(K33, 3))

# Colour every edge ik (i < k) with k: high average colour degree, still no rainbow triangle.
for n in (5, 8, 11):
    G = li_average_construction(n)
    dmin, avg = color_degree_profile(G)
    print(f"nested n={n:2d}  min={dmin} avg={avg} ({float(avg):.2f})  rainbow K3: {find_rainbow_clique(G, 3)}")

# The tournament colouring of K_7 reaches colour degree 4 and is full of rainbow triangles.
T = tournament_coloring(7)
print("tournament n=7", color_degree_profile(T), "first rainbow K3:", find_rainbow_clique(T, 3).vertices)
print("rainbow K4:", find_rainbow_clique(T, 4))
