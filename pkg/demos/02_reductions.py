"""From a coloured graph to digraphs and back down to a simple graph."""
from rainbowcliques import color_degree
from rainbowcliques.constructions import random_colored_graph, regular_tournament
from rainbowcliques.transforms import (
    build_gcm_digraph,
    digraph_to_multigraph,
    edge_minimal_reduce,
    is_edge_minimal,
    orientation_coloring,
    two_cycle_graph,
)

G = random_colored_graph(10, 0.7, 3, seed=7)
print("edges", len(G.color), "edge-minimal?", is_edge_minimal(G))

R, trace = edge_minimal_reduce(G)
print("after reduction:", len(R.color), "edges,", len(trace.deleted_edges), "removed; rounds =", trace.rounds)
assert all(color_degree(G, v) == color_degree(R, v) for v in range(G.n))

# Small colour classes at each vertex become arcs; m = n - 1 keeps every class.
for m in (1, 2, 9):
    D = build_gcm_digraph(R, m)
    H = two_cycle_graph(D)
    print(f"m={m}: arcs={len(D.arcs):3d} two-cycles={len(H.edges):2d}")

M = digraph_to_multigraph(build_gcm_digraph(R, 9))
print("multigraph: heavy pairs", sum(1 for k in M.mult.values() if k == 2), "light pairs", sum(1 for k in M.mult.values() if k == 1))

# Going the other way, an orientation (no 2-cycles) gives a colouring whose
# colour degree is out-degree plus one for every vertex with an in-arc.
T = regular_tournament(7)
C = orientation_coloring(T)
print("orientation colouring degrees:", [color_degree(C, v) for v in range(C.n)])
