"""Exhaustive checks at small n; each run returns a serialisable report."""
from rainbowcliques.verify import PIPELINE, check_li_triangle, check_multigraph_turan, property_suite

for n in (4, 5):
    rep = check_li_triangle(n, mode="exhaustive")
    print(rep.summary())
    print("   witness kinds:", rep.stats["witness_kinds"])

rep = check_li_triangle(6, mode="pruned")
print(rep.summary())

rep = check_multigraph_turan(5, 3)
print(rep.summary())
print("   one sharp multigraph without the pattern:", rep.extremal_witnesses[0])

rep = property_suite(500, seed=11, observations=PIPELINE)
print(rep.summary())
