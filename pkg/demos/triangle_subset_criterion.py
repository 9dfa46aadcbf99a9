"""The triangle is the one small graph where the isolated-vertex criterion
for leaf degree 1 disagrees with an exact search.

Every spanning tree of K_3 is a path whose middle vertex carries both
leaves, so no spanning tree has leaf degree 1; but no vertex set S isolates
2|S| vertices. An exhaustive scan of all connected graphs up to 7 vertices
finds no other disagreement.

Run: python3 demos/triangle_subset_criterion.py
"""

from __future__ import annotations

from itertools import combinations

from spanfactor import TheoremSpec, ThresholdQuery, has_spanning_tree_leaf_deg, kaneko_check, verify
from spanfactor.graph import complete, isolated_count, vertex_set
from spanfactor.verify import Exhaustive


def main() -> None:
    k3 = complete(3)
    print("K_3, k = 1")
    print(f"  spanning tree with leaf degree <= 1: {has_spanning_tree_leaf_deg(k3, 1)}")
    for size in (1, 2):
        for s in combinations(range(3), size):
            print(f"  S={list(s)}: i(G-S)={isolated_count(k3, vertex_set(s))} vs 2|S|={2 * size}")
    print(f"  subset scan violator: {kaneko_check(k3, 1)}")

    for n in range(3, 7):
        rep = verify(TheoremSpec("EQ-T111", ThresholdQuery(n=n, k=1)), Exhaustive(n, connected=True))
        print(f"  n={n}: {rep.scanned:>6} connected graphs, disagreements {rep.counterexamples}")


if __name__ == "__main__":
    main()
