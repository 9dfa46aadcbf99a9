"""Watch a degree-sum closure grow a graph and keep its factor status.

Run: python3 demos/closure_walkthrough.py
"""

from __future__ import annotations

from spanfactor import closure_for_k_factor, closure_for_one_factor, has_k_factor, has_one_factor
from spanfactor.graph import cycle, from_edges, graph6_encode, path


def show(label, g):
    print(f"  {label:<28} {graph6_encode(g):<8} edges={g.edge_count:<3} degrees={g.degrees()}")


def main() -> None:
    print("C_4 under the (n-1)-closure: every non-adjacent pair has degree sum 4 >= 3")
    g = cycle(4)
    show("G", g)
    show("closure", closure_for_one_factor(g))

    print("\nA 6-vertex graph: 1-factor status is the same before and after closing")
    g = from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    c = closure_for_one_factor(g)
    show("G", g)
    show("C_5(G)", c)
    print(f"  perfect matching in G: {has_one_factor(g) is not None}, in closure: {has_one_factor(c) is not None}")

    print("\nk = 2 uses index n + 2k - 4 = n; C_5 is already closed (degree sums 4 < 5)")
    show("C_5", closure_for_k_factor(cycle(5), 2))

    print("\nP_6 for k = 2: no 2-factor either way")
    p = path(6)
    c = closure_for_k_factor(p, 2)
    show("P_6", p)
    show("closure", c)
    print(f"  2-factor in G: {has_k_factor(p, 2) is not None}, in closure: {has_k_factor(c, 2) is not None}")


if __name__ == "__main__":
    main()
