"""Walk around the spanning-3-tree extremal graph at its smallest admissible order.

K_1 v (K_19 + I_3) on 23 vertices has no spanning tree of maximum degree 3,
yet every single added edge creates one and raises the spectral radius.

Run: python3 demos/extremal_tightness.py
"""

from __future__ import annotations

from spanfactor import has_spanning_k_tree, perturbation_suite, quotient_rho, spectral_radius
from spanfactor.extremal import ex_ktree, smallest_ktree_order
from spanfactor.graph import graph6_encode


def main() -> None:
    m, k = 1, 3
    n = smallest_ktree_order(m, k)
    g = ex_ktree(n, m, k)
    rho = spectral_radius(g)
    q = quotient_rho(m, n - k * m - 1, k * m - m + 1)
    print(f"EX_KTREE(n={n}, m={m}, k={k}) = {graph6_encode(g)}")
    print(f"  rho by power iteration  {rho:.12f}")
    print(f"  rho by 3x3 quotient     {q.rho:.12f}")
    print(f"  clique K_{n - (k - 1) * m - 1} has rho     {n - (k - 1) * m - 2}")
    print(f"  spanning {k}-tree: {has_spanning_k_tree(g, k)}")

    print("\nA few augmentations:")
    for u, v in g.non_edges()[:: max(1, len(g.non_edges()) // 5)]:
        h = g.add_edge(u, v)
        t = has_spanning_k_tree(h, k)
        print(f"  + ({u:>2},{v:>2}): rho {spectral_radius(h):.6f}  tree max degree {t.max_degree()}")

    rep = perturbation_suite("exktree", {"n": n, "m": m, "k": k})
    print(f"\nFull suite: {rep.scanned} graphs, {len(rep.counterexamples)} counterexamples, "
          f"{rep.wall_time:.2f}s")


if __name__ == "__main__":
    main()
