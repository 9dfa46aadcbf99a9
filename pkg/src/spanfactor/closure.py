"""Degree-sum closures C_l(G).

The l-closure repeatedly joins a nonadjacent pair whose degree sum is at
least ``l`` until no such pair remains. The result does not depend on the
order in which qualifying pairs are joined.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, iter_bits


def l_closure(g: Graph, l: int) -> Graph:
    if l < 0:
        raise ValueError(f"closure index must be non-negative, got {l}")
    n = g.n
    rows = list(g.rows)
    deg = [r.bit_count() for r in rows]
    full = (1 << n) - 1
    if l > 2 * (n - 1):
        return g

    # Pairs are seeded and re-enqueued in lexicographic order.
    queue = deque((u, v) for u, v in g.non_edges())
    queued = set(queue)
    changed = False
    while queue:
        u, v = queue.popleft()
        queued.discard((u, v))
        if rows[u] >> v & 1 or deg[u] + deg[v] < l:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        changed = True
        for x in (u, v):
            for w in iter_bits(~rows[x] & full & ~(1 << x)):
                pair = (x, w) if x < w else (w, x)
                if pair not in queued:
                    queued.add(pair)
                    queue.append(pair)
    if not changed:
        return g
    return Graph._trusted(n, tuple(rows))


def one_factor_closure_index(n: int) -> int:
    return n - 1


def k_factor_closure_index(n: int, k: int) -> int:
    """Closure index that preserves k-factor existence: n-1 for k = 1, n+2k-4 for k >= 2."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return n - 1 if k == 1 else n + 2 * k - 4


def k_tree_closure_index(n: int, k: int, m: int) -> int:
    """Closure index n-(k-2)m-1 that preserves spanning k-trees of m-connected graphs."""
    if k < 2 or m < 1:
        raise ValueError("need k >= 2 and m >= 1")
    return n - (k - 2) * m - 1


def closure_for_one_factor(g: Graph) -> Graph:
    return l_closure(g, one_factor_closure_index(g.n))


def closure_for_k_factor(g: Graph, k: int) -> Graph:
    return l_closure(g, k_factor_closure_index(g.n, k))


def closure_for_spanning_k_tree(g: Graph, k: int, m: int) -> Graph:
    return l_closure(g, k_tree_closure_index(g.n, k, m))


def is_closed(g: Graph, l: int) -> bool:
    """True iff no nonadjacent pair of ``g`` has degree sum >= ``l``."""
    deg = g.degrees()
    return all(deg[u] + deg[v] < l for u, v in g.non_edges())
