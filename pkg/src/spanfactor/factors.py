"""1-factors and k-factors.

``max_matching`` is Edmonds' blossom algorithm on adjacency lists. k-factors
are found by Tutte's reduction to perfect matching: every vertex v becomes
d(v) external nodes (one per incident edge) plus d(v) - k internal nodes
joined completely to its external nodes, and the two external nodes of each
original edge are joined. Perfect matchings of this gadget correspond to
k-factors (matched external-external pairs are the factor edges).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits

GADGET_EDGE_LIMIT = 400
BRUTE_FORCE_EDGE_LIMIT = 24


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.edges)

    def is_valid_for(self, g: Graph) -> bool:
        seen = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True

    def is_perfect_for(self, g: Graph) -> bool:
        return self.is_valid_for(g) and 2 * len(self.edges) == g.n


@dataclass(frozen=True)
class FactorCertificate:
    k: int
    edges: tuple[tuple[int, int], ...]

    def is_valid_for(self, g: Graph) -> bool:
        deg = [0] * g.n
        for u, v in self.edges:
            if not g.has_edge(u, v):
                return False
            deg[u] += 1
            deg[v] += 1
        return len(set(self.edges)) == len(self.edges) and all(d == self.k for d in deg)


def maximum_matching_mates(adj: list[list[int]]) -> list[int]:
    """Maximum-cardinality matching of a general graph given as adjacency lists.

    Returns ``mate`` with ``mate[v] = -1`` for exposed vertices. Runs in
    O(V^3); vertices and neighbours are scanned in list order, so the result
    is deterministic.
    """
    n = len(adj)
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[u], mate[v] = v, u
                    break

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = _augmenting_path(adj, mate, root)
        # A vertex with no augmenting path now never gets one later.
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def _augmenting_path(adj: list[list[int]], mate: list[int], root: int) -> tuple[int, list[int]]:
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                b = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, b, to, in_blossom)
                mark_path(to, b, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = b
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def _adjacency_lists(g: Graph) -> list[list[int]]:
    return [list(iter_bits(row)) for row in g.rows]


def max_matching(g: Graph) -> Matching:
    mate = maximum_matching_mates(_adjacency_lists(g))
    return Matching(tuple((u, v) for u, v in enumerate(mate) if u < v))


def has_one_factor(g: Graph) -> Matching | None:
    """A perfect matching of ``g``, or None if there is none."""
    if g.n % 2:
        return None
    m = max_matching(g)
    return m if 2 * len(m) == g.n else None


def _gadget(g: Graph, k: int) -> tuple[list[list[int]], dict[int, tuple[int, int]], list[int]]:
    """Tutte gadget adjacency, the external-node map and each external node's partner."""
    node = 0
    adj: list[list[int]] = []
    external: dict[tuple[int, int], int] = {}
    owner: dict[int, tuple[int, int]] = {}
    # Internal nodes are numbered before external ones so the greedy start
    # saturates them first.
    for v in range(g.n):
        d = g.degree(v)
        internals = list(range(node, node + d - k))
        node += d - k
        externals = list(range(node, node + d))
        node += d
        for x in internals:
            adj.append(list(externals))
        for x, u in zip(externals, iter_bits(g.rows[v])):
            adj.append(list(internals))
            external[(v, u)] = x
            owner[x] = (v, u)
    partner = [-1] * node
    for (v, u), x in external.items():
        y = external[(u, v)]
        partner[x] = y
        adj[x].insert(0, y)
    return adj, owner, partner


def has_k_factor(g: Graph, k: int) -> FactorCertificate | None:
    """A k-regular spanning subgraph of ``g``, or None if none exists."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n * k % 2 or g.n <= k or g.min_degree < k:
        return None
    e = g.edge_count
    if e > GADGET_EDGE_LIMIT:
        raise ValueError(f"gadget reduction is capped at {GADGET_EDGE_LIMIT} edges, got {e}")
    adj, owner, partner = _gadget(g, k)
    mate = maximum_matching_mates(adj)
    if -1 in mate:
        return None
    edges = tuple(sorted(owner[x] for x in owner if mate[x] == partner[x] and owner[x][0] < owner[x][1]))
    cert = FactorCertificate(k, edges)
    if not cert.is_valid_for(g):
        raise RuntimeError("gadget matching did not yield a k-factor")
    return cert


def brute_force_k_factor(g: Graph, k: int) -> FactorCertificate | None:
    """Exhaustive search over edge subsets for a k-factor (oracle; at most 24 edges).

    Edges are decided in order; a branch dies as soon as some vertex exceeds
    degree k or can no longer reach it.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    edges = g.edges()
    if len(edges) > BRUTE_FORCE_EDGE_LIMIT:
        raise ValueError(f"brute force is capped at {BRUTE_FORCE_EDGE_LIMIT} edges, got {len(edges)}")
    n = g.n
    deg = [0] * n
    left = g.degrees()
    chosen: list[tuple[int, int]] = []

    def search(i: int) -> bool:
        if i == len(edges):
            return all(d == k for d in deg)
        u, v = edges[i]
        left[u] -= 1
        left[v] -= 1
        if deg[u] < k and deg[v] < k:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            if deg[u] + left[u] >= k and deg[v] + left[v] >= k and search(i + 1):
                return True
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        ok = deg[u] + left[u] >= k and deg[v] + left[v] >= k and search(i + 1)
        left[u] += 1
        left[v] += 1
        return ok

    if not all(d >= k for d in left):
        return None
    if search(0):
        return FactorCertificate(k, tuple(chosen))
    return None


def brute_force_one_factor(g: Graph) -> Matching | None:
    """Enumerate perfect matchings by pairing the lowest unmatched vertex (oracle)."""
    if g.n % 2:
        return None
    pairs: list[tuple[int, int]] = []

    def search(free: int) -> bool:
        if not free:
            return True
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        for u in iter_bits(g.rows[v] & rest):
            pairs.append((v, u))
            if search(rest & ~(1 << u)):
                return True
            pairs.pop()
        return False

    if search(g.vertex_mask):
        return Matching(tuple(pairs))
    return None
