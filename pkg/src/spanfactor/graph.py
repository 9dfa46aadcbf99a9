"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one integer row mask per vertex (bit ``v`` of
``rows[u]`` is set iff ``uv`` is an edge), so neighbourhood and set
operations are word-parallel.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

import numpy as np

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62


class GraphError(ValueError):
    """Invalid graph construction or argument."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_set(vertices: Iterable[int] | int) -> int:
    """Return a bitmask for ``vertices`` (an iterable of indices or a mask)."""
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Simple undirected graph with ``1 <= n <= 64`` vertices."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if len(rows) != n:
            raise GraphError("need exactly one row mask per vertex")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise GraphError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not rows[v] >> u & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # Caller guarantees the invariants; skips the O(n^2) validation.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_hash", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.rows)))
        return self._hash

    def __repr__(self):
        if self.n <= GRAPH6_MAX_VERTICES:
            return f"Graph({graph6_encode(self)!r})"
        return f"Graph(n={self.n}, e={self.edge_count})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.rows)

    @property
    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.rows)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        """Nonadjacent pairs ``(u, v)`` with ``u < v`` in lexicographic order."""
        full = self.vertex_mask
        out = []
        for u in range(self.n):
            missing = ~self.rows[u] & full & ~((2 << u) - 1)
            out.extend((u, v) for v in iter_bits(missing))
        return out

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError("loops are not allowed")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm must be a permutation of 0..n-1")
        rows = [0] * self.n
        for u in range(self.n):
            image = 0
            for v in iter_bits(self.rows[u]):
                image |= 1 << perm[v]
            rows[perm[u]] = image
        return Graph._trusted(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph._trusted(self.n, tuple(~row & full & ~(1 << u) for u, row in enumerate(self.rows)))

    def is_subgraph_of(self, other: Graph) -> bool:
        """Spanning-subgraph test on the same vertex set."""
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def component_masks(self, within: int | None = None) -> list[int]:
        """Vertex masks of the connected components of the subgraph induced by ``within``."""
        remaining = self.vertex_mask if within is None else within
        rows = self.rows
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= rows[v]
                frontier = reach & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self, within: int | None = None) -> bool:
        return len(self.component_masks(within)) <= 1

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def edge_mask(self) -> int:
        """Edge bitmask in graph6 order: pair ``(i, j)``, ``i < j``, is bit ``j(j-1)/2 + i``."""
        mask = 0
        for j in range(1, self.n):
            mask |= (self.rows[j] & ((1 << j) - 1)) << (j * (j - 1) // 2)
        return mask


def from_edge_mask(n: int, mask: int) -> Graph:
    """Inverse of :meth:`Graph.edge_mask`."""
    rows = [0] * n
    for j in range(1, n):
        below = mask >> (j * (j - 1) // 2) & ((1 << j) - 1)
        rows[j] |= below
        for i in iter_bits(below):
            rows[i] |= 1 << j
    return Graph._trusted(n, tuple(rows))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph._trusted(n, (0,) * n)


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def circulant(n: int, t: int) -> Graph:
    """Canonical t-regular graph on n vertices.

    Vertex i is joined to i +- 1, ..., i +- floor(t/2) (mod n), plus the
    antipodal vertex i + n/2 when t is odd.
    """
    _check_order(n)
    if not 0 <= t <= n - 1:
        raise GraphError(f"need 0 <= t <= n-1, got t={t}, n={n}")
    if n * t % 2:
        raise GraphError(f"no {t}-regular graph on {n} vertices (n*t is odd)")
    rows = [0] * n
    for i in range(n):
        for d in range(1, t // 2 + 1):
            rows[i] |= 1 << ((i + d) % n) | 1 << ((i - d) % n)
        if t % 2:
            rows[i] |= 1 << ((i + n // 2) % n)
    return Graph._trusted(n, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    _check_order(n)
    return Graph._trusted(n, g1.rows + tuple(row << g1.n for row in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    _check_order(n)
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = tuple(row | right for row in g1.rows) + tuple(row << g1.n | left for row in g2.rows)
    return Graph._trusted(n, rows)


def delete_vertices(g: Graph, s: Iterable[int] | int) -> Graph:
    """Induced subgraph on the complement of ``s``; surviving vertices keep their relative order."""
    s = vertex_set(s)
    if s & ~g.vertex_mask:
        raise GraphError("vertex set has members outside the graph")
    keep = [v for v in range(g.n) if not s >> v & 1]
    if not keep:
        raise GraphError("cannot delete every vertex")
    new_index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.rows[v] & ~s):
            row |= 1 << new_index[u]
        rows.append(row)
    return Graph._trusted(len(keep), tuple(rows))


def isolated_count(g: Graph, removed: int = 0) -> int:
    """Number of isolated vertices of ``g - removed`` (``removed`` is a vertex mask)."""
    keep = ~removed
    return sum(1 for v in range(g.n) if not removed >> v & 1 and g.rows[v] & keep == 0)


class GraphStats(NamedTuple):
    e: int
    min_degree: int
    isolated_count: int
    is_connected: bool
    component_count: int


def stats(g: Graph) -> GraphStats:
    degs = g.degrees()
    comps = len(g.component_masks())
    return GraphStats(
        e=sum(degs) // 2,
        min_degree=min(degs),
        isolated_count=degs.count(0),
        is_connected=comps == 1,
        component_count=comps,
    )


# -- vertex connectivity -----------------------------------------------------

BRUTE_FORCE_CONNECTIVITY_LIMIT = 16


def vertex_connectivity(g: Graph) -> int:
    """Size of a minimum vertex cut; ``n - 1`` for complete graphs, 0 if disconnected."""
    if g.n < 2:
        raise GraphError("vertex connectivity needs at least 2 vertices")
    if g.n <= BRUTE_FORCE_CONNECTIVITY_LIMIT:
        return _connectivity_by_cuts(g)
    return _connectivity_by_paths(g)


def _connectivity_by_cuts(g: Graph) -> int:
    full = g.vertex_mask
    delta = g.min_degree
    for size in range(delta):
        for cut in combinations(range(g.n), size):
            if not g.is_connected(full & ~vertex_set(cut)):
                return size
    # kappa <= delta always: deleting N(v) isolates v unless g is complete.
    return delta


def _connectivity_by_paths(g: Graph) -> int:
    n = g.n
    best = g.min_degree
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j, best))
        i += 1
    return best


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths, stopping at ``cap``.

    Unit-capacity max flow on the split graph: vertex v becomes v_in = 2v and
    v_out = 2v + 1 joined by an arc of capacity 1 (infinite for s and t).
    """
    n = g.n
    cap_arc: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap_arc:
            out[a].append(b)
            out[b].append(a)
            cap_arc.setdefault((b, a), 0)
        cap_arc[(a, b)] = cap_arc.get((a, b), 0) + c

    big = n
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: source}
        queue = [source]
        for a in queue:
            if a == sink:
                break
            for b in out[a]:
                if b not in parent and cap_arc[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap_arc[(a, b)] -= 1
            cap_arc[(b, a)] += 1
            b = a
        flow += 1
    return flow


# -- graph6 ------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    if g.n > GRAPH6_MAX_VERTICES:
        raise Graph6Error(f"short graph6 form supports n <= {GRAPH6_MAX_VERTICES}")
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chunks = [chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)]
    return chr(63 + g.n) + "".join(chunks)


def graph6_decode(text: str) -> Graph:
    line = text.strip()
    if not line:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) for c in line]
    bad = [c for c in codes if not 63 <= c <= 126]
    if bad:
        raise Graph6Error(f"byte {bad[0]} outside 63..126")
    n = codes[0] - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if n == 0:
        raise Graph6Error("graphs must have at least one vertex")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(codes) - 1 != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(codes) - 1}")
    value = 0
    for c in codes[1:]:
        value = value << 6 | (c - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph._trusted(n, tuple(rows))


# -- isomorphism -------------------------------------------------------------


def _refine(g1: Graph, g2: Graph) -> tuple[list[int], list[int]] | None:
    """Joint colour refinement; returns colourings or None if the histograms differ."""
    c1, c2 = g1.degrees(), g2.degrees()
    while True:
        sig1 = [(c1[v], tuple(sorted(c1[u] for u in iter_bits(g1.rows[v])))) for v in range(g1.n)]
        sig2 = [(c2[v], tuple(sorted(c2[u] for u in iter_bits(g2.rows[v])))) for v in range(g2.n)]
        if sorted(sig1) != sorted(sig2):
            return None
        palette = {s: i for i, s in enumerate(sorted(set(sig1)))}
        n1, n2 = [palette[s] for s in sig1], [palette[s] for s in sig2]
        if len(palette) == len(set(c1)):
            return n1, n2
        c1, c2 = n1, n2


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by colour refinement plus backtracking (intended for n <= 12)."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    colours = _refine(g1, g2)
    if colours is None:
        return False
    c1, c2 = colours
    class_size = {c: c1.count(c) for c in set(c1)}
    order = sorted(range(g1.n), key=lambda v: (class_size[c1[v]], c1[v], v))
    mapping = [-1] * g1.n
    used = [False] * g2.n

    def extend(depth: int) -> bool:
        if depth == g1.n:
            return True
        v = order[depth]
        for w in range(g2.n):
            if used[w] or c2[w] != c1[v]:
                continue
            if all(g1.has_edge(v, order[d]) == g2.has_edge(w, mapping[order[d]]) for d in range(depth)):
                mapping[v] = w
                used[w] = True
                if extend(depth + 1):
                    return True
                used[w] = False
        mapping[v] = -1
        return False

    return extend(0)
