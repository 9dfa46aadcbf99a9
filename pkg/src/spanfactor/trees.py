"""Degree- and leaf-degree-constrained spanning trees.

Both searches grow a single tree from vertex 0 and branch on one edge
between the tree and an unreached vertex: either the edge is used, or it is
excluded for the rest of the branch. Every spanning tree is reachable this
way, so the searches are complete whatever edge is chosen. The choice is
path-like and fail-first: extend from the newest tree vertex that can still
grow, towards its most constrained unreached neighbour.

Branches are cut by necessary conditions only: every unreached component
must be attachable, and small vertex separators must not leave more pieces
(or isolated vertices) than a valid tree could absorb. A node budget turns
runaway searches into ``BudgetExceeded`` rather than a false "no".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, isolated_count, iter_bits, vertex_set

DEFAULT_BUDGET = 10**8
K_TREE_VERTEX_LIMIT = 24
LEAF_TREE_VERTEX_LIMIT = 20
KANEKO_VERTEX_LIMIT = 24


class BudgetExceeded(RuntimeError):
    """An exact search hit its node budget before reaching a verdict."""


@dataclass(frozen=True)
class TreeCertificate:
    n: int
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_spanning_tree_of(self, g: Graph) -> bool:
        if self.n != g.n or len(self.edges) != g.n - 1:
            return False
        if any(not g.has_edge(u, v) for u, v in self.edges):
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


@dataclass(frozen=True)
class SubsetCertificate:
    """A nonempty S with i(G - S) >= (k + 1)|S|."""

    s: int
    isolated_after: int

    @property
    def members(self) -> list[int]:
        return list(iter_bits(self.s))

    def recheck(self, g: Graph) -> bool:
        return self.s != 0 and isolated_count(g, self.s) == self.isolated_after


def leaf_degree(t: TreeCertificate) -> int:
    """Maximum number of leaves adjacent to a single vertex; 1 for the 2-vertex tree."""
    if t.n == 1:
        return 0
    if len(t.edges) != t.n - 1:
        raise GraphError("not a tree: wrong edge count")
    if t.n == 2:
        return 1
    deg = t.degrees()
    count = [0] * t.n
    for u, v in t.edges:
        if deg[v] == 1:
            count[u] += 1
        if deg[u] == 1:
            count[v] += 1
    return max(count)


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise GraphError("input graph must be connected")


def _bfs_tree(g: Graph) -> TreeCertificate:
    seen = 1
    edges = []
    queue = [0]
    for u in queue:
        for v in iter_bits(g.rows[u] & ~seen):
            seen |= 1 << v
            edges.append((u, v) if u < v else (v, u))
            queue.append(v)
    return TreeCertificate(g.n, tuple(edges))


def _small_separators(rows: list[int], n: int, size: int = 3) -> set[int]:
    """Neighbourhoods of vertices with at most ``size`` usable neighbours.

    These are the sets whose removal isolates something, i.e. the only
    candidates for the cheap separator counts used as search prunes.
    """
    out = set()
    for w in range(n):
        nb = rows[w]
        if 0 < nb.bit_count() <= size:
            out.add(nb)
    return out


def _isolated_by(rows: list[int], n: int, s: int) -> int:
    return sum(1 for w in range(n) if not s >> w & 1 and rows[w] & ~s == 0)


class _TreeSearch:
    """Shared include/exclude search state; subclasses supply the constraints."""

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.n = g.n
        self.rows = list(g.rows)  # shrinks as edges get excluded
        self.deg = [0] * g.n
        self.in_tree = 1
        self.edges: list[tuple[int, int]] = []
        self.order = [0]  # tree vertices in insertion order
        self.rows_changed = True  # separator prunes only need rerunning after exclusions
        self.budget = budget
        self.nodes = 0

    def usable(self, u: int) -> bool:
        return True

    def feasible(self, check_cuts: bool) -> bool:
        return True

    def pick(self, outside: int) -> tuple[int, int] | None:
        """Next (tree vertex, outside vertex) edge to branch on: the lowest
        outside vertex and its lowest admissible tree neighbour."""
        for w in iter_bits(outside):
            for u in iter_bits(self.rows[w] & self.in_tree):
                if self.usable(u):
                    return u, w
        return None

    def run(self) -> TreeCertificate | None:
        if self.search():
            return TreeCertificate(self.n, tuple(sorted(self.edges)))
        return None

    def search(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")
        full = (1 << self.n) - 1
        check_cuts, self.rows_changed = self.rows_changed, False
        if not self.feasible(check_cuts):
            return False
        if self.in_tree == full:
            return True
        choice = self.pick(full & ~self.in_tree)
        if choice is None:
            return False
        u, w = choice

        self.in_tree |= 1 << w
        self.deg[u] += 1
        self.deg[w] += 1
        self.edges.append((u, w) if u < w else (w, u))
        self.order.append(w)
        if self.search():
            return True
        self.order.pop()
        self.edges.pop()
        self.deg[u] -= 1
        self.deg[w] -= 1
        self.in_tree &= ~(1 << w)

        self.rows[u] &= ~(1 << w)
        self.rows[w] &= ~(1 << u)
        self.rows_changed = True
        found = self.search()
        self.rows[u] |= 1 << w
        self.rows[w] |= 1 << u
        return found


class _KTreeSearch(_TreeSearch):
    def __init__(self, g: Graph, k: int, budget: int):
        super().__init__(g, budget)
        self.k = k

    def usable(self, u: int) -> bool:
        return self.deg[u] < self.k

    def pick(self, outside: int) -> tuple[int, int] | None:
        # Path-like growth from the newest tree vertex with spare degree,
        # towards the unreached neighbour with the fewest remaining options.
        rows, deg, k = self.rows, self.deg, self.k
        open_or_out = outside
        for u in iter_bits(self.in_tree):
            if deg[u] < k:
                open_or_out |= 1 << u
        for u in reversed(self.order):
            if deg[u] < k:
                nbrs = rows[u] & outside
                if nbrs:
                    return u, min(iter_bits(nbrs), key=lambda w: (rows[w] & open_or_out).bit_count())
        return None

    def feasible(self, check_cuts: bool) -> bool:
        k, deg, rows, in_tree = self.k, self.deg, self.rows, self.in_tree
        outside = ((1 << self.n) - 1) & ~in_tree
        open_tree = 0
        for u in iter_bits(in_tree):
            if deg[u] < k:
                open_tree |= 1 << u
        # Each component of the unreached part hangs off the tree by at least
        # one edge at a vertex with spare degree.
        sole = [0] * self.n
        reachable = 0
        components = 0
        for comp in _components(rows, outside):
            attach = 0
            for w in iter_bits(comp):
                attach |= rows[w] & open_tree
            if not attach:
                return False
            components += 1
            reachable |= attach
            if attach & (attach - 1) == 0:
                u = attach.bit_length() - 1
                sole[u] += 1
                if sole[u] > k - deg[u]:
                    return False
        if components:
            spare = sum(k - deg[u] for u in iter_bits(reachable))
            if spare < components:
                return False
        # total attachment capacity
        capacity = sum(k - deg[u] for u in iter_bits(open_tree)) + (k - 1) * outside.bit_count()
        if capacity < outside.bit_count():
            return False
        # Removing S from a tree of maximum degree k leaves at most
        # (k-1)|S| + 1 pieces, so G - S may have no more components than that.
        if not check_cuts:
            return True
        full = (1 << self.n) - 1
        for sep in _small_separators(rows, self.n):
            if sum(1 for _ in _components(rows, full & ~sep)) > (k - 1) * sep.bit_count() + 1:
                return False
        return True


def _components(rows: list[int], within: int):
    """Vertex masks of the connected components of the subgraph induced on ``within``."""
    left = within
    while left:
        comp = frontier = left & -left
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= rows[v]
            frontier = grow & left & ~comp
            comp |= frontier
        left &= ~comp
        yield comp


def has_spanning_k_tree(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> TreeCertificate | None:
    """A spanning tree of maximum degree at most ``k``, or None if none exists."""
    _require_connected(g)
    if k < 2:
        raise ValueError("spanning k-trees need k >= 2")
    if g.n > K_TREE_VERTEX_LIMIT:
        raise ValueError(f"exact k-tree search is limited to n <= {K_TREE_VERTEX_LIMIT}")
    if g.max_degree <= k:
        tree = _bfs_tree(g)
    else:
        tree = _KTreeSearch(g, k, budget).run()
    if tree is not None and not (tree.is_spanning_tree_of(g) and tree.max_degree() <= k):
        raise RuntimeError("k-tree search returned an invalid certificate")
    return tree


class _LeafDegreeSearch(_TreeSearch):
    def __init__(self, g: Graph, k: int, budget: int):
        super().__init__(g, budget)
        self.k = k

    def pick(self, outside: int) -> tuple[int, int] | None:
        # Extend from the most recently added vertex that still has an
        # unreached neighbour, towards its most constrained such neighbour:
        # trees grow path-like, which keeps leaves rare.
        rows = self.rows
        for u in reversed(self.order):
            nbrs = rows[u] & outside
            if nbrs:
                return u, min(iter_bits(nbrs), key=lambda w: rows[w].bit_count())
        return None

    def feasible(self, check_cuts: bool) -> bool:
        # A tree vertex of degree 1 whose remaining usable neighbours are all
        # in the tree can never grow again: it is a final leaf. An unreached
        # vertex whose usable neighbours are all in the tree will be one.
        if self.n <= 2:
            return True
        rows, deg, in_tree, k = self.rows, self.deg, self.in_tree, self.k
        outside = ((1 << self.n) - 1) & ~in_tree
        count = [0] * self.n
        for u, v in self.edges:
            if deg[v] == 1 and not rows[v] & outside:
                count[u] += 1
                if count[u] > k:
                    return False
            if deg[u] == 1 and not rows[u] & outside:
                count[v] += 1
                if count[v] > k:
                    return False
        future = 0
        parents = 0
        sole = list(count)
        for comp in _components(rows, outside):
            attach = 0
            for w in iter_bits(comp):
                attach |= rows[w] & in_tree
            if not attach:
                return False
            if comp & (comp - 1) == 0:
                future += 1
                parents |= attach
                if attach & (attach - 1) == 0:
                    u = attach.bit_length() - 1
                    sole[u] += 1
                    if sole[u] > k:
                        return False
        if future and future > sum(k - count[u] for u in iter_bits(parents)):
            return False
        # Vertices isolated by S are leaves hanging on S or links between
        # S-vertices (at most |S| - 1 of those), so fewer than (k+1)|S|.
        if not check_cuts:
            return True
        for sep in _small_separators(rows, self.n):
            if _isolated_by(rows, self.n, sep) >= (k + 1) * sep.bit_count():
                return False
        return True


def has_spanning_tree_leaf_deg(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> TreeCertificate | None:
    """A spanning tree with leaf degree at most ``k``, or None if none exists."""
    _require_connected(g)
    if k < 1:
        raise ValueError("leaf degree bound must be at least 1")
    if g.n > LEAF_TREE_VERTEX_LIMIT:
        raise ValueError(f"exact leaf-degree search is limited to n <= {LEAF_TREE_VERTEX_LIMIT}")
    search = _LeafDegreeSearch(g, k, budget)
    tree = search.run()
    if tree is not None and not (tree.is_spanning_tree_of(g) and leaf_degree(tree) <= k):
        raise RuntimeError("leaf-degree search returned an invalid certificate")
    return tree


def kaneko_check(g: Graph, k: int) -> SubsetCertificate | None:
    """Scan nonempty S by increasing size for i(G - S) >= (k+1)|S|.

    Returns None when every S satisfies the strict inequality, otherwise a
    violating set of minimum cardinality.
    """
    _require_connected(g)
    if k < 1:
        raise ValueError("leaf degree bound must be at least 1")
    n = g.n
    if n > KANEKO_VERTEX_LIMIT:
        raise ValueError(f"subset scan is limited to n <= {KANEKO_VERTEX_LIMIT}")
    rows = g.rows
    for size in range(1, n + 1):
        if n - size < (k + 1) * size:
            break  # too few vertices left to be isolated
        for s in combinations(range(n), size):
            mask = vertex_set(s)
            keep = ~mask
            isolated = 0
            for v in range(n):
                if not mask >> v & 1 and rows[v] & keep == 0:
                    isolated += 1
            if isolated >= (k + 1) * size:
                return SubsetCertificate(mask, isolated)
    return None


def spanning_tree_min_max_degree(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, TreeCertificate]:
    """Minimum over spanning trees of the maximum degree, with a witness tree."""
    _require_connected(g)
    if g.n <= 2:
        tree = _bfs_tree(g)
        return tree.max_degree(), tree
    lo, hi = 2, max(2, g.max_degree)
    best = has_spanning_k_tree(g, hi, budget)
    assert best is not None
    while lo < hi:
        mid = (lo + hi) // 2
        tree = has_spanning_k_tree(g, mid, budget)
        if tree is None:
            lo = mid + 1
        else:
            hi, best = mid, tree
    return hi, best


def hamilton_path_exists(g: Graph) -> bool:
    """Held-Karp style bitmask DP over (visited set, endpoint); for n <= 18."""
    n = g.n
    if n == 1:
        return True
    if n > 18:
        raise ValueError("Hamilton path DP is limited to n <= 18")
    full = (1 << n) - 1
    # ends[mask] = set of endpoints of paths covering exactly mask
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, full + 1):
        e = ends[mask]
        if not e:
            continue
        for v in iter_bits(e):
            for w in iter_bits(g.rows[v] & ~mask):
                ends[mask | 1 << w] |= 1 << w
    return ends[full] != 0
