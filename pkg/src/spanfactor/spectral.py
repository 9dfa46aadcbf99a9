"""Clique counts, Posa-type bounds and adjacency spectral radii."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, iter_bits

DEFAULT_TOL = 1e-10
MAX_ITERATIONS = 10**6


class ConvergenceError(RuntimeError):
    pass


# -- cliques -----------------------------------------------------------------


def count_cliques(g: Graph, r: int) -> int:
    """N_r(G), the number of r-vertex complete subgraphs."""
    if r < 1:
        raise ValueError("clique size must be at least 1")
    if r == 1:
        return g.n
    rows = g.rows

    def count(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            total += count(cand & rows[v], need - 1)
        return total

    return count(g.vertex_mask, r)


def clique_number(g: Graph) -> int:
    """omega(G) by branch and bound with a greedy-colouring bound."""
    rows = g.rows
    best = 1

    def colour_bound(cand: int) -> int:
        colours = 0
        while cand:
            colours += 1
            avail = cand
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                cand &= ~low
                avail &= ~low & ~rows[v]
        return colours

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + colour_bound(cand) <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & rows[v])

    expand(0, g.vertex_mask)
    return best


def posa_property(g: Graph, s: int, q: int) -> bool:
    """True iff at least ``s`` vertices have degree at most ``q``."""
    return sum(1 for d in g.degrees() if d <= q) >= s


def posa_clique_bound(n: int, s: int, q: int, r: int) -> int:
    """binom(n-s, r) + s*binom(q, r-1): the clique-count ceiling under the (s, q)-Posa property."""
    if s < 1 or q < 0 or r < 1:
        raise ValueError("need s >= 1, q >= 0, r >= 1")
    if n < s + q:
        raise ValueError(f"bound requires n >= s + q, got n={n}, s={s}, q={q}")
    return math.comb(n - s, r) + s * math.comb(q, r - 1)


# -- spectral radius ---------------------------------------------------------


def _power_iteration(a: np.ndarray, tol: float, max_iter: int) -> float:
    """Perron root of a connected adjacency matrix via power iteration on A + I."""
    m = a.shape[0]
    if m == 1:
        return 0.0
    b = a + np.eye(m)
    x = np.full(m, 1.0 / math.sqrt(m))
    for _ in range(max_iter):
        y = b @ x
        lam = float(x @ y)
        # residual of the current Rayleigh pair; x has unit 2-norm
        if np.linalg.norm(y - lam * x) <= tol:
            return lam - 1.0
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITERATIONS) -> float:
    """Largest adjacency eigenvalue, maximised over connected components."""
    a = g.adjacency_matrix()
    best = 0.0
    for comp in g.component_masks():
        idx = list(iter_bits(comp))
        if len(idx) > 1:
            best = max(best, _power_iteration(a[np.ix_(idx, idx)], tol, max_iter))
    return best


def spectral_radius_batch(adj: np.ndarray, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITERATIONS) -> np.ndarray:
    """Spectral radii of a stack of adjacency matrices with shape (count, n, n).

    Runs the same A + I power iteration as :func:`spectral_radius` on all
    matrices at once and retires each one when its residual drops below
    ``tol``. With disconnected inputs the iteration still converges to the
    largest component root, only more slowly.
    """
    adj = np.asarray(adj, dtype=float)
    count, n, _ = adj.shape
    out = np.full(count, np.nan)
    if count == 0:
        return out
    if n == 1:
        out[:] = 0.0
        return out
    b = adj + np.eye(n)
    x = np.full((count, n), 1.0 / math.sqrt(n))
    active = np.arange(count)
    for _ in range(max_iter):
        y = np.einsum("kij,kj->ki", b[active], x)
        lam = np.einsum("ki,ki->k", x, y)
        res = np.linalg.norm(y - lam[:, None] * x, axis=1)
        done = res <= tol
        out[active[done]] = lam[done] - 1.0
        keep = ~done
        if not keep.any():
            return out
        active = active[keep]
        y = y[keep]
        x = y / np.linalg.norm(y, axis=1)[:, None]
    raise ConvergenceError(f"batched power iteration did not converge in {max_iter} steps")


# -- three-part joins --------------------------------------------------------


@dataclass(frozen=True)
class QuotientSystem:
    """Quotient of K_a v (K_b + I_c) over the parts (K_a, K_b, I_c)."""

    part_sizes: tuple[int, int, int]
    matrix: tuple[tuple[float, ...], ...]
    rho: float
    eigvec: tuple[float, float, float]

    def residual(self) -> float:
        m = np.array(self.matrix)
        v = np.array(self.eigvec)
        return float(np.max(np.abs(m @ v - self.rho * v)))


def quotient_polynomial(a: int, b: int, c: int, lam: float) -> float:
    """det(lam*I - Q) = lam(lam-a+1)(lam-b+1) - ab*lam - ac(lam-b+1)."""
    return lam * (lam - a + 1) * (lam - b + 1) - a * b * lam - a * c * (lam - b + 1)


def quotient_rho(a: int, b: int, c: int) -> QuotientSystem:
    """Perron root and vector of K_a v (K_b + I_c) from its 3x3 quotient matrix.

    The root is isolated by bisection on (b-1, a+b+c-1], where it is the only
    root of the characteristic cubic. The vector comes from the last two
    rows of the eigen-equation: x3 = a*x1/rho and x2 = a*x1/(rho - b + 1),
    scaled so the lifted vertex vector has unit norm.
    """
    if a < 1 or b < 1 or c < 0:
        raise ValueError("need a >= 1, b >= 1, c >= 0")
    lo, hi = float(b - 1), float(a + b + c - 1)
    if quotient_polynomial(a, b, c, hi) < 0:
        raise ArithmeticError("Perron root not bracketed")
    if quotient_polynomial(a, b, c, hi) == 0:
        lo = hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if quotient_polynomial(a, b, c, mid) > 0:
            hi = mid
        else:
            lo = mid
    rho = hi
    x1 = 1.0
    x3 = a * x1 / rho
    x2 = a * x1 / (rho - b + 1)
    scale = math.sqrt(a * x1 * x1 + b * x2 * x2 + c * x3 * x3)
    matrix = ((a - 1.0, float(b), float(c)), (float(a), b - 1.0, 0.0), (float(a), 0.0, 0.0))
    return QuotientSystem((a, b, c), matrix, rho, (x1 / scale, x2 / scale, x3 / scale))


# -- upper bounds ------------------------------------------------------------


def hong_bound(g: Graph) -> float:
    """sqrt(2e - n + 1), an upper bound on rho for connected graphs."""
    if not g.is_connected():
        raise GraphError("the bound needs a connected graph")
    return math.sqrt(2 * g.edge_count - g.n + 1)


def min_degree_bound(n: int, e: int, delta: int) -> float:
    """(delta-1)/2 + sqrt(2e - delta*n + (delta+1)^2/4)."""
    return (delta - 1) / 2 + math.sqrt(2 * e - delta * n + (delta + 1) ** 2 / 4)


def hong_shu_fang_bound(g: Graph) -> float:
    """Minimum-degree refinement of the Hong bound; holds for every graph."""
    return min_degree_bound(g.n, g.edge_count, g.min_degree)
