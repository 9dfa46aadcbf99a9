"""Closed-form thresholds and the extremal graph families they are tight for.

All integer thresholds use exact ``math.comb`` arithmetic. Family layouts put
the hub clique first, then the large clique, then the independent (or
regular) part, so graph6 output is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, GraphError, circulant, complete, disjoint_union, empty, join


class RangeError(ValueError):
    """Parameters outside the range a formula or statement is stated for."""


# -- clique-count functions --------------------------------------------------


def phi(n: int, r: int, q: int) -> int:
    """binom(n-q-1, r) + (q+1)*binom(q, r-1)."""
    if r < 1 or not 0 <= q <= n - 1:
        raise RangeError(f"phi needs r >= 1 and 0 <= q <= n-1 (n={n}, r={r}, q={q})")
    return math.comb(n - q - 1, r) + (q + 1) * math.comb(q, r - 1)


def psi(n: int, r: int, k: int, q: int) -> int:
    """binom(n-q+2k-4, r) + (q-2k+4)*binom(q, r-1)."""
    if r < 1 or k < 2 or q < 2 * k - 4 or n - q + 2 * k - 4 < 0:
        raise RangeError(f"psi needs r >= 1, k >= 2, 2k-4 <= q <= n+2k-4 (n={n}, r={r}, k={k}, q={q})")
    return math.comb(n - q + 2 * k - 4, r) + (q - 2 * k + 4) * math.comb(q, r - 1)


def phi_edges_expanded(n: int, delta: int) -> Fraction:
    """phi(n, 2, delta+1) as the quadratic n^2/2 - (delta+5/2)n + 3/2 delta^2 + 11/2 delta + 5."""
    n, d = Fraction(n), Fraction(delta)
    return n * n / 2 - (d + Fraction(5, 2)) * n + Fraction(3, 2) * d * d + Fraction(11, 2) * d + 5


def psi_edges_expanded(n: int, k: int, delta: int) -> Fraction:
    """psi(n, 2, k, delta+1) as n^2/2 - (delta-2k+11/2)n + 3/2 delta^2 - (4k-23/2)delta + 2k^2 - 13k + 20."""
    n, k, d = Fraction(n), Fraction(k), Fraction(delta)
    return (n * n / 2 - (d - 2 * k + Fraction(11, 2)) * n + Fraction(3, 2) * d * d
            - (4 * k - Fraction(23, 2)) * d + 2 * k * k - 13 * k + 20)


def _check_1f_range(n: int, delta: int) -> None:
    if n % 2:
        raise RangeError(f"1-factor statements need n even, got n={n}")
    if not 1 <= delta <= n // 2 - 1:
        raise RangeError(f"need 1 <= delta <= n/2 - 1, got delta={delta}, n={n}")


def _kf_upper(n: int, k: int) -> int:
    return (n + 2 * k - 5) // 2


def _check_kf_range(n: int, k: int, delta: int) -> None:
    if k < 2:
        raise RangeError("k-factor statements need k >= 2")
    if n * k % 2:
        raise RangeError(f"need nk even, got n={n}, k={k}")
    if not 2 * k - 2 <= delta <= _kf_upper(n, k):
        raise RangeError(f"need 2k-2 <= delta <= floor((n+2k-5)/2), got delta={delta}")


def clique_threshold_1f_terms(n: int, r: int, delta: int) -> tuple[int, int]:
    _check_1f_range(n, delta)
    return phi(n, r, delta + 1), phi(n, r, n // 2 - 1)


def clique_threshold_1f(n: int, r: int, delta: int) -> int:
    """max{phi(n,r,delta+1), phi(n,r,n/2-1)}; N_r above this forces a 1-factor up to two exceptions."""
    return max(clique_threshold_1f_terms(n, r, delta))


def clique_threshold_kf_terms(n: int, r: int, k: int, delta: int) -> tuple[int, int]:
    _check_kf_range(n, k, delta)
    return psi(n, r, k, delta + 1), psi(n, r, k, _kf_upper(n, k))


def clique_threshold_kf(n: int, r: int, k: int, delta: int) -> int:
    return max(clique_threshold_kf_terms(n, r, k, delta))


def threshold_winner(terms: tuple[int, int]) -> int:
    """Index of the larger of the two branches (0 when tied)."""
    return 0 if terms[0] >= terms[1] else 1


# -- spectral thresholds -----------------------------------------------------


def spectral_threshold_1f(n: int, delta: int, corrected: bool = False) -> float:
    """(delta-1)/2 + sqrt(n^2 - (3delta+5)n + (13delta^2 + c*delta + 41)/4).

    The default is c = 23, the threshold as usually quoted. Substituting
    e = phi(n, 2, delta+1) into the minimum-degree spectral bound gives
    c = 46 instead; pass ``corrected=True`` for that value.
    """
    _check_1f_range(n, delta)
    if n < 6 * delta + 10:
        raise RangeError(f"need n >= 6*delta + 10, got n={n}, delta={delta}")
    c = 46 if corrected else 23
    radicand = n * n - (3 * delta + 5) * n + Fraction(13 * delta * delta + c * delta + 41, 4)
    return (delta - 1) / 2 + math.sqrt(radicand)


def spectral_threshold_kf(n: int, k: int, delta: int) -> float:
    """(delta-1)/2 + sqrt(n^2 - (3delta-4k+11)n + (13delta^2 - (32k-94)delta + 16k^2 - 104k + 161)/4)."""
    _check_kf_range(n, k, delta)
    if n < 6 * delta + 4 * k - 3:
        raise RangeError(f"need n >= 6*delta + 4k - 3, got n={n}")
    radicand = (n * n - (3 * delta - 4 * k + 11) * n
                + Fraction(13 * delta * delta - (32 * k - 94) * delta + 16 * k * k - 104 * k + 161, 4))
    return (delta - 1) / 2 + math.sqrt(radicand)


def min_degree_bound_radicand(n: int, e: int | Fraction, delta: int) -> Fraction:
    """2e - delta*n + (delta+1)^2/4, the radicand of the minimum-degree spectral bound."""
    return 2 * Fraction(e) - delta * n + Fraction((delta + 1) ** 2, 4)


# -- statement hypotheses ----------------------------------------------------


def ktree_order_bound(m: int, k: int) -> Fraction:
    """max{(7k-2)m + 4, (k-1)m^2 + (3k+1)m/2 + 9/2}."""
    return max(Fraction((7 * k - 2) * m + 4), (k - 1) * m * m + Fraction((3 * k + 1) * m, 2) + Fraction(9, 2))


def smallest_ktree_order(m: int, k: int) -> int:
    return math.ceil(ktree_order_bound(m, k))


def smallest_leaf_order(delta: int, k: int) -> int:
    return 3 * (k + 2) * delta + 2


# -- families ----------------------------------------------------------------


def gen3(a: int, b: int, c: int) -> Graph:
    """K_a v (K_b + I_c); empty parts are allowed as long as a+b+c >= 1."""
    if min(a, b, c) < 0 or a + b + c < 1:
        raise GraphError(f"invalid part sizes ({a}, {b}, {c})")
    lower = _union_or_none(complete(b) if b else None, empty(c) if c else None)
    if a == 0:
        return lower
    if lower is None:
        return complete(a)
    return join(complete(a), lower)


def _union_or_none(g1: Graph | None, g2: Graph | None) -> Graph | None:
    if g1 is None:
        return g2
    if g2 is None:
        return g1
    return disjoint_union(g1, g2)


def ex_1f_a(n: int, delta: int) -> Graph:
    """K_{n-delta-1} + K_{delta+1}."""
    if n - delta - 1 < 1 or delta < 0:
        raise GraphError(f"invalid parameters n={n}, delta={delta}")
    return disjoint_union(complete(n - delta - 1), complete(delta + 1))


def ex_1f_b(n: int, delta: int) -> Graph:
    """K_delta v (K_{n-2delta-1} + I_{delta+1})."""
    if n - 2 * delta - 1 < 0 or delta < 0:
        raise GraphError(f"invalid parameters n={n}, delta={delta}")
    return gen3(delta, n - 2 * delta - 1, delta + 1)


def ex_ktree(n: int, m: int, k: int) -> Graph:
    """K_m v (K_{n-km-1} + I_{km-m+1})."""
    if m < 1 or k < 2 or n - k * m - 1 < 0:
        raise GraphError(f"invalid parameters n={n}, m={m}, k={k}")
    return gen3(m, n - k * m - 1, k * m - m + 1)


def ex_leaf(n: int, delta: int, k: int) -> Graph:
    """K_delta v (K_{n-k*delta-2delta} + I_{k*delta+delta})."""
    if delta < 1 or k < 1 or n - k * delta - 2 * delta < 0:
        raise GraphError(f"invalid parameters n={n}, delta={delta}, k={k}")
    return gen3(delta, n - k * delta - 2 * delta, k * delta + delta)


def ex_fan(n: int, k: int) -> Graph:
    """K_1 v (K_{n-k-1} + I_k)."""
    if k < 0 or n - k - 1 < 0:
        raise GraphError(f"invalid parameters n={n}, k={k}")
    return gen3(1, n - k - 1, k)


def joinreg(s: int, b: int, p: int, t: int) -> Graph:
    """K_s v (K_b + R(p, t)) with R the circulant t-regular graph."""
    regular = circulant(p, t) if p else None
    lower = _union_or_none(complete(b) if b else None, regular)
    if lower is None:
        return complete(s)
    return join(complete(s), lower) if s else lower


@dataclass(frozen=True)
class Family:
    name: str
    params: dict
    graph: Graph
    parts: tuple[tuple[str, range], ...] = field(default=())

    def part(self, label: str) -> range:
        for name, span in self.parts:
            if name == label:
                return span
        raise KeyError(label)


def _spans(*sized: tuple[str, int]) -> tuple[tuple[str, range], ...]:
    out, start = [], 0
    for label, size in sized:
        out.append((label, range(start, start + size)))
        start += size
    return tuple(out)


FAMILY_NAMES = ("ex1fa", "ex1fb", "exktree", "exleaf", "exfan", "gen3", "joinreg")


def family(name: str, **params) -> Family:
    """Build a named extremal graph with its part boundaries.

    Names and parameters: ex1fa(n, delta), ex1fb(n, delta), exktree(n, m, k),
    exleaf(n, delta, k), exfan(n, k), gen3(a, b, c), joinreg(s, b, p, t).
    """
    p = params
    if name == "ex1fa":
        g = ex_1f_a(p["n"], p["delta"])
        parts = _spans(("clique", p["n"] - p["delta"] - 1), ("small_clique", p["delta"] + 1))
    elif name == "ex1fb":
        n, d = p["n"], p["delta"]
        g = ex_1f_b(n, d)
        parts = _spans(("hub", d), ("clique", n - 2 * d - 1), ("independent", d + 1))
    elif name == "exktree":
        n, m, k = p["n"], p["m"], p["k"]
        g = ex_ktree(n, m, k)
        parts = _spans(("hub", m), ("clique", n - k * m - 1), ("independent", k * m - m + 1))
    elif name == "exleaf":
        n, d, k = p["n"], p["delta"], p["k"]
        g = ex_leaf(n, d, k)
        parts = _spans(("hub", d), ("clique", n - k * d - 2 * d), ("independent", k * d + d))
    elif name == "exfan":
        n, k = p["n"], p["k"]
        g = ex_fan(n, k)
        parts = _spans(("hub", 1), ("clique", n - k - 1), ("independent", k))
    elif name == "gen3":
        g = gen3(p["a"], p["b"], p["c"])
        parts = _spans(("hub", p["a"]), ("clique", p["b"]), ("independent", p["c"]))
    elif name == "joinreg":
        g = joinreg(p["s"], p["b"], p["p"], p["t"])
        parts = _spans(("hub", p["s"]), ("clique", p["b"]), ("regular", p["p"]))
    else:
        raise ValueError(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
    return Family(name, dict(params), g, parts)


def ex_ktree_edge_count(n: int, m: int, k: int) -> int:
    """binom(n-(k-1)m-1, 2) + (k-1)m^2 + m."""
    return math.comb(n - (k - 1) * m - 1, 2) + (k - 1) * m * m + m
