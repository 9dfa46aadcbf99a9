"""Vectorised kernels over arrays of labeled edge masks (n <= 11).

A labeled graph on n vertices is an integer whose bit ``j(j-1)/2 + i``
records the pair ``(i, j)``, ``i < j`` (the graph6 bit order). These kernels
evaluate invariants for millions of masks at once and back the exhaustive
scans in :mod:`spanfactor.verify`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from .graph import Graph, from_edge_mask, iter_bits

MAX_BATCH_VERTICES = 11  # 55 edge bits fit in uint64


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def edge_bit(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _dtype(n: int):
    return np.uint32 if pair_count(n) <= 32 else np.uint64


@lru_cache(maxsize=None)
def incidence_masks(n: int) -> tuple[int, ...]:
    """Mask of the n-1 pairs incident to each vertex."""
    return tuple(sum(1 << edge_bit(v, u) for u in range(n) if u != v) for v in range(n))


@lru_cache(maxsize=None)
def clique_masks(n: int, r: int) -> tuple[int, ...]:
    return tuple(sum(1 << edge_bit(a, b) for a, b in combinations(c, 2)) for c in combinations(range(n), r))


@lru_cache(maxsize=None)
def perfect_matching_masks(n: int) -> tuple[int, ...]:
    """All perfect matchings of K_n as edge masks ((n-1)!! of them)."""
    out = []

    def build(free: tuple[int, ...], acc: int) -> None:
        if not free:
            out.append(acc)
            return
        v, rest = free[0], free[1:]
        for i, u in enumerate(rest):
            build(rest[:i] + rest[i + 1:], acc | 1 << edge_bit(v, u))

    if n % 2 == 0:
        build(tuple(range(n)), 0)
    return tuple(out)


def mask_range(n: int, start: int, stop: int) -> np.ndarray:
    return np.arange(start, stop, dtype=_dtype(n))


def edge_counts(masks: np.ndarray) -> np.ndarray:
    return np.bitwise_count(masks).astype(np.int16)


def degrees(n: int, masks: np.ndarray) -> np.ndarray:
    """Degree matrix with shape (len(masks), n)."""
    dt = masks.dtype.type
    return np.stack([np.bitwise_count(masks & dt(m)) for m in incidence_masks(n)], axis=1).astype(np.int16)


def min_degrees(n: int, masks: np.ndarray) -> np.ndarray:
    if n == 1:
        return np.zeros(len(masks), dtype=np.int16)
    return degrees(n, masks).min(axis=1)


def row_masks(n: int, masks: np.ndarray) -> np.ndarray:
    """Vertex adjacency rows with shape (len(masks), n) as uint16 bitmasks."""
    rows = np.zeros((len(masks), n), dtype=np.uint16)
    dt = masks.dtype.type
    for j in range(1, n):
        for i in range(j):
            bit = ((masks >> dt(edge_bit(i, j))) & dt(1)).astype(np.uint16)
            rows[:, i] |= bit << np.uint16(j)
            rows[:, j] |= bit << np.uint16(i)
    return rows


def connected(n: int, masks: np.ndarray) -> np.ndarray:
    rows = row_masks(n, masks)
    reach = np.ones(len(masks), dtype=np.uint16)
    for _ in range(n):
        nxt = reach.copy()
        for v in range(n):
            hit = (reach >> np.uint16(v)) & np.uint16(1)
            nxt |= np.where(hit.astype(bool), rows[:, v], np.uint16(0))
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    return reach == np.uint16((1 << n) - 1)


def clique_counts(n: int, masks: np.ndarray, r: int) -> np.ndarray:
    """N_r for every mask by testing all r-subsets of the vertex set."""
    if r == 1:
        return np.full(len(masks), n, dtype=np.int64)
    if r == 2:
        return edge_counts(masks).astype(np.int64)
    dt = masks.dtype.type
    total = np.zeros(len(masks), dtype=np.int64)
    for cm in clique_masks(n, r):
        c = dt(cm)
        total += (masks & c) == c
    return total


def has_perfect_matching(n: int, masks: np.ndarray) -> np.ndarray:
    """Exhaustive test against every perfect matching of K_n.

    Masks are retired as soon as one matching is contained, so dense inputs
    cost far less than (n-1)!! passes.
    """
    found = np.zeros(len(masks), dtype=bool)
    if n % 2 or len(masks) == 0:
        return found
    dt = masks.dtype.type
    pending = np.arange(len(masks))
    for pm in perfect_matching_masks(n):
        c = dt(pm)
        hit = (masks[pending] & c) == c
        found[pending[hit]] = True
        pending = pending[~hit]
        if len(pending) == 0:
            break
    return found


def adjacency_stack(n: int, masks: np.ndarray) -> np.ndarray:
    """Adjacency matrices with shape (len(masks), n, n) as float64."""
    a = np.zeros((len(masks), n, n))
    dt = masks.dtype.type
    for j in range(1, n):
        for i in range(j):
            bit = (masks >> dt(edge_bit(i, j))) & dt(1)
            a[:, i, j] = a[:, j, i] = bit
    return a


def graphs_adjacency_stack(graphs: list[Graph]) -> np.ndarray:
    """Adjacency matrices for same-order Graph objects."""
    n = graphs[0].n
    rows = np.array([g.rows for g in graphs], dtype=np.uint64)
    shifts = np.arange(n, dtype=np.uint64)
    return ((rows[:, :, None] >> shifts) & np.uint64(1)).astype(float)


def graphs_from_masks(n: int, masks: np.ndarray) -> list[Graph]:
    return [from_edge_mask(n, int(m)) for m in masks]


def mask_of(g: Graph) -> int:
    return g.edge_mask()


__all__ = [
    "adjacency_stack", "clique_counts", "connected", "degrees", "edge_counts", "graphs_adjacency_stack",
    "graphs_from_masks", "has_perfect_matching", "incidence_masks", "iter_bits", "mask_range",
    "min_degrees", "perfect_matching_masks", "row_masks",
]
