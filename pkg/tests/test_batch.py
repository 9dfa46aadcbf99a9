from __future__ import annotations

import math

import numpy as np
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st

from spanfactor import batch
from spanfactor.factors import has_one_factor
from spanfactor.graph import from_edge_mask
from spanfactor.spectral import count_cliques


def test_perfect_matching_table_sizes():
    for n in (2, 4, 6, 8):
        assert len(batch.perfect_matching_masks(n)) == math.prod(range(n - 1, 0, -2))
    assert batch.perfect_matching_masks(5) == ()


@given(st.integers(2, 8), st.lists(st.integers(0, 2**28 - 1), min_size=1, max_size=40))
def test_mask_kernels_match_graph_methods(n, raw):
    top = 1 << batch.pair_count(n)
    masks = np.array([m % top for m in raw], dtype=np.uint64 if n > 8 else np.uint32)
    gs = [from_edge_mask(n, int(m)) for m in masks]
    assert batch.edge_counts(masks).tolist() == [g.edge_count for g in gs]
    assert batch.degrees(n, masks).tolist() == [g.degrees() for g in gs]
    assert batch.connected(n, masks).tolist() == [g.is_connected() for g in gs]
    assert batch.has_perfect_matching(n, masks).tolist() == [has_one_factor(g) is not None for g in gs]
    for r in (1, 2, 3, 4):
        assert batch.clique_counts(n, masks, r).tolist() == [count_cliques(g, r) for g in gs]
    assert np.array_equal(batch.adjacency_stack(n, masks), np.stack([g.adjacency_matrix() for g in gs]))
    assert np.array_equal(batch.graphs_adjacency_stack(gs), batch.adjacency_stack(n, masks))


@given(graphs(min_n=2, max_n=11))
def test_row_masks_and_mask_of(g):
    masks = np.array([batch.mask_of(g)], dtype=np.uint64)
    assert batch.row_masks(g.n, masks)[0].tolist() == list(g.rows)
    assert batch.graphs_from_masks(g.n, masks)[0] == g
