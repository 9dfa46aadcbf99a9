from __future__ import annotations

import random

from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st

from spanfactor.closure import (
    closure_for_k_factor,
    closure_for_one_factor,
    closure_for_spanning_k_tree,
    is_closed,
    l_closure,
)
from spanfactor.extremal import ex_1f_b, ex_ktree
from spanfactor.graph import Graph, complete, cycle, from_edges, path


def closure_by_definition(g: Graph, l: int, rng: random.Random | None = None) -> Graph:
    """Oracle: rescan all pairs, join any qualifying one (random choice if rng), repeat."""
    while True:
        deg = g.degrees()
        pairs = [(u, v) for u, v in g.non_edges() if deg[u] + deg[v] >= l]
        if not pairs:
            return g
        u, v = rng.choice(pairs) if rng else pairs[0]
        g = g.add_edge(u, v)


def test_path_p4_with_index_3_becomes_complete():
    assert l_closure(path(4), 3) == complete(4)


def test_complete_and_unreachable_indices_are_fixed_points():
    assert l_closure(complete(5), 0) == complete(5)
    g = path(5)
    assert l_closure(g, 2 * g.n) is g


def test_one_factor_closure_examples():
    assert closure_for_one_factor(cycle(4)) == complete(4)
    assert closure_for_one_factor(complete(2)) == complete(2)
    for n, d in ((8, 1), (10, 2), (12, 3)):
        g = ex_1f_b(n, d)
        assert closure_for_one_factor(g) == g


def test_k_factor_closure_examples():
    assert closure_for_k_factor(cycle(5), 2) == cycle(5)
    assert closure_for_k_factor(complete(6), 2) == complete(6)
    p4 = path(4)
    assert closure_for_k_factor(p4, 2) == closure_by_definition(p4, 4)


def test_k_tree_closure_indices_and_extremal_fixed_points():
    g = path(6)
    assert closure_for_spanning_k_tree(g, 2, 1) == l_closure(g, g.n - 1)
    for n, m, k in ((16, 1, 2), (23, 1, 3), (16, 2, 2), (14, 1, 3)):
        h = ex_ktree(n, m, k)
        assert closure_for_spanning_k_tree(h, k, m) == h
    assert closure_for_spanning_k_tree(complete(7), 3, 2) == complete(7)


@given(graphs(max_n=9), st.integers(0, 17))
def test_closure_matches_definition(g, l):
    assert l_closure(g, l) == closure_by_definition(g, l)


@given(graphs(max_n=9), st.integers(0, 17), st.integers(0, 10**6))
def test_closure_is_order_independent(g, l, seed):
    assert l_closure(g, l) == closure_by_definition(g, l, random.Random(seed))


@given(graphs(max_n=9), st.integers(0, 17))
def test_closure_is_monotone_idempotent_and_certified(g, l):
    c = l_closure(g, l)
    assert g.is_subgraph_of(c)
    assert l_closure(c, l) == c
    assert is_closed(c, l)
    deg = c.degrees()
    assert all(deg[u] + deg[v] <= l - 1 for u, v in c.non_edges())


@given(graphs(max_n=9), st.integers(0, 17), st.integers(0, 17))
def test_closure_is_antimonotone_in_index(g, l1, l2):
    lo, hi = min(l1, l2), max(l1, l2)
    assert l_closure(g, hi).is_subgraph_of(l_closure(g, lo))


def test_closure_of_graph_with_no_qualifying_pair_is_same_object():
    g = from_edges(4, [(0, 1)])
    assert l_closure(g, 3) is g
