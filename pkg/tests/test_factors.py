from __future__ import annotations

import itertools

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st
from test_graph import to_nx

from spanfactor.closure import closure_for_k_factor, closure_for_one_factor
from spanfactor.extremal import ex_1f_a, ex_1f_b
from spanfactor.factors import (
    brute_force_k_factor,
    brute_force_one_factor,
    has_k_factor,
    has_one_factor,
    max_matching,
)
from spanfactor.graph import complete, cycle, from_edges, petersen, star
from spanfactor.verify import enumerate_labeled


def matching_number_by_enumeration(g) -> int:
    """Oracle: largest k such that some k edges are pairwise disjoint."""
    edges = g.edges()
    best = 0
    for k in range(1, g.n // 2 + 1):
        if any(len({x for e in c for x in e}) == 2 * k for c in itertools.combinations(edges, k)):
            best = k
        else:
            break
    return best


def test_matching_sizes_of_named_graphs():
    assert len(max_matching(complete(4))) == 2
    assert len(max_matching(star(3))) == 1
    p = petersen()
    assert len(max_matching(p)) == 5 == matching_number_by_enumeration(p)


@given(graphs(max_n=10))
def test_maximum_matching_size_matches_networkx(g):
    m = max_matching(g)
    assert m.is_valid_for(g)
    assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


@given(graphs(max_n=7))
def test_maximum_matching_size_matches_enumeration(g):
    assert len(max_matching(g)) == matching_number_by_enumeration(g)


def test_one_factor_examples():
    c6 = has_one_factor(cycle(6))
    assert c6 is not None and c6.is_perfect_for(cycle(6))
    for n, d in ((10, 2), (12, 4), (8, 2)):
        assert has_one_factor(ex_1f_a(n, d)) is None
    for n, d in ((8, 1), (10, 2), (12, 3)):
        assert has_one_factor(ex_1f_b(n, d)) is None


def test_k_factor_examples():
    for k in (1, 2, 3, 4):
        cert = has_k_factor(complete(k + 1), k) if (k + 1) * k % 2 == 0 else None
        if cert is not None:
            assert len(cert.edges) == (k + 1) * k // 2
    assert has_k_factor(complete(4), 3) is not None
    assert has_k_factor(cycle(7), 2).edges == tuple(sorted(cycle(7).edges()))
    assert has_k_factor(star(4), 1) is None  # 5 vertices, k = 1: odd product
    with pytest.raises(ValueError):
        has_k_factor(cycle(5), 0)


def test_brute_force_examples():
    assert brute_force_k_factor(complete(4), 2) is not None
    k4_minus_pm = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert brute_force_k_factor(k4_minus_pm, 2) is not None
    assert brute_force_k_factor(star(3), 1) is None
    with pytest.raises(ValueError):
        brute_force_k_factor(complete(8), 2)


@given(graphs(max_n=8), st.integers(1, 4))
def test_gadget_agrees_with_brute_force(g, k):
    fast = has_k_factor(g, k)
    slow = brute_force_k_factor(g, k) if g.edge_count <= 24 else None
    if g.edge_count <= 24:
        assert (fast is None) == (slow is None)
    if fast is not None:
        assert fast.is_valid_for(g)


@given(graphs(max_n=10))
def test_one_factor_agrees_with_brute_force_and_k1_gadget(g):
    m = has_one_factor(g)
    assert (m is None) == (brute_force_one_factor(g) is None)
    assert (m is None) == (has_k_factor(g, 1) is None)
    if m is not None:
        assert m.is_perfect_for(g)


@pytest.mark.parametrize("k", [1, 2])
def test_closure_preserves_factor_existence_on_all_six_vertex_graphs(k):
    closure = closure_for_one_factor if k == 1 else (lambda g: closure_for_k_factor(g, k))
    for g in enumerate_labeled(6):
        assert (has_k_factor(g, k) is None) == (has_k_factor(closure(g), k) is None)
