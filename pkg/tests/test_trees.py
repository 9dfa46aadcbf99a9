from __future__ import annotations

import itertools

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st
from test_graph import to_nx

from spanfactor.extremal import ex_fan, ex_ktree, ex_leaf
from spanfactor.graph import GraphError, complete, cycle, disjoint_union, from_edges, path, petersen, star
from spanfactor.trees import (
    BudgetExceeded,
    TreeCertificate,
    hamilton_path_exists,
    has_spanning_k_tree,
    has_spanning_tree_leaf_deg,
    kaneko_check,
    leaf_degree,
    spanning_tree_min_max_degree,
)


def spanning_trees_by_enumeration(g):
    """Oracle: every (n-1)-edge subset that forms a spanning tree."""
    for edges in itertools.combinations(g.edges(), g.n - 1):
        t = TreeCertificate(g.n, tuple(edges))
        if t.is_spanning_tree_of(g):
            yield t


def test_leaf_degree_of_small_trees():
    assert leaf_degree(TreeCertificate(2, ((0, 1),))) == 1
    assert leaf_degree(TreeCertificate(1, ())) == 0
    assert leaf_degree(TreeCertificate(5, tuple(star(4).edges()))) == 4
    assert leaf_degree(TreeCertificate(5, tuple(path(5).edges()))) == 1


def test_k_tree_examples():
    assert has_spanning_k_tree(path(6), 2) is not None
    assert has_spanning_k_tree(star(3), 2) is None
    assert has_spanning_k_tree(star(3), 3) is not None
    assert has_spanning_k_tree(petersen(), 2) is not None  # has a Hamilton path
    for n, m, k in ((14, 1, 3), (14, 2, 2), (16, 1, 2), (23, 1, 3)):
        assert has_spanning_k_tree(ex_ktree(n, m, k), k) is None
    with pytest.raises(GraphError):
        has_spanning_k_tree(disjoint_union(complete(2), complete(2)), 2)
    with pytest.raises(ValueError):
        has_spanning_k_tree(path(3), 1)


def test_fan_needs_degree_above_k():
    # K_1 v (K_{n-k-1} + I_k): the hub meets k pendant vertices and the clique
    for n, k in ((8, 2), (9, 3), (10, 4)):
        assert has_spanning_k_tree(ex_fan(n, k), k) is None
        assert has_spanning_k_tree(ex_fan(n, k), k + 1) is not None


def test_leaf_examples():
    g = ex_leaf(11, 1, 1)
    assert has_spanning_tree_leaf_deg(g, 1) is None
    cert = kaneko_check(g, 1)
    assert cert is not None and cert.members == [0] and cert.recheck(g)
    assert kaneko_check(complete(6), 3) is None
    assert has_spanning_tree_leaf_deg(star(4), 4) is not None
    assert has_spanning_tree_leaf_deg(star(4), 3) is None


def test_triangle_is_the_small_exception_to_the_subset_criterion():
    # Every spanning tree of K3 is a path whose centre carries both leaves,
    # yet no vertex set isolates 2|S| vertices.
    k3 = complete(3)
    assert has_spanning_tree_leaf_deg(k3, 1) is None
    assert kaneko_check(k3, 1) is None


def test_budget_exhaustion_raises():
    with pytest.raises(BudgetExceeded):
        has_spanning_k_tree(ex_ktree(23, 1, 3).add_edge(20, 21), 3, budget=1)


def test_min_max_degree():
    assert spanning_tree_min_max_degree(cycle(6))[0] == 2
    assert spanning_tree_min_max_degree(star(5))[0] == 5
    assert spanning_tree_min_max_degree(complete(2))[0] == 1


def test_hamilton_path_dp():
    assert hamilton_path_exists(petersen())
    assert not hamilton_path_exists(star(3))
    assert hamilton_path_exists(complete(1))


@given(graphs(min_n=2, max_n=11, connected=True))
def test_two_trees_are_hamilton_paths(g):
    t = has_spanning_k_tree(g, 2)
    assert (t is not None) == hamilton_path_exists(g)
    if t is not None:
        assert t.is_spanning_tree_of(g) and t.max_degree() <= 2


@given(graphs(min_n=2, max_n=7, connected=True), st.integers(2, 4))
def test_k_tree_matches_enumeration(g, k):
    t = has_spanning_k_tree(g, k)
    exists = any(x.max_degree() <= k for x in spanning_trees_by_enumeration(g))
    assert (t is not None) == exists
    if t is not None:
        assert t.is_spanning_tree_of(g) and t.max_degree() <= k


@given(graphs(min_n=2, max_n=7, connected=True), st.integers(1, 3))
def test_leaf_tree_matches_enumeration(g, k):
    t = has_spanning_tree_leaf_deg(g, k)
    exists = any(leaf_degree(x) <= k for x in spanning_trees_by_enumeration(g))
    assert (t is not None) == exists
    if t is not None:
        assert t.is_spanning_tree_of(g) and leaf_degree(t) <= k


@given(graphs(min_n=4, max_n=12, connected=True), st.integers(1, 3))
def test_leaf_tree_matches_subset_criterion_beyond_the_triangle(g, k):
    assert (has_spanning_tree_leaf_deg(g, k) is None) == (kaneko_check(g, k) is not None)


@given(graphs(min_n=2, max_n=9, connected=True))
def test_certificates_are_networkx_trees(g):
    t = has_spanning_k_tree(g, 3)
    if t is not None:
        h = nx.Graph(t.edges)
        h.add_nodes_from(range(g.n))
        assert nx.is_tree(h) and all(to_nx(g).has_edge(u, v) for u, v in t.edges)


def test_k_tree_certificate_for_wheel():
    wheel = from_edges(7, [(0, i) for i in range(1, 7)] + [(i, i % 6 + 1) for i in range(1, 7)])
    t = has_spanning_k_tree(wheel, 2)
    assert t is not None and t.max_degree() <= 2
