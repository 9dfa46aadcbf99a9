from __future__ import annotations

import csv
import io
import json
import math

import networkx as nx
import numpy as np
import pytest

from spanfactor.extremal import RangeError, ex_1f_a, ex_1f_b, ex_leaf
from spanfactor.graph import complete, graph6_encode
from spanfactor.verify import (
    CSV_HEADER,
    Exhaustive,
    RandomSample,
    TheoremSpec,
    ThresholdQuery,
    VerificationReport,
    enumerate_labeled,
    labeled_mask_chunks,
    perturbation_suite,
    read_graph6,
    report_emit,
    sample_random,
    verify,
)
from test_graph import to_nx


def spec(sid: str, **params) -> TheoremSpec:
    return TheoremSpec(sid, ThresholdQuery(**params))


# -- enumeration and sampling ----------------------------------------------------


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_labeled(3)) == 8
    connected4 = sum(1 for g in enumerate_labeled(4) if nx.is_connected(to_nx(g)))
    assert connected4 == 38 == sum(1 for _ in enumerate_labeled(4, connected=True))
    # graphs without isolated vertices, by inclusion-exclusion over isolated sets
    expected = sum((-1) ** i * math.comb(6, i) * 2 ** math.comb(6 - i, 2) for i in range(7))
    assert sum(1 for _ in enumerate_labeled(6, min_degree=1)) == expected
    assert list(enumerate_labeled(5, k=1)) == []


def test_enumeration_yields_each_graph_once_in_mask_order():
    masks = np.concatenate(list(labeled_mask_chunks(5, chunk=100)))
    assert masks.tolist() == list(range(1 << 10))
    assert len({g for g in enumerate_labeled(5)}) == 1 << 10


def test_enumeration_limit():
    with pytest.raises(RangeError):
        next(labeled_mask_chunks(9))


def test_random_sampling_is_seeded_and_unbiased():
    a = [g.rows for g in sample_random(9, 0.3, 50, seed=7)]
    b = [g.rows for g in sample_random(9, 0.3, 50, seed=7)]
    assert a == b
    assert all(g == complete(6) for g in sample_random(6, 1.0, 5))
    edges = np.array([g.edge_count for g in sample_random(10, 0.4, 10_000, seed=1)])
    mean, sigma = 45 * 0.4, math.sqrt(45 * 0.4 * 0.6 / 10_000)
    assert abs(edges.mean() - mean) <= 3 * sigma
    with pytest.raises(ValueError):
        next(sample_random(5, 1.5, 1))


# -- statement specs ---------------------------------------------------------------


@pytest.mark.parametrize("sid, params", [
    ("T13i", dict(n=9, r=2, delta=1)),           # n odd
    ("T13i", dict(n=8, r=2, delta=4)),           # delta > n/2 - 1
    ("T13ii", dict(n=8, r=2, k=2, delta=1)),     # delta < 2k - 2
    ("C18i", dict(n=14, delta=1)),               # n < 6 delta + 10
    ("T110", dict(n=15, k=2, m=1)),              # below the order bound
    ("T113", dict(n=10, delta=1, k=1)),          # below 3(k+2)delta + 2
    ("T13i", dict(n=8, delta=1)),                # r missing
    ("NOPE", dict(n=8)),
])
def test_out_of_range_specs_are_rejected(sid, params):
    with pytest.raises(RangeError):
        spec(sid, **params).validate()


def test_valid_specs_pass_validation():
    for s in (spec("T13i", n=8, r=2, delta=1), spec("C18i", n=16, delta=1), spec("T110", n=16, k=2, m=1),
              spec("T113", n=11, delta=1, k=1), spec("EQ-T12", n=6, k=3), spec("FACT21", n=8, r=3, s=2, q=3)):
        s.validate()


# -- verification runs -------------------------------------------------------------


def test_closure_equivalence_six_vertices():
    rep = verify(spec("EQ-T12", n=6, k=1), Exhaustive(6))
    assert rep.passed and rep.scanned == 1 << 15 and rep.conclusion_hits == rep.hypothesis_hits


def test_edge_bound_six_vertices():
    rep = verify(spec("BND-L33", n=6), Exhaustive(6, connected=True))
    assert rep.passed and rep.scanned == 26704


@pytest.mark.parametrize("sid, params", [
    ("T13i", dict(n=6, r=2, delta=1)),
    ("T13i", dict(n=6, r=3, delta=2)),
    ("EQ-T12", dict(n=6, k=2)),
    ("BND-L27", dict(n=6)),
    ("FACT21", dict(n=6, r=3, s=2, q=2)),
    ("EQ-T111", dict(n=6, k=2)),
])
def test_vectorised_scan_matches_graph_by_graph_scan(sid, params):
    s = spec(sid, **params)
    fast = verify(s, Exhaustive(6))
    slow = verify(s, enumerate_labeled(6))
    for key in ("scanned", "hypothesis_hits", "conclusion_hits", "exceptional_hits", "counterexamples"):
        assert getattr(fast, key) == getattr(slow, key), key


def test_exceptional_join_family_is_tallied_not_failed():
    # K_1 v (K_9 + I_2) has N_2 = phi(12, 2, 1) = 38 > max(phi(12,2,2), phi(12,2,5)) and no 1-factor
    g = ex_1f_b(12, 1)
    rep = verify(spec("T13i", n=12, r=2, delta=1), [g])
    assert rep.hypothesis_hits == 1 and rep.exceptional_hits == 1 and rep.passed


def test_disjoint_clique_exception_only_for_even_delta():
    g = ex_1f_a(12, 2)  # K_9 + K_3: 84 triangles, above the r = 3 threshold
    rep = verify(spec("T13i", n=12, r=3, delta=2), [g])
    assert rep.hypothesis_hits == 1 and rep.exceptional_hits == 1
    # with delta odd both cliques have even order, so the shape has a 1-factor
    rep3 = verify(spec("T13i", n=14, r=7, delta=3), [ex_1f_a(14, 3)])
    assert rep3.conclusion_hits == 1 and rep3.exceptional_hits == 0


def test_counterexamples_are_reported_as_graph6():
    # the triangle breaks the subset criterion for k = 1
    rep = verify(spec("EQ-T111", n=3, k=1), Exhaustive(3, connected=True))
    assert rep.counterexamples == ["Bw"] and not rep.passed


def test_budget_exhaustion_is_undecided_not_a_crash():
    g = ex_leaf(11, 1, 1).add_edge(9, 10)
    rep = verify(spec("EQ-T111", n=11, k=1), [g], budget=1)
    assert rep.undecided == [graph6_encode(g)] and rep.passed


def test_random_sample_can_be_vacuous():
    rep = verify(spec("T110", n=16, k=2, m=1), RandomSample(16, 0.3, 50, seed=1))
    assert rep.vacuous and rep.hypothesis_hits == 0 and rep.scanned == 50


def test_reports_are_deterministic_apart_from_wall_time():
    s = spec("T13i", n=8, r=3, delta=1)
    a = verify(s, RandomSample(8, 0.6, 3000, seed=5)).as_dict()
    b = verify(s, RandomSample(8, 0.6, 3000, seed=5)).as_dict()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b and a["hypothesis_hits"] > 0


def test_k_factor_clique_condition_on_random_graphs():
    rep = verify(spec("T13ii", n=8, r=3, k=2, delta=2), RandomSample(8, 0.8, 3000, seed=4))
    assert rep.passed and rep.hypothesis_hits > 0 and rep.exceptional_hits == 0


def test_hypothesis_accounting_invariant():
    rep = verify(spec("C15i", n=16, delta=1), RandomSample(16, 0.85, 2000, seed=2))
    assert rep.scanned >= rep.hypothesis_hits >= rep.conclusion_hits + rep.exceptional_hits
    if rep.passed:
        assert rep.conclusion_hits + rep.exceptional_hits + len(rep.undecided) == rep.hypothesis_hits


def test_graph6_stream_and_order_mismatch():
    lines = ["C~", "", "Cr\n"]
    assert len(list(read_graph6(lines))) == 2
    with pytest.raises(RangeError):
        verify(spec("BND-L27", n=5), read_graph6(lines))


# -- reports ---------------------------------------------------------------------


def test_report_emit_json_and_csv():
    empty = VerificationReport(spec("BND-L27", n=5))
    d = json.loads(report_emit(empty, "json"))
    assert d["scanned"] == 0 and d["counterexamples"] == [] and d["vacuous"] is True
    assert list(d) == ["theorem", "params", "source", "scanned", "hypothesis_hits", "conclusion_hits",
                       "exceptional_hits", "vacuous", "counterexamples", "undecided", "wall_time"]
    text = report_emit(empty, "csv").decode()
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_HEADER and len(rows) == 2
    with pytest.raises(ValueError):
        report_emit(empty, "xml")


def test_report_round_trip_through_json():
    rep = verify(spec("EQ-T111", n=3, k=1), Exhaustive(3, connected=True))
    d = json.loads(report_emit(rep))
    assert d["counterexamples"] == ["Bw"] and d["params"] == {"n": 3, "k": 1}
    assert json.loads(json.dumps(d)) == d


# -- perturbations ----------------------------------------------------------------


@pytest.mark.parametrize("name, params", [
    ("exktree", {"n": 14, "m": 1, "k": 3}),
    ("exleaf", {"n": 11, "delta": 1, "k": 1}),
    ("ex1fb", {"n": 10, "delta": 2}),
    ("exfan", {"n": 9, "k": 3}),
])
def test_perturbation_suites_pass(name, params):
    rep = perturbation_suite(name, params)
    g_edges = rep.scanned - 1
    assert rep.passed and rep.exceptional_hits == 1 and not rep.undecided
    assert g_edges > 0


def test_disjoint_union_deletions_keep_rho():
    # deleting an edge of the smaller clique leaves the larger clique's rho unchanged
    rep = perturbation_suite("ex1fa", {"n": 10, "delta": 2})
    assert len(rep.counterexamples) == 3
