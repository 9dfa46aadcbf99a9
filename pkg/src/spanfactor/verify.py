"""Executable statements: scan graph streams and tally hypothesis vs conclusion.

Each statement id pairs a hypothesis (a cheap test on G) with a conclusion
decided exactly (matching, k-factor gadget, tree search, subset scan). A
graph that meets the hypothesis is tallied as a conclusion hit, an
exceptional hit (isomorphic to the named extremal graph), a counterexample,
or undecided (a decider ran out of budget).

Exhaustive sources work on packed edge masks: hypotheses and some
conclusions are evaluated for a whole chunk in numpy (see
:mod:`spanfactor.batch`), and only the remaining masks are turned into
:class:`Graph` objects.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field, fields
from typing import Callable, Iterable, Iterator

import numpy as np

from . import batch
from .closure import closure_for_k_factor, closure_for_one_factor, closure_for_spanning_k_tree
from .extremal import (
    RangeError,
    clique_threshold_1f,
    clique_threshold_kf,
    ex_1f_a,
    ex_1f_b,
    ex_ktree,
    ex_leaf,
    family,
    ktree_order_bound,
    phi,
    psi,
    smallest_leaf_order,
    spectral_threshold_1f,
    spectral_threshold_kf,
)
from .factors import GADGET_EDGE_LIMIT, has_k_factor, has_one_factor
from .graph import Graph, from_edge_mask, graph6_decode, graph6_encode, is_isomorphic, vertex_connectivity
from .spectral import (
    count_cliques,
    hong_bound,
    hong_shu_fang_bound,
    posa_clique_bound,
    posa_property,
    quotient_rho,
    spectral_radius,
    spectral_radius_batch,
)
from .trees import (
    DEFAULT_BUDGET,
    K_TREE_VERTEX_LIMIT,
    KANEKO_VERTEX_LIMIT,
    LEAF_TREE_VERTEX_LIMIT,
    BudgetExceeded,
    has_spanning_k_tree,
    has_spanning_tree_leaf_deg,
    kaneko_check,
)

EXHAUSTIVE_MAX_VERTICES = 8
SPECTRAL_TIE = 1e-9     # spectral hypotheses also admit graphs this close below the threshold
BOUND_MARGIN = 1e-9     # bound - rho must be >= -BOUND_MARGIN
PERTURB_MARGIN = 1e-8   # perturbations must move rho by more than this
CHUNK = 1 << 20
GRAPH_CHUNK = 4096

THEOREM_IDS = (
    "T13i", "T13ii", "C15i", "C15ii", "C18i", "C18ii", "T110", "T113",
    "EQ-T12", "EQ-T19", "EQ-T111", "BND-L27", "BND-L33", "FACT21",
)

# Which ThresholdQuery fields each statement reads.
_REQUIRED = {
    "T13i": ("n", "r", "delta"),
    "T13ii": ("n", "r", "k", "delta"),
    "C15i": ("n", "delta"),
    "C15ii": ("n", "k", "delta"),
    "C18i": ("n", "delta"),
    "C18ii": ("n", "k", "delta"),
    "T110": ("n", "m", "k"),
    "T113": ("n", "delta", "k"),
    "EQ-T12": ("n", "k"),
    "EQ-T19": ("n", "m", "k"),
    "EQ-T111": ("n", "k"),
    "BND-L27": ("n",),
    "BND-L33": ("n",),
    "FACT21": ("n", "s", "q", "r"),
}


@dataclass(frozen=True)
class ThresholdQuery:
    """Integer parameters shared by the threshold formulas and statements."""

    n: int
    r: int | None = None
    k: int | None = None
    m: int | None = None
    delta: int | None = None
    q: int | None = None
    s: int | None = None

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self) if getattr(self, f.name) is not None}


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    params: ThresholdQuery
    corrected: bool = False  # C18i only: use the re-derived radicand constant

    def validate(self) -> None:
        """Raise RangeError unless the parameters lie in the statement's range."""
        if self.id not in THEOREM_IDS:
            raise RangeError(f"unknown statement {self.id!r}; expected one of {', '.join(THEOREM_IDS)}")
        p = self.params
        missing = [name for name in _REQUIRED[self.id] if getattr(p, name) is None]
        if missing:
            raise RangeError(f"{self.id} needs parameters: {', '.join(missing)}")
        if not 1 <= p.n <= 64:
            raise RangeError(f"n must lie in 1..64, got {p.n}")
        _RANGE_CHECKS[self.id](p)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise RangeError(message)


def _check_t13i(p: ThresholdQuery) -> None:
    _need(p.r >= 2, "need r >= 2")
    _need(p.n % 2 == 0, "need n even")
    _need(1 <= p.delta <= p.n // 2 - 1, "need 1 <= delta <= n/2 - 1")


def _check_t13ii(p: ThresholdQuery) -> None:
    _need(p.r >= 2 and p.k >= 2, "need r >= 2 and k >= 2")
    _need(p.n * p.k % 2 == 0, "need nk even")
    _need(2 * p.k - 2 <= p.delta <= (p.n + 2 * p.k - 5) // 2, "need 2k-2 <= delta <= floor((n+2k-5)/2)")
    _need(p.n >= 2 * p.delta + p.k + 1, "need n >= 2*delta + k + 1")
    _need(p.n * (p.n - 1) // 2 <= GADGET_EDGE_LIMIT, f"k-factor decider is capped at {GADGET_EDGE_LIMIT} edges")


def _check_c15i(p: ThresholdQuery) -> None:
    _check_t13i(ThresholdQuery(p.n, 2, delta=p.delta))
    _need(p.n >= 6 * p.delta + 10, "need n >= 6*delta + 10")


def _check_c15ii(p: ThresholdQuery) -> None:
    _check_t13ii(ThresholdQuery(p.n, 2, p.k, delta=p.delta))
    _need(p.n >= 6 * p.delta + 4 * p.k - 3, "need n >= 6*delta + 4k - 3")


def _check_t110(p: ThresholdQuery) -> None:
    _need(p.m >= 1 and p.k >= 2, "need m >= 1 and k >= 2")
    _need(p.n >= ktree_order_bound(p.m, p.k), f"need n >= {float(ktree_order_bound(p.m, p.k)):g}")
    _need(p.n <= K_TREE_VERTEX_LIMIT, f"exact k-tree search is limited to n <= {K_TREE_VERTEX_LIMIT}")


def _check_t113(p: ThresholdQuery) -> None:
    _need(p.delta >= 1 and p.k >= 1, "need delta >= 1 and k >= 1")
    _need(p.n >= smallest_leaf_order(p.delta, p.k), f"need n >= 3(k+2)delta + 2 = {smallest_leaf_order(p.delta, p.k)}")
    _need(p.n <= KANEKO_VERTEX_LIMIT, f"exact leaf-degree decision is limited to n <= {KANEKO_VERTEX_LIMIT}")


def _check_eq_t12(p: ThresholdQuery) -> None:
    _need(1 <= p.k < p.n, "need 1 <= k < n")
    _need(p.n * (p.n - 1) // 2 <= GADGET_EDGE_LIMIT, f"k-factor decider is capped at {GADGET_EDGE_LIMIT} edges")


def _check_eq_t19(p: ThresholdQuery) -> None:
    _need(p.m >= 1 and p.k >= 2, "need m >= 1 and k >= 2")
    _need(p.n >= p.k + 1, "need n >= k + 1")
    _need(p.n <= K_TREE_VERTEX_LIMIT, f"exact k-tree search is limited to n <= {K_TREE_VERTEX_LIMIT}")


def _check_eq_t111(p: ThresholdQuery) -> None:
    _need(p.k >= 1, "need k >= 1")
    _need(p.n >= 3, "need n >= 3 (2-vertex trees have no agreed leaf degree)")
    _need(p.n <= LEAF_TREE_VERTEX_LIMIT, f"exact leaf-degree search is limited to n <= {LEAF_TREE_VERTEX_LIMIT}")


def _check_fact21(p: ThresholdQuery) -> None:
    _need(p.s >= 1 and p.q >= 0 and p.r >= 1, "need s >= 1, q >= 0, r >= 1")
    _need(p.n >= p.s + p.q, "need n >= s + q")


_RANGE_CHECKS: dict[str, Callable[[ThresholdQuery], None]] = {
    "T13i": _check_t13i,
    "T13ii": _check_t13ii,
    "C15i": _check_c15i,
    "C15ii": _check_c15ii,
    "C18i": _check_c15i,
    "C18ii": _check_c15ii,
    "T110": _check_t110,
    "T113": _check_t113,
    "EQ-T12": _check_eq_t12,
    "EQ-T19": _check_eq_t19,
    "EQ-T111": _check_eq_t111,
    "BND-L27": lambda p: None,
    "BND-L33": lambda p: None,
    "FACT21": _check_fact21,
}


# -- reports -------------------------------------------------------------------


@dataclass
class VerificationReport:
    spec: TheoremSpec
    source: str = ""
    scanned: int = 0
    hypothesis_hits: int = 0
    conclusion_hits: int = 0
    exceptional_hits: int = 0
    counterexamples: list[str] = field(default_factory=list)
    undecided: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def vacuous(self) -> bool:
        """True when no scanned graph met the hypothesis: nothing was tested."""
        return self.hypothesis_hits == 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def merge(self, other: VerificationReport) -> VerificationReport:
        self.scanned += other.scanned
        self.hypothesis_hits += other.hypothesis_hits
        self.conclusion_hits += other.conclusion_hits
        self.exceptional_hits += other.exceptional_hits
        self.counterexamples.extend(other.counterexamples)
        self.undecided.extend(other.undecided)
        self.wall_time += other.wall_time
        return self

    def as_dict(self) -> dict:
        return {
            "theorem": self.spec.id,
            "params": self.spec.params.as_dict(),
            "source": self.source,
            "scanned": self.scanned,
            "hypothesis_hits": self.hypothesis_hits,
            "conclusion_hits": self.conclusion_hits,
            "exceptional_hits": self.exceptional_hits,
            "vacuous": self.vacuous,
            "counterexamples": sorted(self.counterexamples),
            "undecided": sorted(self.undecided),
            "wall_time": float(f"{self.wall_time:.12g}"),
        }


CSV_HEADER = ("theorem", "params", "source", "scanned", "hypothesis_hits", "conclusion_hits",
              "exceptional_hits", "vacuous", "counterexamples", "undecided", "wall_time")


def report_emit(report: VerificationReport, fmt: str = "json") -> bytes:
    """Serialise a report with a fixed field order (json or csv)."""
    d = report.as_dict()
    if fmt == "json":
        return (json.dumps(d) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        row = dict(d)
        row["params"] = ";".join(f"{k}={v}" for k, v in d["params"].items())
        row["counterexamples"] = " ".join(d["counterexamples"])
        row["undecided"] = " ".join(d["undecided"])
        row["vacuous"] = str(d["vacuous"]).lower()
        row["wall_time"] = f"{report.wall_time:.12g}"
        writer.writerow([row[key] for key in CSV_HEADER])
        return buf.getvalue().encode()
    raise ValueError(f"unknown report format {fmt!r}")


# -- graph sources ---------------------------------------------------------------


@dataclass(frozen=True)
class Exhaustive:
    """Every labeled graph on n vertices passing the filters, in edge-mask order."""

    n: int
    connected: bool = False
    min_degree: int = 0
    k: int | None = None  # keep only n*k even (all or nothing)

    def describe(self) -> str:
        extras = []
        if self.connected:
            extras.append("connected")
        if self.min_degree:
            extras.append(f"min_degree>={self.min_degree}")
        if self.k is not None:
            extras.append(f"nk_even(k={self.k})")
        return "exhaustive:n=" + str(self.n) + ("" if not extras else ":" + ",".join(extras))


@dataclass(frozen=True)
class RandomSample:
    n: int
    p: float
    count: int
    seed: int = 0

    def describe(self) -> str:
        return f"random:{self.count}:{self.p:g}:seed={self.seed}"


def labeled_mask_chunks(n: int, connected: bool = False, min_degree: int = 0, k: int | None = None,
                        chunk: int = CHUNK) -> Iterator[np.ndarray]:
    """Filtered edge-mask arrays covering all labeled graphs on n vertices."""
    if not 1 <= n <= EXHAUSTIVE_MAX_VERTICES:
        raise RangeError(f"exhaustive enumeration is limited to 1 <= n <= {EXHAUSTIVE_MAX_VERTICES}, got {n}")
    if k is not None and n * k % 2:
        return
    total = 1 << batch.pair_count(n)
    for start in range(0, total, chunk):
        masks = batch.mask_range(n, start, min(total, start + chunk))
        if min_degree > 0:
            masks = masks[batch.min_degrees(n, masks) >= min_degree]
        if connected:
            masks = masks[batch.connected(n, masks)]
        if len(masks):
            yield masks


def enumerate_labeled(n: int, connected: bool = False, min_degree: int = 0, k: int | None = None) -> Iterator[Graph]:
    """Yield each labeled graph on n <= 8 vertices passing the filters exactly once."""
    for masks in labeled_mask_chunks(n, connected, min_degree, k):
        for m in masks.tolist():
            yield from_edge_mask(n, m)


def sample_random(n: int, p: float, count: int, seed: int = 0) -> Iterator[Graph]:
    """Seeded G(n, p) graphs: every pair is an edge independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    pairs = batch.pair_count(n)
    done = 0
    while done < count:
        size = min(GRAPH_CHUNK, count - done)
        bits = rng.random((size, pairs)) < p
        packed = np.packbits(bits, axis=1, bitorder="little")
        for row in packed:
            yield from_edge_mask(n, int.from_bytes(row.tobytes(), "little"))
        done += size


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


# -- statement checkers -------------------------------------------------------


class _Checker:
    """Hypothesis and conclusion of one statement.

    ``conclusion`` returns "ok", "exceptional" or "fail". The ``mask_*``
    hooks are optional vectorised versions for exhaustive scans: a
    prefilter may only drop graphs that fail the hypothesis, a mask
    hypothesis must be exact, and a mask conclusion marks graphs whose
    conclusion certainly holds.
    """

    needs_rho = False

    def __init__(self, p: ThresholdQuery, budget: int, corrected: bool = False):
        self.p = p
        self.budget = budget
        self.corrected = corrected
        self._memo: dict[Graph, bool] = {}

    def memo(self, key: Graph, fn: Callable[[], bool]) -> bool:
        hit = self._memo.get(key)
        if hit is None:
            if len(self._memo) > 1 << 20:
                self._memo.clear()
            hit = self._memo[key] = fn()
        return hit

    def hypothesis(self, g: Graph, rho: float | None) -> bool:
        raise NotImplementedError

    def conclusion(self, g: Graph, rho: float | None) -> str:
        raise NotImplementedError

    def mask_prefilter(self, n: int, masks: np.ndarray) -> np.ndarray | None:
        return None

    def mask_hypothesis(self, n: int, masks: np.ndarray, rho: np.ndarray | None) -> np.ndarray | None:
        return None

    def mask_conclusion(self, n: int, masks: np.ndarray, rho: np.ndarray | None) -> np.ndarray | None:
        return None


def _min_degree_at_least(n: int, masks: np.ndarray, delta: int) -> np.ndarray:
    return batch.min_degrees(n, masks) >= delta


class _OneFactorChecker(_Checker):
    """Shared conclusion: a 1-factor, unless C_{n-1}(G) is one of the two exceptional graphs."""

    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        n, d = p.n, p.delta
        self.exceptions = [ex_1f_b(n, d)]
        if d % 2 == 0:
            self.exceptions.insert(0, ex_1f_a(n, d))

    def conclusion(self, g: Graph, rho: float | None) -> str:
        if has_one_factor(g) is not None:
            return "ok"
        c = closure_for_one_factor(g)
        for ex in self.exceptions:
            if c.edge_count == ex.edge_count and is_isomorphic(c, ex):
                return "exceptional"
        return "fail"

    def mask_prefilter(self, n, masks):
        return _min_degree_at_least(n, masks, self.p.delta)

    def mask_conclusion(self, n, masks, rho):
        if n > 10:
            return None
        return batch.has_perfect_matching(n, masks)


class _CliqueOneFactor(_OneFactorChecker):
    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        self.threshold = clique_threshold_1f(p.n, p.r, p.delta)

    def hypothesis(self, g, rho):
        return g.min_degree >= self.p.delta and count_cliques(g, self.p.r) > self.threshold

    def mask_hypothesis(self, n, masks, rho):
        return batch.clique_counts(n, masks, self.p.r) > self.threshold


class _EdgeOneFactor(_OneFactorChecker):
    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        self.threshold = phi(p.n, 2, p.delta + 1)

    def hypothesis(self, g, rho):
        return g.min_degree >= self.p.delta and g.edge_count > self.threshold

    def mask_hypothesis(self, n, masks, rho):
        return batch.edge_counts(masks) > self.threshold


class _SpectralOneFactor(_OneFactorChecker):
    needs_rho = True

    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        self.threshold = spectral_threshold_1f(p.n, p.delta, corrected)

    def hypothesis(self, g, rho):
        return g.min_degree >= self.p.delta and rho > self.threshold - SPECTRAL_TIE

    def mask_hypothesis(self, n, masks, rho):
        return rho > self.threshold - SPECTRAL_TIE


class _KFactorChecker(_Checker):
    def conclusion(self, g, rho):
        return "ok" if has_k_factor(g, self.p.k) is not None else "fail"

    def mask_prefilter(self, n, masks):
        return _min_degree_at_least(n, masks, self.p.delta)


class _CliqueKFactor(_KFactorChecker):
    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        self.threshold = clique_threshold_kf(p.n, p.r, p.k, p.delta)

    def hypothesis(self, g, rho):
        return g.min_degree >= self.p.delta and count_cliques(g, self.p.r) > self.threshold

    def mask_hypothesis(self, n, masks, rho):
        return batch.clique_counts(n, masks, self.p.r) > self.threshold


class _EdgeKFactor(_KFactorChecker):
    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        self.threshold = psi(p.n, 2, p.k, p.delta + 1)

    def hypothesis(self, g, rho):
        return g.min_degree >= self.p.delta and g.edge_count > self.threshold

    def mask_hypothesis(self, n, masks, rho):
        return batch.edge_counts(masks) > self.threshold


class _SpectralKFactor(_KFactorChecker):
    needs_rho = True

    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        self.threshold = spectral_threshold_kf(p.n, p.k, p.delta)

    def hypothesis(self, g, rho):
        return g.min_degree >= self.p.delta and rho > self.threshold - SPECTRAL_TIE

    def mask_hypothesis(self, n, masks, rho):
        return rho > self.threshold - SPECTRAL_TIE


class _KTreeSpectral(_Checker):
    needs_rho = True

    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        n, m, k = p.n, p.m, p.k
        self.extremal = ex_ktree(n, m, k)
        self.rho_ext = quotient_rho(m, n - k * m - 1, k * m - m + 1).rho

    def hypothesis(self, g, rho):
        if rho < self.rho_ext - SPECTRAL_TIE or not g.is_connected():
            return False
        return self.p.m == 1 or vertex_connectivity(g) >= self.p.m

    def conclusion(self, g, rho):
        if has_spanning_k_tree(g, self.p.k, self.budget) is not None:
            return "ok"
        if g.edge_count == self.extremal.edge_count and is_isomorphic(g, self.extremal):
            return "exceptional"
        return "fail"

    def mask_prefilter(self, n, masks):
        return batch.connected(n, masks)


class _LeafSpectral(_Checker):
    needs_rho = True

    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        n, d, k = p.n, p.delta, p.k
        self.extremal = ex_leaf(n, d, k)
        self.rho_ext = quotient_rho(d, n - k * d - 2 * d, k * d + d).rho

    def hypothesis(self, g, rho):
        return g.min_degree == self.p.delta and rho >= self.rho_ext - SPECTRAL_TIE and g.is_connected()

    def conclusion(self, g, rho):
        if _has_leaf_tree(g, self.p.k, self.budget):
            return "ok"
        if g.edge_count == self.extremal.edge_count and is_isomorphic(g, self.extremal):
            return "exceptional"
        return "fail"

    def mask_prefilter(self, n, masks):
        return (batch.min_degrees(n, masks) == self.p.delta) & batch.connected(n, masks)


def _has_leaf_tree(g: Graph, k: int, budget: int) -> bool:
    """Leaf-degree decision: tree search up to its vertex limit, the subset criterion beyond."""
    if g.n <= LEAF_TREE_VERTEX_LIMIT:
        return has_spanning_tree_leaf_deg(g, k, budget) is not None
    return kaneko_check(g, k) is None


class _ClosureFactor(_Checker):
    """k-factor existence is the same for G and its (n-1 or n+2k-4)-closure."""

    def _decide(self, g: Graph) -> bool:
        if self.p.k == 1:
            return has_one_factor(g) is not None
        return has_k_factor(g, self.p.k) is not None

    def hypothesis(self, g, rho):
        return g.n * self.p.k % 2 == 0

    def conclusion(self, g, rho):
        k = self.p.k
        c = closure_for_one_factor(g) if k == 1 else closure_for_k_factor(g, k)
        here = self._decide(g)
        there = self.memo(c, lambda: self._decide(c))
        return "ok" if here == there else "fail"

    def mask_hypothesis(self, n, masks, rho):
        return np.full(len(masks), n * self.p.k % 2 == 0)


class _ClosureKTree(_Checker):
    """With connectivity >= m, spanning k-tree existence is the same for G and C_{n-(k-2)m-1}(G)."""

    def hypothesis(self, g, rho):
        if not g.is_connected():
            return False
        return self.p.m == 1 or vertex_connectivity(g) >= self.p.m

    def conclusion(self, g, rho):
        k, m = self.p.k, self.p.m
        c = closure_for_spanning_k_tree(g, k, m)
        here = has_spanning_k_tree(g, k, self.budget) is not None
        there = self.memo(c, lambda: has_spanning_k_tree(c, k, self.budget) is not None)
        return "ok" if here == there else "fail"

    def mask_prefilter(self, n, masks):
        return batch.connected(n, masks)

    def mask_hypothesis(self, n, masks, rho):
        return np.ones(len(masks), dtype=bool) if self.p.m == 1 else None


class _SubsetCriterion(_Checker):
    """A leaf-degree-<=k spanning tree exists iff every nonempty S has i(G-S) < (k+1)|S|."""

    def hypothesis(self, g, rho):
        return g.n >= 3 and g.is_connected()

    def conclusion(self, g, rho):
        criterion = kaneko_check(g, self.p.k) is None
        tree = has_spanning_tree_leaf_deg(g, self.p.k, self.budget) is not None
        return "ok" if criterion == tree else "fail"

    def mask_prefilter(self, n, masks):
        return batch.connected(n, masks)

    def mask_hypothesis(self, n, masks, rho):
        return np.full(len(masks), n >= 3)


class _MinDegreeBound(_Checker):
    needs_rho = True

    def hypothesis(self, g, rho):
        return True

    def conclusion(self, g, rho):
        return "ok" if hong_shu_fang_bound(g) - rho >= -BOUND_MARGIN else "fail"

    def mask_hypothesis(self, n, masks, rho):
        return np.ones(len(masks), dtype=bool)

    def mask_conclusion(self, n, masks, rho):
        e = batch.edge_counts(masks).astype(float)
        d = batch.min_degrees(n, masks).astype(float)
        bound = (d - 1) / 2 + np.sqrt(2 * e - d * n + (d + 1) ** 2 / 4)
        return bound - rho >= -BOUND_MARGIN


class _EdgeBound(_Checker):
    needs_rho = True

    def hypothesis(self, g, rho):
        return g.is_connected()

    def conclusion(self, g, rho):
        return "ok" if hong_bound(g) - rho >= -BOUND_MARGIN else "fail"

    def mask_prefilter(self, n, masks):
        return batch.connected(n, masks)

    def mask_hypothesis(self, n, masks, rho):
        return np.ones(len(masks), dtype=bool)

    def mask_conclusion(self, n, masks, rho):
        e = batch.edge_counts(masks).astype(float)
        return np.sqrt(2 * e - n + 1) - rho >= -BOUND_MARGIN


class _PosaBound(_Checker):
    def __init__(self, p, budget, corrected=False):
        super().__init__(p, budget, corrected)
        self.bound = posa_clique_bound(p.n, p.s, p.q, p.r)

    def hypothesis(self, g, rho):
        return posa_property(g, self.p.s, self.p.q)

    def conclusion(self, g, rho):
        return "ok" if count_cliques(g, self.p.r) <= self.bound else "fail"

    def mask_hypothesis(self, n, masks, rho):
        return (batch.degrees(n, masks) <= self.p.q).sum(axis=1) >= self.p.s

    def mask_conclusion(self, n, masks, rho):
        return batch.clique_counts(n, masks, self.p.r) <= self.bound


_CHECKERS: dict[str, type[_Checker]] = {
    "T13i": _CliqueOneFactor,
    "T13ii": _CliqueKFactor,
    "C15i": _EdgeOneFactor,
    "C15ii": _EdgeKFactor,
    "C18i": _SpectralOneFactor,
    "C18ii": _SpectralKFactor,
    "T110": _KTreeSpectral,
    "T113": _LeafSpectral,
    "EQ-T12": _ClosureFactor,
    "EQ-T19": _ClosureKTree,
    "EQ-T111": _SubsetCriterion,
    "BND-L27": _MinDegreeBound,
    "BND-L33": _EdgeBound,
    "FACT21": _PosaBound,
}


# -- driver --------------------------------------------------------------------


def _tally(report: VerificationReport, g: Graph, outcome: str) -> None:
    if outcome == "ok":
        report.conclusion_hits += 1
    elif outcome == "exceptional":
        report.exceptional_hits += 1
    else:
        report.counterexamples.append(graph6_encode(g))


def _conclude(checker: _Checker, report: VerificationReport, g: Graph, rho: float | None) -> None:
    try:
        outcome = checker.conclusion(g, rho)
    except BudgetExceeded:
        report.undecided.append(graph6_encode(g))
        return
    _tally(report, g, outcome)


def _scan_masks(checker: _Checker, report: VerificationReport, n: int, masks: np.ndarray) -> None:
    report.scanned += len(masks)
    keep = checker.mask_prefilter(n, masks)
    if keep is not None:
        masks = masks[keep]
    if not len(masks):
        return
    rho = spectral_radius_batch(batch.adjacency_stack(n, masks)) if checker.needs_rho else None
    hyp = checker.mask_hypothesis(n, masks, rho)
    if hyp is None:
        for i, m in enumerate(masks.tolist()):
            g = from_edge_mask(n, m)
            r = None if rho is None else float(rho[i])
            if checker.hypothesis(g, r):
                report.hypothesis_hits += 1
                _conclude(checker, report, g, r)
        return
    masks = masks[hyp]
    rho = None if rho is None else rho[hyp]
    report.hypothesis_hits += len(masks)
    done = checker.mask_conclusion(n, masks, rho)
    if done is not None:
        report.conclusion_hits += int(done.sum())
        masks = masks[~done]
        rho = None if rho is None else rho[~done]
    for i, m in enumerate(masks.tolist()):
        _conclude(checker, report, from_edge_mask(n, m), None if rho is None else float(rho[i]))


def _scan_graphs(checker: _Checker, report: VerificationReport, n: int, graphs: list[Graph]) -> None:
    for g in graphs:
        if g.n != n:
            raise RangeError(f"graph of order {g.n} in a stream for n={n}")
    report.scanned += len(graphs)
    rho = None
    if checker.needs_rho and graphs:
        rho = spectral_radius_batch(batch.graphs_adjacency_stack(graphs))
    for i, g in enumerate(graphs):
        r = None if rho is None else float(rho[i])
        if checker.hypothesis(g, r):
            report.hypothesis_hits += 1
            _conclude(checker, report, g, r)


def _chunks(stream: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    buf: list[Graph] = []
    for g in stream:
        buf.append(g)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def verify(spec: TheoremSpec, source: Exhaustive | RandomSample | Iterable[Graph],
           budget: int = DEFAULT_BUDGET, describe: str | None = None) -> VerificationReport:
    """Scan ``source`` against ``spec`` and return the tally.

    ``source`` is an :class:`Exhaustive` or :class:`RandomSample` description
    or any iterable of graphs (e.g. from :func:`read_graph6`).
    """
    spec.validate()
    n = spec.params.n
    checker = _CHECKERS[spec.id](spec.params, budget, spec.corrected)
    start = time.perf_counter()
    if isinstance(source, Exhaustive):
        if source.n != n:
            raise RangeError(f"source order {source.n} differs from statement order {n}")
        report = VerificationReport(spec, describe or source.describe())
        for masks in labeled_mask_chunks(n, source.connected, source.min_degree, source.k):
            _scan_masks(checker, report, n, masks)
    else:
        if isinstance(source, RandomSample):
            if source.n != n:
                raise RangeError(f"source order {source.n} differs from statement order {n}")
            label = describe or source.describe()
            stream: Iterable[Graph] = sample_random(source.n, source.p, source.count, source.seed)
        else:
            label = describe or "stream"
            stream = source
        report = VerificationReport(spec, label)
        for graphs in _chunks(stream, GRAPH_CHUNK):
            _scan_graphs(checker, report, n, graphs)
    report.counterexamples.sort()
    report.undecided.sort()
    report.wall_time = time.perf_counter() - start
    return report


# -- perturbations around extremal graphs ---------------------------------------------

PERTURBATION_FAMILIES = ("ex1fa", "ex1fb", "exktree", "exleaf", "exfan")


def _family_property(name: str, params: dict, budget: int) -> Callable[[Graph], bool]:
    if name in ("ex1fa", "ex1fb"):
        return lambda g: has_one_factor(g) is not None
    if name in ("exktree", "exfan"):
        k = params["k"]
        return lambda g: g.is_connected() and has_spanning_k_tree(g, k, budget) is not None
    if name == "exleaf":
        k = params["k"]
        return lambda g: g.is_connected() and _has_leaf_tree(g, k, budget)
    raise ValueError(f"no tightness property for family {name!r}; expected one of {PERTURBATION_FAMILIES}")


def perturbation_suite(name: str, params: dict, radius: int = 1, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Check that a named extremal graph sits exactly on its threshold.

    The graph itself must lack the property (tallied as exceptional); every
    one-edge augmentation must raise rho by more than 1e-8 and have the
    property; every one-edge deletion must lower rho by more than 1e-8.
    Failures are reported as graph6. For the disconnected ex1fa graph,
    deleting an edge of the smaller clique leaves rho unchanged, so those
    deletions are (correctly) reported.
    """
    if radius != 1:
        raise ValueError("only radius 1 (single-edge) perturbations are supported")
    fam = family(name, **params)
    has_property = _family_property(name, params, budget)
    g = fam.graph
    spec = TheoremSpec(f"PERTURB-{name}", ThresholdQuery(g.n))
    report = VerificationReport(spec, "perturbation:" + ",".join(f"{k}={v}" for k, v in params.items()))
    start = time.perf_counter()

    def attempt(h: Graph, check: Callable[[], bool]) -> None:
        report.scanned += 1
        report.hypothesis_hits += 1
        try:
            ok = check()
        except BudgetExceeded:
            report.undecided.append(graph6_encode(h))
            return
        _tally(report, h, "ok" if ok else "fail")

    report.scanned += 1
    report.hypothesis_hits += 1
    try:
        if has_property(g):
            report.counterexamples.append(graph6_encode(g))
        else:
            report.exceptional_hits += 1
    except BudgetExceeded:
        report.undecided.append(graph6_encode(g))
    rho = spectral_radius(g)
    for u, v in g.non_edges():
        h = g.add_edge(u, v)
        attempt(h, lambda h=h: spectral_radius(h) > rho + PERTURB_MARGIN and has_property(h))
    for u, v in g.edges():
        h = g.remove_edge(u, v)
        attempt(h, lambda h=h: spectral_radius(h) < rho - PERTURB_MARGIN)
    report.counterexamples.sort()
    report.undecided.sort()
    report.wall_time = time.perf_counter() - start
    return report


__all__ = [
    "CSV_HEADER", "EXHAUSTIVE_MAX_VERTICES", "Exhaustive", "PERTURBATION_FAMILIES", "RandomSample",
    "THEOREM_IDS", "TheoremSpec", "ThresholdQuery", "VerificationReport", "enumerate_labeled",
    "labeled_mask_chunks", "perturbation_suite", "read_graph6", "report_emit", "sample_random", "verify",
]
