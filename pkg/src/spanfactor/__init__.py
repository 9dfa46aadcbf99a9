"""Closure, factor and spanning-tree deciders with spectral and clique-count thresholds.

The submodules are usable on their own; the most common names are
re-exported here.
"""

from .closure import (
    closure_for_k_factor,
    closure_for_one_factor,
    closure_for_spanning_k_tree,
    is_closed,
    l_closure,
)
from .extremal import (
    FAMILY_NAMES,
    Family,
    RangeError,
    clique_threshold_1f,
    clique_threshold_kf,
    ex_1f_a,
    ex_1f_b,
    ex_fan,
    ex_ktree,
    ex_leaf,
    family,
    gen3,
    joinreg,
    phi,
    psi,
    spectral_threshold_1f,
    spectral_threshold_kf,
)
from .factors import (
    FactorCertificate,
    Matching,
    brute_force_k_factor,
    brute_force_one_factor,
    has_k_factor,
    has_one_factor,
    max_matching,
)
from .graph import Graph, Graph6Error, GraphError, from_edges, graph6_decode, graph6_encode, is_isomorphic
from .spectral import (
    clique_number,
    count_cliques,
    hong_bound,
    hong_shu_fang_bound,
    posa_clique_bound,
    posa_property,
    quotient_rho,
    spectral_radius,
)
from .trees import (
    BudgetExceeded,
    SubsetCertificate,
    TreeCertificate,
    has_spanning_k_tree,
    has_spanning_tree_leaf_deg,
    kaneko_check,
    leaf_degree,
)
from .verify import (
    Exhaustive,
    RandomSample,
    TheoremSpec,
    ThresholdQuery,
    VerificationReport,
    enumerate_labeled,
    perturbation_suite,
    report_emit,
    sample_random,
    verify,
)

__version__ = "0.1.0"
