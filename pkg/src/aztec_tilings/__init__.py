"""Exact-counting workbench for domino tilings of diamond-family lattice regions.

Regions and structured graphs are built with fixed coordinate conventions,
perfect matchings are counted by three independent exact engines, and the
verify suites recheck every identity the package relies on.
"""

from .engines import count, count_brute, count_fkt, count_profile_dp, fkt_supported
from .errors import (
    CountMismatchError,
    FactorizationError,
    InvalidHolesError,
    InvalidOrderError,
    InvalidPointError,
    TooLargeError,
    UnsupportedEmbeddingError,
)
from .factorize import (
    DiagonalAxis,
    FactorizationResult,
    apply_factorization,
    find_diagonal_axis,
    verify_factorization,
)
from .formulas import (
    aztec_diamond_value,
    delta,
    lemma1_check,
    lemma4_value,
    lemma5_value,
    lemma6_check,
    lemma6_lhs,
    lemma6_rhs,
    theorem1_value,
)
from .grids import (
    EmbeddedGraph,
    ReductionReport,
    bipartite_imbalance,
    dual_graph,
    isomorphic_embedded,
    normalize,
    reduce_forced,
)
from .regions import (
    KLEIN_ABUT,
    KLEIN_NONABUT,
    PINWHEEL,
    QUARTER_KINDS,
    Region,
    build_aztec_diamond,
    build_aztec_rectangle,
    build_holey_ar,
    build_holey_ar_bar,
    build_quartered,
    congruent,
    set_A,
    set_B,
    zigzag_side,
)
from .verify import run_all, run_suite

__all__ = [
    "CountMismatchError",
    "DiagonalAxis",
    "EmbeddedGraph",
    "FactorizationError",
    "FactorizationResult",
    "InvalidHolesError",
    "InvalidOrderError",
    "InvalidPointError",
    "KLEIN_ABUT",
    "KLEIN_NONABUT",
    "PINWHEEL",
    "QUARTER_KINDS",
    "ReductionReport",
    "Region",
    "TooLargeError",
    "UnsupportedEmbeddingError",
    "apply_factorization",
    "aztec_diamond_value",
    "bipartite_imbalance",
    "build_aztec_diamond",
    "build_aztec_rectangle",
    "build_holey_ar",
    "build_holey_ar_bar",
    "build_quartered",
    "congruent",
    "count",
    "count_brute",
    "count_fkt",
    "count_profile_dp",
    "delta",
    "dual_graph",
    "find_diagonal_axis",
    "fkt_supported",
    "isomorphic_embedded",
    "lemma1_check",
    "lemma4_value",
    "lemma5_value",
    "lemma6_check",
    "lemma6_lhs",
    "lemma6_rhs",
    "normalize",
    "reduce_forced",
    "run_all",
    "run_suite",
    "set_A",
    "set_B",
    "theorem1_value",
    "verify_factorization",
    "zigzag_side",
]
