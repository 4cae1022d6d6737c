"""Bounded entropic-difference measures between probability distributions.

The package provides the LIT measure, its entropy discount, the DLITE
measure (LIT minus discount), and the cube root of DLITE, which is a true
metric. Reference divergences (KL, Jensen-Shannon, total variation), an
independent quadrature oracle, and randomized verification suites for the
measure's analytic properties round out the library. A FastAPI service
(:mod:`dlite.service`) and a thin CLI client (:mod:`dlite.cli`) sit on top.
"""

from .baselines import jsd, kl, tv
from .distributions import (
    Distribution,
    align,
    align_many,
    load_file,
    make_distribution,
    parse_csv,
    parse_distributions,
    parse_json,
    smooth,
)
from .errors import (
    AllZero,
    ConsistencyError,
    DliteError,
    DomainError,
    DuplicateLabel,
    KlUndefined,
    LengthMismatch,
    NegativeWeight,
    NonFiniteInput,
    NonPositiveEpsilon,
    ParseError,
    QuadratureNonConvergence,
)
from .measures import (
    DistanceMatrix,
    MeasureKind,
    MeasureResult,
    TermBreakdown,
    delta_h,
    delta_h_term,
    distance_matrix,
    dl_term,
    dlite,
    dlite_cbrt,
    g_term,
    lit,
    phi,
    psi,
)
from .quadrature import QuadratureConfig, discount_by_quadrature, lit_by_quadrature
from .verification import (
    PropertyReport,
    check_cbrt_concavity,
    check_derivative_identities,
    check_metric_axioms,
    check_quadrature_agreement,
    check_scaling_identity,
    run_all_checks,
    sample_simplex,
    search_supremum,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # distributions
    "Distribution", "make_distribution", "align", "align_many", "smooth",
    "parse_csv", "parse_json", "parse_distributions", "load_file",
    # measures
    "MeasureKind", "MeasureResult", "TermBreakdown", "DistanceMatrix",
    "phi", "psi", "g_term", "delta_h_term", "dl_term",
    "lit", "delta_h", "dlite", "dlite_cbrt", "distance_matrix",
    # baselines
    "kl", "jsd", "tv",
    # quadrature
    "QuadratureConfig", "lit_by_quadrature", "discount_by_quadrature",
    # verification
    "PropertyReport", "check_quadrature_agreement", "check_metric_axioms",
    "check_scaling_identity", "check_derivative_identities",
    "check_cbrt_concavity", "search_supremum", "run_all_checks",
    "sample_simplex",
    # errors
    "DliteError", "DomainError", "LengthMismatch", "DuplicateLabel",
    "NegativeWeight", "AllZero", "NonFiniteInput", "NonPositiveEpsilon",
    "KlUndefined", "QuadratureNonConvergence", "ConsistencyError",
    "ParseError",
]
