"""Turan extremal values, van der Corput delta(K), and their cross-certification.

Closed forms live in `closed_forms`, the extremal polynomial construction in
`extremal`, Fejer kernels in `kernels`, the independent LP oracle in `lp`,
and the delta(K) property checks in `properties`.
"""
from .closed_forms import (
    GammaSolution,
    NonPositiveGamma,
    SingularSystem,
    UnsupportedCase,
    solve_gamma,
    turan_value,
)
from .core import (
    CosPoly,
    EmptyTruncation,
    FiniteSupport,
    NotCoprime,
    OutOfRange,
    PeriodicSupport,
    RationalCutoff,
    block_support,
    cospoly_from_json,
    cospoly_to_json,
    dilate_support,
    eval_cospoly,
    finite_support,
    is_subset,
    make_cutoff,
    periodic_block,
    truncate_support,
)
from .extremal import MembershipReport, build_extremal, verify_membership, verify_t_at_zero_shifts
from .kernels import fejer, fejer_closed
from .lp import (
    EpsTooSmall,
    LPProblem,
    LPResult,
    certification_grid,
    delta_grid_lp,
    delta_periodic_lp,
    lipschitz_certify,
    simplex_solve,
    solution_poly,
    turan_relaxed_lp,
)
from .properties import (
    CheckReport,
    NotASubset,
    PreconditionViolated,
    Verdict,
    check_dilation,
    check_divisibility_bound,
    check_monotonicity,
    check_supermultiplicative,
    pairing_check,
    vdc_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "CosPoly",
    "EmptyTruncation",
    "EpsTooSmall",
    "FiniteSupport",
    "GammaSolution",
    "LPProblem",
    "LPResult",
    "MembershipReport",
    "NonPositiveGamma",
    "NotASubset",
    "NotCoprime",
    "OutOfRange",
    "PeriodicSupport",
    "PreconditionViolated",
    "RationalCutoff",
    "SingularSystem",
    "UnsupportedCase",
    "Verdict",
    "block_support",
    "build_extremal",
    "certification_grid",
    "check_dilation",
    "check_divisibility_bound",
    "check_monotonicity",
    "check_supermultiplicative",
    "cospoly_from_json",
    "cospoly_to_json",
    "delta_grid_lp",
    "delta_periodic_lp",
    "dilate_support",
    "eval_cospoly",
    "fejer",
    "fejer_closed",
    "finite_support",
    "is_subset",
    "lipschitz_certify",
    "make_cutoff",
    "pairing_check",
    "periodic_block",
    "simplex_solve",
    "solution_poly",
    "solve_gamma",
    "truncate_support",
    "turan_relaxed_lp",
    "turan_value",
    "vdc_verdict",
    "verify_membership",
    "verify_t_at_zero_shifts",
]
