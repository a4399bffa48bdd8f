"""Legendre polynomials with a pole: construction, zeros, verification.

The family P_n attached to a pole zeta off (or on) [-1, 1] is monic of degree
n and satisfies (n+1) L_n = P_n + (z - zeta) P_n', with L_n the monic Legendre
polynomial.  The package builds the family exactly (rational or Gaussian
rational poles) or in floating point, locates its zeros with multiplicities,
and cross-verifies the orthogonality, recurrence, zero-geometry and asymptotic
statements the family obeys.
"""

from .exceptions import (
    ConsistencyError,
    ConvergenceError,
    DegreeBoundError,
    ExactInputError,
    MultiplicityViolationError,
    PolarLegendreError,
    RegionError,
    SegmentBranchError,
)
from .geometry import (
    EllipseBoundReport,
    Lemniscate,
    PoleGeometry,
    accumulation_ellipse_point,
    accumulation_ellipse_points,
    ellipse_bound_checks,
    exterior_sqrt,
    joukowski_phi,
    lemniscate,
    lemniscate_residual,
    pole_geometry,
    segment_distance,
)
from .legendre import (
    QuadratureRule,
    critical_points,
    gauss_rule,
    legendre_coeffs,
    legendre_coeffs_float,
    legendre_value_and_derivative,
    legendre_values,
    legendre_zeros,
    norm_sq,
    norms_sq,
    recurrence_constant,
)
from .polar import (
    ConnectionCoeffs,
    PolarFamily,
    RecurrenceCoeffs,
    connection_coeffs,
    defining_identity_residual,
    polar_derivative_eval,
    polar_eval,
    polar_eval_exact,
    polar_eval_with_derivative,
    polar_family_list,
    polar_fundamental,
    polar_integral,
    polar_recurrence,
    polar_recurrence_family,
    primitive_poly,
    recurrence_coeff_a,
    recurrence_coeffs,
    sobolev_inner,
)
from .polycore import Polynomial, monic_from_roots, sup_diff
from .roots import (
    RootFindConfig,
    RootSet,
    aberth_find,
    cluster_multiplicities,
    find_polar_roots,
    reconstruct_monic,
)
from .scalars import GaussianRational
from .verify import (
    CheckRecord,
    VerificationReport,
    check_defining_identity,
    check_equilibrium,
    check_nth_root_asymptotic,
    check_recurrence,
    check_routes,
    check_sobolev,
    check_theorem1,
    check_theorem5,
    check_theorem6,
    check_zero_geometry,
    run_standard_suite,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "CheckRecord",
    "ConnectionCoeffs",
    "ConsistencyError",
    "ConvergenceError",
    "DegreeBoundError",
    "EllipseBoundReport",
    "ExactInputError",
    "GaussianRational",
    "Lemniscate",
    "MultiplicityViolationError",
    "PolarFamily",
    "PolarLegendreError",
    "PoleGeometry",
    "Polynomial",
    "QuadratureRule",
    "RecurrenceCoeffs",
    "RegionError",
    "RootFindConfig",
    "RootSet",
    "SegmentBranchError",
    "VerificationReport",
    "aberth_find",
    "accumulation_ellipse_point",
    "accumulation_ellipse_points",
    "check_defining_identity",
    "check_equilibrium",
    "check_nth_root_asymptotic",
    "check_recurrence",
    "check_routes",
    "check_sobolev",
    "check_theorem1",
    "check_theorem5",
    "check_theorem6",
    "check_zero_geometry",
    "cluster_multiplicities",
    "connection_coeffs",
    "critical_points",
    "defining_identity_residual",
    "ellipse_bound_checks",
    "exterior_sqrt",
    "find_polar_roots",
    "gauss_rule",
    "joukowski_phi",
    "legendre_coeffs",
    "legendre_coeffs_float",
    "legendre_value_and_derivative",
    "legendre_values",
    "legendre_zeros",
    "lemniscate",
    "lemniscate_residual",
    "monic_from_roots",
    "norm_sq",
    "norms_sq",
    "polar_derivative_eval",
    "polar_eval",
    "polar_eval_exact",
    "polar_eval_with_derivative",
    "polar_family_list",
    "polar_fundamental",
    "polar_integral",
    "polar_recurrence",
    "polar_recurrence_family",
    "pole_geometry",
    "primitive_poly",
    "recurrence_coeff_a",
    "recurrence_coeffs",
    "recurrence_constant",
    "reconstruct_monic",
    "run_standard_suite",
    "segment_distance",
    "sobolev_inner",
    "sup_diff",
]
