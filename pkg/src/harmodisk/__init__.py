"""harmodisk: harmonic-polynomial solutions of the Dirichlet problem on a disk.

Builds explicit degree-n harmonic polynomial approximants to the solution from
Fourier data of the boundary values, evaluates them and their derivatives of
any order, and computes every a-priori error bound the construction supports
(uniform Jackson-rate bounds with interior acceleration, L1-boundary
derivative bounds, Taylor remainder certificates).  An independent
Poisson-integral oracle is included for validation only.
"""

from .boundary_data import (
    BoundaryData,
    CartesianPoint,
    DiskGeometry,
    PolarPoint,
    Smoothness,
    boundary_expression,
    chordal_seminorm_estimate,
    holder_seminorm_estimate,
    load_boundary_csv,
    pullback,
    theta_of,
)
from .errors import (
    AliasingError,
    BoundaryDataError,
    BranchCutError,
    DomainError,
    EvalOverflowError,
    ExpansionUnsupportedError,
    HarmodiskError,
)
from .estimates import (
    BoundReport,
    JacksonConstants,
    derivative_bound,
    interior_derivative_bound,
    maximum_principle_bounds,
    recompute,
    taylor_remainder_bound,
    uniform_error_bound,
    uniform_error_bound_smooth,
)
from .fourier import BoundaryL1, FourierSpectrum, compute_spectrum, l1_boundary_norm
from .harmonic import HarmonicApproximant, PQPair, evaluate_monomial_table, pq_pair
from .oracle import abel_sum, poisson_eval, poisson_eval_grid, polar_partial_sum
from .taylor import TaylorExpansion, circle_l1_norm, expand

__version__ = "0.1.0"

__all__ = [
    "AliasingError",
    "BoundaryData",
    "BoundaryDataError",
    "BoundaryL1",
    "BoundReport",
    "BranchCutError",
    "CartesianPoint",
    "DiskGeometry",
    "DomainError",
    "EvalOverflowError",
    "ExpansionUnsupportedError",
    "FourierSpectrum",
    "HarmodiskError",
    "HarmonicApproximant",
    "PQPair",
    "JacksonConstants",
    "PolarPoint",
    "Smoothness",
    "TaylorExpansion",
    "abel_sum",
    "boundary_expression",
    "chordal_seminorm_estimate",
    "circle_l1_norm",
    "compute_spectrum",
    "derivative_bound",
    "evaluate_monomial_table",
    "expand",
    "holder_seminorm_estimate",
    "interior_derivative_bound",
    "l1_boundary_norm",
    "load_boundary_csv",
    "maximum_principle_bounds",
    "poisson_eval",
    "poisson_eval_grid",
    "polar_partial_sum",
    "pq_pair",
    "pullback",
    "recompute",
    "taylor_remainder_bound",
    "theta_of",
    "uniform_error_bound",
    "uniform_error_bound_smooth",
]
