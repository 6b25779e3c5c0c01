"""Band spectra, pseudospectra, and gap certificates of periodic discrete
Schrodinger, Jacobi, and block Laurent operators.

The spectrum of a period-p operator is computed from its p x p Hermitian
matrix symbol sampled over the frequency circle; the epsilon-pseudospectrum
of these self-adjoint operators is the epsilon-fattening of the spectrum, so
connectivity questions reduce to interval arithmetic on the real line.  On
top of that sit deviation certificates ("a connected pseudospectrum forces a
near-constant potential" and its converse), eigenvalue interlacing and trace
checks, finite-truncation cross-validation, and a continued-fraction
approximant sweep for cosine quasi-periodic potentials.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .borg import (
    BorgReport,
    InterlacingReport,
    TheoremId,
    TraceGap,
    best_constant,
    check_converse,
    check_forward,
    converse_from_spectrum,
    forward_from_spectrum,
    interlacing_report,
    report_json_dict,
    trace_gap,
)
from .eig import EigenResult, eigvalsh_stack, hermitian_eigenvalues, operator_norm
from .errors import (
    BorgSpectraError,
    ContractViolationError,
    HypothesisViolationError,
    InvalidParameterError,
    InvalidSpecError,
)
from .mathieu import (
    ApproximantReport,
    Convergent,
    ConvergentRun,
    PremiseReport,
    SweepResult,
    approximant_sweep,
    convergents,
    limit_point_check,
    mathieu_potential,
    minimal_period,
    tenmartini_premise,
)
from .oracle import TruncatedOperator, TruncationComparison, truncate, truncation_compare
from .spectra import (
    BandTable,
    GapReport,
    RealSpectrum,
    band_table,
    compute_spectrum,
    gap_report,
    hausdorff_distance,
    merge_intervals,
    point_distance,
    points_distance,
    pseudospectrum_intervals,
    spectrum_from_points,
    spectrum_intervals,
    theta_grid,
)
from .symbols import (
    JacobiSubmatrix,
    OperatorKind,
    OperatorSpec,
    SymbolMatrix,
    interlacing_submatrix,
    jacobi_symbol,
    laurent_symbol,
    lipschitz_bound,
    schrodinger_symbol,
    symbol,
    symbol_stack,
    wrap_theta,
)

__all__ = [
    "__version__",
    "ApproximantReport",
    "BandTable",
    "BorgReport",
    "BorgSpectraError",
    "ContractViolationError",
    "Convergent",
    "ConvergentRun",
    "EigenResult",
    "GapReport",
    "HypothesisViolationError",
    "InterlacingReport",
    "InvalidParameterError",
    "InvalidSpecError",
    "JacobiSubmatrix",
    "OperatorKind",
    "OperatorSpec",
    "PremiseReport",
    "RealSpectrum",
    "SweepResult",
    "SymbolMatrix",
    "TheoremId",
    "TraceGap",
    "TruncatedOperator",
    "TruncationComparison",
    "approximant_sweep",
    "band_table",
    "best_constant",
    "check_converse",
    "check_forward",
    "compute_spectrum",
    "convergents",
    "converse_from_spectrum",
    "eigvalsh_stack",
    "forward_from_spectrum",
    "gap_report",
    "hausdorff_distance",
    "hermitian_eigenvalues",
    "interlacing_report",
    "interlacing_submatrix",
    "jacobi_symbol",
    "laurent_symbol",
    "limit_point_check",
    "lipschitz_bound",
    "mathieu_potential",
    "merge_intervals",
    "minimal_period",
    "operator_norm",
    "point_distance",
    "points_distance",
    "pseudospectrum_intervals",
    "report_json_dict",
    "schrodinger_symbol",
    "spectrum_from_points",
    "spectrum_intervals",
    "symbol",
    "symbol_stack",
    "tenmartini_premise",
    "theta_grid",
    "trace_gap",
    "truncate",
    "truncation_compare",
    "wrap_theta",
]
