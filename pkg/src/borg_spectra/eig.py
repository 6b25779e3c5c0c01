"""Hermitian eigenvalue contract used by every downstream module.

Eigenvalues are returned sorted ascending (band indexing counts from the
bottom of the spectrum; the classical top-down labeling is just the
reverse).  Inputs are validated to be Hermitian up to a strict relative
tolerance and then handed to LAPACK, whose symmetric drivers are
backward stable well inside the 1e-10 contract assumed elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError
from .symbols import JacobiSubmatrix, SymbolMatrix

HERMITICITY_RTOL = 1e-12
BACKWARD_ERROR_TOL = 1e-10  # relative to ||M||; LAPACK delivers ~n*eps


@dataclass(frozen=True)
class EigenResult:
    """Ascending eigenvalues plus the solver's backward-error bound."""

    values: np.ndarray
    residual_bound: float


def _as_array(m) -> np.ndarray:
    if isinstance(m, (SymbolMatrix, JacobiSubmatrix)):
        return np.asarray(m.entries)
    return np.asarray(m)


def _check_hermitian(arr: np.ndarray) -> None:
    if arr.shape[-1] != arr.shape[-2]:
        raise ContractViolationError(f"matrix must be square, got shape {arr.shape}")
    scale = max(1.0, float(np.max(np.abs(arr))) if arr.size else 0.0)
    asym = float(np.max(np.abs(arr - np.conjugate(np.swapaxes(arr, -1, -2)))))
    if asym > HERMITICITY_RTOL * scale:
        raise ContractViolationError(
            f"matrix is not Hermitian: relative asymmetry {asym / scale:.3e}"
        )


def hermitian_eigenvalues(m) -> EigenResult:
    """Ascending eigenvalues of a Hermitian matrix (dimension 0 allowed)."""
    arr = _as_array(m)
    if arr.size == 0:
        return EigenResult(values=np.zeros(0), residual_bound=0.0)
    _check_hermitian(arr)
    values = np.linalg.eigvalsh(arr)
    bound = arr.shape[-1] * np.finfo(float).eps
    return EigenResult(values=values, residual_bound=float(bound))


def eigvalsh_stack(stack: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a whole (N, p, p) Hermitian stack at once."""
    arr = np.asarray(stack)
    if arr.ndim != 3:
        raise ContractViolationError(f"expected a 3d stack, got shape {arr.shape}")
    _check_hermitian(arr)
    return np.linalg.eigvalsh(arr)


def operator_norm(m) -> float:
    """Spectral norm; uses the Hermitian fast path when it applies."""
    arr = _as_array(m)
    if arr.size == 0:
        return 0.0
    scale = max(1.0, float(np.max(np.abs(arr))))
    asym = float(np.max(np.abs(arr - np.conjugate(arr.T))))
    if asym <= HERMITICITY_RTOL * scale:
        return float(np.max(np.abs(np.linalg.eigvalsh(arr))))
    return float(np.linalg.norm(arr, 2))
