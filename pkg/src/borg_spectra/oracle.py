"""Finite truncations of the bi-infinite operators, as an independent
check on the symbol-based spectra.

`truncate` materializes the leading n*p x n*p principal section of the
operator's matrix (a Dirichlet-style cutoff: rows and columns outside the
window are simply dropped).  Its eigenvalues need not lie inside the true
spectrum, but their distance to it shrinks as n grows, and principal
sections of increasing size interlace.  A periodic-wrap variant closes
the window into a block circulant, whose eigenvalues equal the symbol's
eigenvalues on the exact grid theta = 2 pi m / n; that identity is the
sharpest available cross-check between the two representations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidParameterError
from .eig import hermitian_eigenvalues
from .spectra import (
    DEFAULT_GRID,
    RealSpectrum,
    compute_spectrum,
    hausdorff_distance,
    points_distance,
    spectrum_from_points,
)
from .symbols import OperatorKind, OperatorSpec

SIZE_LIMIT = 100_000


@dataclass(frozen=True)
class TruncatedOperator:
    """Dense real symmetric principal section (or its periodic closure)."""

    size: int
    blocks: int
    periodic: bool
    entries: np.ndarray


@dataclass(frozen=True)
class TruncationRow:
    blocks: int
    size: int
    eigenvalues: np.ndarray
    distances: np.ndarray  # per-eigenvalue distance to the symbol spectrum
    one_sided: float  # max of `distances`
    hausdorff: float  # between the eigenvalue set and the symbol spectrum


@dataclass(frozen=True)
class TruncationComparison:
    spectrum: RealSpectrum
    rows: tuple[TruncationRow, ...]


def truncate(spec: OperatorSpec, blocks: int, periodic: bool = False) -> TruncatedOperator:
    """Principal n*p section of the operator matrix (optionally wrapped)."""
    if not isinstance(blocks, int) or isinstance(blocks, bool) or blocks < 1:
        raise InvalidParameterError(f"blocks must be an integer >= 1, got {blocks!r}")
    p = spec.period
    size = blocks * p
    if size > SIZE_LIMIT:
        raise InvalidParameterError(f"truncation size {size} exceeds limit {SIZE_LIMIT}")
    m = np.zeros((size, size))
    idx = np.arange(size)
    m[idx, idx] = np.asarray(spec.v)[idx % p]

    if spec.kind in (OperatorKind.SCHRODINGER, OperatorKind.JACOBI):
        off = spec.offdiagonals()[np.arange(size - 1) % p]
        sub = np.arange(size - 1)
        m[sub, sub + 1] = off
        m[sub + 1, sub] = off
        if periodic and size >= 2:
            wrap = float(spec.offdiagonals()[(size - 1) % p])
            m[size - 1, 0] += wrap
            m[0, size - 1] += wrap
        return TruncatedOperator(size=size, blocks=blocks, periodic=periodic, entries=m)

    # general Laurent: interior tridiagonal ones within each block,
    # fourier pair (k, a) lands at the (1,p) corner of block coefficient A_k
    interior = np.asarray([i for i in range(size - 1) if (i + 1) % p != 0], dtype=int)
    m[interior, interior + 1] += 1.0
    m[interior + 1, interior] += 1.0
    for r in range(blocks):
        i0 = r * p
        for k, coeff in spec.fourier:
            j0 = (r - k) * p + p - 1
            if periodic:
                j0 %= size
            elif not 0 <= j0 < size:
                continue
            m[i0, j0] += coeff
            m[j0, i0] += coeff
    return TruncatedOperator(size=size, blocks=blocks, periodic=periodic, entries=m)


def truncation_compare(
    spec: OperatorSpec,
    blocks: Sequence[int],
    grid_size: int = DEFAULT_GRID,
) -> TruncationComparison:
    """Eigenvalues of growing truncations against the symbol spectrum."""
    if not blocks:
        raise InvalidParameterError("need at least one block count")
    spectrum = compute_spectrum(spec, grid_size)
    rows = []
    for n in blocks:
        trunc = truncate(spec, n)
        values = hermitian_eigenvalues(trunc.entries).values
        dists = points_distance(values, spectrum)
        rows.append(
            TruncationRow(
                blocks=n,
                size=trunc.size,
                eigenvalues=values,
                distances=dists,
                one_sided=float(np.max(dists)),
                hausdorff=hausdorff_distance(spectrum_from_points(values), spectrum),
            )
        )
    return TruncationComparison(spectrum=spectrum, rows=tuple(rows))
