"""Band structure, real spectra, pseudospectra, gaps, and set distances.

The spectrum of a periodic self-adjoint operator is the union over theta
of the symbol's eigenvalues: p band functions, each Lipschitz in theta.
Sampling on a uniform grid and padding each band's range by
delta = L * pi / N (L the Lipschitz bound, pi/N the worst distance to a
grid point) therefore yields certified *supersets* of the true bands.

Consequences used throughout:

* reported intervals contain the true spectrum; reported gaps sit inside
  true gaps, so a reported gap that clears the significance threshold
  certifies a real one;
* sampled (unpadded) band extrema sit inside the true bands, so the
  unpadded gap width bounds the true gap width from above.  The reported
  `epsilon_star` is half that upper bound (padded width / 2 + delta):
  the smallest epsilon at which connectivity of the true epsilon-fattened
  spectrum is certified, not merely suggested by the samples.

Pseudospectra of self-adjoint operators are exact epsilon-fattenings of
the spectrum, so connectivity questions reduce to interval bookkeeping on
the real line (each fattened component is a stadium in the plane, and a
union of stadiums centered on the reals is connected iff its real trace
is an interval).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .eig import BACKWARD_ERROR_TOL, eigvalsh_stack
from .errors import InvalidParameterError
from .symbols import OperatorKind, OperatorSpec, lipschitz_bound, symbol_stack

MERGE_TOL = 1e-12  # intervals closer than this are considered touching
DEFAULT_GRID = 1024


@dataclass(frozen=True)
class BandTable:
    """Sampled band functions: grid (N,) and bands (p, N), ascending in j."""

    grid: np.ndarray
    bands: np.ndarray
    lipschitz: float

    @property
    def resolution_error(self) -> float:
        return self.lipschitz * math.pi / len(self.grid)


@dataclass(frozen=True)
class RealSpectrum:
    """Disjoint closed intervals, sorted, plus the endpoint error bound."""

    intervals: tuple[tuple[float, float], ...]
    resolution_error: float


@dataclass(frozen=True)
class GapReport:
    """Significant spectral gaps of a RealSpectrum.

    `gaps` holds (left_hi, right_lo, width) triples for every gap wider
    than the significance threshold 2*resolution_error + 4*eig_tol;
    `epsilon_star` is the smallest fattening radius at which the true
    spectrum is certified connected (0 when no significant gap remains).
    """

    connected: bool
    gaps: tuple[tuple[float, float, float], ...]
    epsilon_star: float


def theta_grid(grid_size: int) -> np.ndarray:
    """Uniform grid theta_i = -pi + 2 pi i / N, i = 1..N, covering (-pi, pi]."""
    if not isinstance(grid_size, int) or isinstance(grid_size, bool) or grid_size < 2:
        raise InvalidParameterError(f"grid size must be an integer >= 2, got {grid_size!r}")
    return -math.pi + (2.0 * math.pi / grid_size) * np.arange(1, grid_size + 1)


def band_table(spec: OperatorSpec, shift: int = 0, grid_size: int = DEFAULT_GRID) -> BandTable:
    """Sample all p band functions on the uniform theta grid."""
    grid = theta_grid(grid_size)
    values = eigvalsh_stack(symbol_stack(spec, shift, grid))  # (N, p), ascending
    return BandTable(grid=grid, bands=values.T.copy(), lipschitz=lipschitz_bound(spec))


def merge_intervals(
    intervals: Sequence[tuple[float, float]], tol: float = MERGE_TOL
) -> tuple[tuple[float, float], ...]:
    """Union of closed intervals; pieces within `tol` of touching are fused."""
    pairs = sorted((float(lo), float(hi)) for lo, hi in intervals)
    for lo, hi in pairs:
        if hi < lo:
            raise InvalidParameterError(f"interval [{lo}, {hi}] is reversed")
    merged: list[list[float]] = []
    for lo, hi in pairs:
        if merged and lo <= merged[-1][1] + tol:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return tuple((lo, hi) for lo, hi in merged)


def spectrum_intervals(table: BandTable) -> RealSpectrum:
    """Certified superset of the spectrum: padded band ranges, merged."""
    delta = table.resolution_error
    raw = [
        (float(band.min()) - delta, float(band.max()) + delta)
        for band in table.bands
    ]
    return RealSpectrum(intervals=merge_intervals(raw), resolution_error=delta)


def pseudospectrum_intervals(spectrum: RealSpectrum, epsilon: float) -> RealSpectrum:
    """Fatten every interval by epsilon and re-merge (exact for self-adjoint)."""
    epsilon = float(epsilon)
    if not math.isfinite(epsilon) or epsilon < 0.0:
        raise InvalidParameterError(f"epsilon must be >= 0, got {epsilon!r}")
    fat = [(lo - epsilon, hi + epsilon) for lo, hi in spectrum.intervals]
    return RealSpectrum(
        intervals=merge_intervals(fat), resolution_error=spectrum.resolution_error
    )


def gap_significance_threshold(spectrum: RealSpectrum) -> float:
    """Minimum width at which a sampled gap certifies a true gap."""
    return 2.0 * spectrum.resolution_error + 4.0 * BACKWARD_ERROR_TOL


def gap_report(spectrum: RealSpectrum) -> GapReport:
    """Significant gaps, connectivity verdict, and the certified epsilon_star."""
    if not spectrum.intervals:
        raise InvalidParameterError("gap report needs a nonempty spectrum")
    threshold = gap_significance_threshold(spectrum)
    gaps: list[tuple[float, float, float]] = []
    for (_, hi), (lo, _) in zip(spectrum.intervals, spectrum.intervals[1:]):
        width = lo - hi
        if width > threshold:
            gaps.append((hi, lo, width))
    if gaps:
        # padded width underestimates the true gap by up to 2*delta; the
        # unpadded (sampled) width overestimates it, hence certifies closure
        epsilon_star = max(w for _, _, w in gaps) / 2.0 + spectrum.resolution_error
    else:
        epsilon_star = 0.0
    return GapReport(connected=not gaps, gaps=tuple(gaps), epsilon_star=epsilon_star)


def compute_spectrum(
    spec: OperatorSpec, grid_size: int = DEFAULT_GRID, shift: int = 0
) -> RealSpectrum:
    """band_table followed by spectrum_intervals."""
    return spectrum_intervals(band_table(spec, shift, grid_size))


# -- distances on finite unions of closed intervals -------------------------


def point_distance(x: float, spectrum: RealSpectrum) -> float:
    """Distance from a point to the interval union."""
    return float(points_distance(np.asarray([x], dtype=float), spectrum)[0])


def points_distance(xs: np.ndarray, spectrum: RealSpectrum) -> np.ndarray:
    """Vectorized distance from points to the interval union (exact)."""
    if not spectrum.intervals:
        raise InvalidParameterError("distance to an empty spectrum is undefined")
    flat = np.asarray(spectrum.intervals, dtype=float).ravel()  # lo1,hi1,lo2,...
    xs = np.asarray(xs, dtype=float)
    pos = np.searchsorted(flat, xs)
    dist = np.zeros_like(xs)
    outside = pos % 2 == 0  # between intervals (or beyond the hull)
    left = np.where(pos > 0, np.abs(xs - flat[np.maximum(pos - 1, 0)]), np.inf)
    right = np.where(pos < len(flat), np.abs(flat[np.minimum(pos, len(flat) - 1)] - xs), np.inf)
    dist[outside] = np.minimum(left, right)[outside]
    return dist


def _directed_hausdorff(a: RealSpectrum, b: RealSpectrum) -> float:
    # the distance function to b is piecewise linear with local maxima at
    # midpoints of b's gaps; on each interval of a the sup is attained at
    # an endpoint or at such a midpoint, so finitely many candidates suffice
    candidates = [x for lo, hi in a.intervals for x in (lo, hi)]
    for (_, hi), (lo, _) in zip(b.intervals, b.intervals[1:]):
        mid = 0.5 * (hi + lo)
        if any(lo_a <= mid <= hi_a for lo_a, hi_a in a.intervals):
            candidates.append(mid)
    return float(np.max(points_distance(np.asarray(candidates), b)))


def hausdorff_distance(s1: RealSpectrum, s2: RealSpectrum) -> float:
    """Exact Hausdorff distance between two finite unions of closed intervals."""
    if not s1.intervals or not s2.intervals:
        raise InvalidParameterError("Hausdorff distance needs nonempty spectra")
    return max(_directed_hausdorff(s1, s2), _directed_hausdorff(s2, s1))


def spectrum_from_points(points: Sequence[float], resolution_error: float = 0.0) -> RealSpectrum:
    """Finite point sets as degenerate interval unions (for set distances)."""
    pts = sorted(float(x) for x in points)
    if not pts:
        raise InvalidParameterError("need at least one point")
    return RealSpectrum(
        intervals=merge_intervals([(x, x) for x in pts]),
        resolution_error=resolution_error,
    )


# -- serialization helpers ---------------------------------------------------


def bands_csv_rows(table: BandTable):
    """(theta, band_index, lambda) rows; band_index counts from 1 upward."""
    for j, band in enumerate(table.bands, start=1):
        for theta, lam in zip(table.grid, band):
            yield float(theta), j, float(lam)


def spectrum_json_dict(spectrum: RealSpectrum) -> dict:
    return {
        "intervals": [[lo, hi] for lo, hi in spectrum.intervals],
        "resolution_error": spectrum.resolution_error,
    }
