"""Rational approximation pipeline for cosine quasi-periodic potentials.

v_j = coupling * cos(2 pi j alpha) with irrational alpha is approximated
by the periodic potentials obtained from continued-fraction convergents
a/b of alpha.  Each approximant is a genuine periodic Schrodinger
operator, so the band machinery applies; the sweep tracks how the
approximant spectra move (Hausdorff distance) against the sup-norm
distance of the potentials, which dominates it by a Weyl bound.

The minimal period of each approximant is established by brute force
rather than assumed.  For reduced a/b the computed minimal period is b
itself; the report also records whether it instead matched b + 1 (a
repeat-index miscount that is tempting on paper), as `offbyone_discrepancy`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .borg import best_constant
from .errors import InvalidParameterError
from .spectra import (
    DEFAULT_GRID,
    RealSpectrum,
    band_table,
    gap_report,
    point_distance,
    pseudospectrum_intervals,
    spectrum_intervals,
    hausdorff_distance,
)
from .symbols import TWO_PI, OperatorKind, OperatorSpec
from .util import ordered_map

DENOMINATOR_LIMIT = 1 << 26  # past this, float alpha cannot back its convergents
PERIOD_TOL = 1e-12
COARSE_GRID_DELTA = 1e-2  # resolution worse than this flags the grid as coarse


@dataclass(frozen=True)
class Convergent:
    """Reduced rational a/b from a continued-fraction expansion."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.b < 1:
            raise InvalidParameterError(f"denominator must be >= 1, got {self.b}")
        if math.gcd(abs(self.a), self.b) != 1:
            raise InvalidParameterError(f"{self.a}/{self.b} is not reduced")

    @property
    def value(self) -> float:
        return self.a / self.b


@dataclass(frozen=True)
class ConvergentRun:
    """Convergent list plus a flag set when precision cut the list short."""

    convergents: tuple[Convergent, ...]
    truncated: bool


@dataclass(frozen=True)
class ApproximantReport:
    """One convergent's periodic approximant, its spectrum and gap data."""

    convergent: Convergent
    period: int
    offbyone_discrepancy: bool  # True when the minimal period is not b + 1
    spectrum: RealSpectrum
    gap_count: int
    epsilon_star: float
    potential_distance: float  # sup over the window vs the irrational target
    potential_distance_bound: float  # 2 pi |alpha - a/b| * window * coupling
    pseudo_connected: dict[float, bool]
    grid_warning: bool


@dataclass(frozen=True)
class SweepResult:
    alpha: float
    coupling: float
    reports: tuple[ApproximantReport, ...]
    hausdorff_next: tuple[float, ...]  # consecutive spectra
    potential_sup_next: tuple[float, ...]  # consecutive potentials, sup norm
    truncated: bool


@dataclass(frozen=True)
class PremiseReport:
    """Bounded-period family vs. connected pseudospectrum compatibility.

    If a family with all periods <= period_cap has a connected
    epsilon-pseudospectrum limit, the limit potential must deviate from
    some constant by at most 2 epsilon (period_cap - 1).  A deviation
    above the bound is incompatible; epsilon below
    deviation / (2 (period_cap - 1)) forces unbounded periods.
    """

    period_cap: int
    periods_bounded: bool
    epsilon: float
    bound: float
    limit_deviation: float
    compatible: bool
    incompatibility_threshold: float


def convergents(alpha: float, count: int) -> ConvergentRun:
    """First `count` continued-fraction convergents of alpha.

    The zeroth convergent floor(alpha)/1 is skipped when it is 0/1 (alpha
    in (0,1)), since it approximates nothing.  The list stops early, with
    `truncated` set, when the remainder hits exact zero or the
    denominators outgrow what float precision can support.
    """
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise InvalidParameterError(f"alpha must be finite, got {alpha!r}")
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        raise InvalidParameterError(f"count must be an integer >= 1, got {count!r}")

    items: list[Convergent] = []
    a0 = math.floor(alpha)
    h_prev, k_prev = 1, 0
    h, k = a0, 1
    if a0 != 0:
        items.append(Convergent(a0, 1))
    frac = alpha - a0
    truncated = False
    while len(items) < count:
        if frac <= 0.0:
            truncated = True
            break
        q = math.floor(1.0 / frac)
        frac = 1.0 / frac - q
        h, h_prev = q * h + h_prev, h
        k, k_prev = q * k + k_prev, k
        if k > DENOMINATOR_LIMIT:
            truncated = True
            break
        items.append(Convergent(h, k))
    return ConvergentRun(convergents=tuple(items), truncated=truncated)


def minimal_period(values: Callable[[int], float], candidate: int) -> int:
    """Smallest P in 1..candidate with values(j + P) = values(j), brute force.

    `candidate` must itself be a period (checked on j = 1..2*candidate);
    equality is within 1e-12 throughout.
    """
    if not isinstance(candidate, int) or isinstance(candidate, bool) or candidate < 1:
        raise InvalidParameterError(f"candidate must be an integer >= 1, got {candidate!r}")
    vals = np.asarray([float(values(j)) for j in range(1, 3 * candidate + 1)])
    if np.max(np.abs(vals[candidate : 3 * candidate] - vals[: 2 * candidate])) > PERIOD_TOL:
        raise InvalidParameterError(f"candidate {candidate} is not a period of the sequence")
    for period in range(1, candidate + 1):
        if np.max(np.abs(vals[period : period + candidate] - vals[:candidate])) <= PERIOD_TOL:
            return period
    return candidate  # unreachable: the candidate itself qualifies


def mathieu_potential(conv: Convergent, coupling: float = 1.0) -> OperatorSpec:
    """Periodic Schrodinger spec with v_j = coupling * cos(2 pi j a/b).

    The cosine argument is reduced modulo b in exact integer arithmetic,
    so the sequence is exactly periodic in floating point as well.
    """
    coupling = float(coupling)
    if not math.isfinite(coupling):
        raise InvalidParameterError(f"coupling must be finite, got {coupling!r}")

    def value(j: int) -> float:
        return coupling * math.cos(TWO_PI * ((j * conv.a) % conv.b) / conv.b)

    period = minimal_period(value, conv.b)
    v = tuple(value(j) for j in range(1, period + 1))
    return OperatorSpec(kind=OperatorKind.SCHRODINGER, period=period, v=v)


def _potential_sup_distance(spec1: OperatorSpec, spec2: OperatorSpec) -> float:
    """Exact sup_j |v1_j - v2_j| over one common period window."""
    window = math.lcm(spec1.period, spec2.period)
    v1 = np.asarray(spec1.v)[np.arange(window) % spec1.period]
    v2 = np.asarray(spec2.v)[np.arange(window) % spec2.period]
    return float(np.max(np.abs(v1 - v2)))


def _approximant_report(
    conv: Convergent,
    alpha: float,
    coupling: float,
    grid_size: int,
    epsilons: Sequence[float],
) -> tuple[ApproximantReport, OperatorSpec]:
    spec = mathieu_potential(conv, coupling)
    spectrum = spectrum_intervals(band_table(spec, 0, grid_size))
    gaps = gap_report(spectrum)
    window = 10 * conv.b
    j = np.arange(1, window + 1)
    target = coupling * np.cos(TWO_PI * alpha * j)
    approx = np.asarray(spec.v)[(j - 1) % spec.period]
    distance = float(np.max(np.abs(target - approx)))
    bound = abs(coupling) * TWO_PI * abs(alpha - conv.value) * window
    connected = {
        float(eps): gap_report(pseudospectrum_intervals(spectrum, float(eps))).connected
        for eps in epsilons
    }
    report = ApproximantReport(
        convergent=conv,
        period=spec.period,
        offbyone_discrepancy=spec.period != conv.b + 1,
        spectrum=spectrum,
        gap_count=len(gaps.gaps),
        epsilon_star=gaps.epsilon_star,
        potential_distance=distance,
        potential_distance_bound=bound,
        pseudo_connected=connected,
        grid_warning=spectrum.resolution_error > COARSE_GRID_DELTA,
    )
    return report, spec


def approximant_sweep(
    alpha: float,
    count: int,
    grid_size: int = DEFAULT_GRID,
    epsilons: Sequence[float] = (),
    coupling: float = 1.0,
) -> SweepResult:
    """Run the whole convergent family and compare consecutive spectra."""
    if not isinstance(count, int) or isinstance(count, bool) or count < 2:
        raise InvalidParameterError(f"sweep count must be an integer >= 2, got {count!r}")
    run = convergents(alpha, count)
    if not run.convergents:
        raise InvalidParameterError(f"no convergents available for alpha = {alpha!r}")
    pairs = list(
        ordered_map(
            lambda conv: _approximant_report(conv, alpha, coupling, grid_size, epsilons),
            run.convergents,
        )
    )
    reports = tuple(rep for rep, _ in pairs)
    specs = [spec for _, spec in pairs]
    hausdorff = tuple(
        hausdorff_distance(r1.spectrum, r2.spectrum)
        for r1, r2 in zip(reports, reports[1:])
    )
    sup = tuple(
        _potential_sup_distance(s1, s2) for s1, s2 in zip(specs, specs[1:])
    )
    return SweepResult(
        alpha=float(alpha),
        coupling=float(coupling),
        reports=reports,
        hausdorff_next=hausdorff,
        potential_sup_next=sup,
        truncated=run.truncated,
    )


def limit_point_check(
    spectra: Sequence[RealSpectrum],
    limit: RealSpectrum,
    picks: Sequence[float],
) -> tuple[float, ...]:
    """Distances from per-approximant picks to the limit spectrum.

    Each pick must lie in its own spectrum (within that spectrum's
    resolution error); the returned trend is what a limit-point argument
    inspects: picks that converge land within resolution of the limit.
    """
    if len(spectra) != len(picks):
        raise InvalidParameterError(
            f"{len(picks)} picks for {len(spectra)} spectra"
        )
    for i, (s, x) in enumerate(zip(spectra, picks)):
        if point_distance(float(x), s) > s.resolution_error + 1e-9:
            raise InvalidParameterError(
                f"pick {x!r} (index {i}) lies outside its spectrum"
            )
    return tuple(point_distance(float(x), limit) for x in picks)


def tenmartini_premise(
    specs: Sequence[OperatorSpec],
    epsilon: float,
    period_cap: int | None = None,
    limit_deviation: float | None = None,
) -> PremiseReport:
    """Check a bounded-period family against the forced deviation bound.

    `limit_deviation` defaults to the deviation of the last (finest)
    family member's potential; for a cosine family at coupling lambda the
    caller should pass lambda, the true limit deviation.
    """
    if not specs:
        raise InvalidParameterError("premise check needs at least one spec")
    epsilon = float(epsilon)
    if not math.isfinite(epsilon) or epsilon <= 0.0:
        raise InvalidParameterError(f"epsilon must be > 0, got {epsilon!r}")
    periods = [s.period for s in specs]
    cap = max(periods) if period_cap is None else period_cap
    if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
        raise InvalidParameterError(f"period cap must be an integer >= 1, got {cap!r}")
    bounded = max(periods) <= cap
    if limit_deviation is None:
        limit_deviation = best_constant(specs[-1].v)[1]
    limit_deviation = float(limit_deviation)
    bound = 2.0 * epsilon * (cap - 1)
    compatible = limit_deviation <= bound + 1e-12
    if cap > 1:
        threshold = limit_deviation / (2.0 * (cap - 1))
    else:
        threshold = math.inf if limit_deviation > 0.0 else 0.0
    return PremiseReport(
        period_cap=cap,
        periods_bounded=bounded,
        epsilon=epsilon,
        bound=bound,
        limit_deviation=limit_deviation,
        compatible=compatible,
        incompatibility_threshold=threshold,
    )
