#!/usr/bin/env python3
"""Why one-sided truncation distance is NOT monotone for gapped operators.

Dirichlet sections of the period-5 staircase operator host an eigenvector
localized at the cut: its eigenvalue sits inside the operator's first
spectral gap and converges to a point strictly interior to it as the
section grows.  The one-sided distance max_mu dist(mu, sigma_symbol)
therefore *increases* with section size before plateauing at the
boundary state's limit depth (about 0.026 here) - edge effects change
the spectrum near the cut, they do not fade.

The script prints the distance sweep, then exhibits the culprit: the
in-gap eigenvalue and the fraction of its eigenvector's mass living in
the first 20 sites.  Wrapping the section periodically removes the cut
and with it the boundary state - the wrapped distances are zero to grid
resolution - confirming the localization explanation.
"""
import argparse

import numpy as np

from borg_spectra import (
    compute_spectrum,
    gap_report,
    hermitian_eigenvalues,
    points_distance,
    truncate,
    truncation_compare,
)
from borg_spectra.symbols import OperatorKind, OperatorSpec


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=1024)
    parser.add_argument("--blocks", type=int, nargs="+", default=[4, 8, 16, 32, 64, 128])
    args = parser.parse_args()

    spec = OperatorSpec(
        kind=OperatorKind.SCHRODINGER, period=5, v=(1.0, 1.1, 1.2, 1.3, 1.4)
    )
    spectrum = compute_spectrum(spec, args.grid)
    gaps = [(lo, hi) for lo, hi, _ in gap_report(spectrum).gaps]
    print(f"symbol spectrum gaps: {[(round(lo, 6), round(hi, 6)) for lo, hi in gaps]}")
    print()

    print(f"{'blocks':>6} {'size':>6} {'one-sided (Dirichlet)':>22} {'one-sided (wrapped)':>20}")
    comparison = truncation_compare(spec, args.blocks, args.grid)
    for row in comparison.rows:
        wrapped = truncate(spec, row.blocks, periodic=True)
        wrapped_vals = hermitian_eigenvalues(wrapped.entries).values
        wrapped_dist = float(np.max(points_distance(wrapped_vals, spectrum)))
        print(
            f"{row.blocks:>6} {row.size:>6} {row.one_sided:>22.6f} "
            f"{wrapped_dist:>20.6f}"
        )
    print()

    blocks = args.blocks[-1]
    section = truncate(spec, blocks)
    result = hermitian_eigenvalues(section.entries)
    dists = points_distance(result.values, spectrum)
    worst = int(np.argmax(dists))
    value = result.values[worst]
    vector = np.linalg.eigh(section.entries)[1][:, worst]
    mass = float(np.sum(vector[:20] ** 2))
    in_gap = [lo < value < hi for lo, hi in gaps]
    print(
        f"worst eigenvalue at {blocks} blocks: {value:.12f} "
        f"(distance {dists[worst]:.6f}), inside gap: {any(in_gap)}"
    )
    print(
        f"eigenvector mass in the first 20 of {section.size} sites: {mass:.1%} "
        "- a state bound to the cut, not a discretization artifact"
    )


if __name__ == "__main__":
    main()
