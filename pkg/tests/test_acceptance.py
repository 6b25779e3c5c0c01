"""Acceptance gate: one test per shipped guarantee, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -s` to see the summary lines.
Each test computes everything first, prints exactly one line

    ACCEPTANCE <n>: <PASS|FAIL> - <measured details>

and only then asserts, so the measured numbers are visible either way.

Known red: criterion 8's one-sided-distance monotonicity genuinely fails
for the period-5 staircase potential.  Its finite sections host an
edge-localized eigenvector whose eigenvalue converges into a spectral
gap, so the distance *grows* with section size before plateauing
(0.0197 -> 0.0260 at sizes 4 -> 64, grid 1024).  The reported number is
real behaviour, not a bug; see README and the section-size sweep in
scripts/truncation_sweep.py.
"""
import math
import time

import numpy as np
import pytest

from borg_spectra import (
    best_constant,
    compute_spectrum,
    converse_from_spectrum,
    forward_from_spectrum,
    gap_report,
    hermitian_eigenvalues,
    interlacing_report,
    interlacing_submatrix,
    operator_norm,
    pseudospectrum_intervals,
    tenmartini_premise,
    trace_gap,
    truncate,
    truncation_compare,
    approximant_sweep,
    mathieu_potential,
    convergents,
)
from borg_spectra.cli import main as cli_main

from conftest import jacobi, random_spec, schrodinger

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
STAIRCASE = schrodinger([1.0, 1.1, 1.2, 1.3, 1.4])
RAMP10 = schrodinger([0.05 * j for j in range(10)])


def record(n: int, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {n}: {detail}"


def test_criterion_01_staircase_example():
    t0 = time.perf_counter()
    spectrum = compute_spectrum(STAIRCASE, 1024)
    base = gap_report(spectrum)
    fat = gap_report(pseudospectrum_intervals(spectrum, 0.2))
    c, dev = best_constant(STAIRCASE.v)
    fwd = forward_from_spectrum(STAIRCASE, spectrum, 0.2)
    elapsed = time.perf_counter() - t0
    ok = (
        not base.connected
        and len(base.gaps) >= 1
        and fat.connected
        and (c, dev) == (1.2, pytest.approx(0.2, abs=1e-15))
        and fwd.satisfied
        and fwd.bound == pytest.approx(1.6, abs=1e-15)
        and elapsed < 1.0
    )
    record(
        1,
        ok,
        f"gaps={len(base.gaps)}, 0.2-fattened connected={fat.connected}, "
        f"best_c=({c}, {dev}), forward bound={fwd.bound} "
        f"satisfied={fwd.satisfied}, {elapsed:.2f}s < 1s",
    )


def test_criterion_02_ramp_example():
    t0 = time.perf_counter()
    spectrum = compute_spectrum(RAMP10, 1024)
    base = gap_report(spectrum)
    fat = gap_report(pseudospectrum_intervals(spectrum, 0.225))
    c, dev = best_constant(RAMP10.v)
    elapsed = time.perf_counter() - t0
    ok = (
        not base.connected
        and fat.connected
        and c == pytest.approx(0.225, abs=1e-15)
        and dev == pytest.approx(0.225, abs=1e-15)
        and elapsed < 1.0
    )
    record(
        2,
        ok,
        f"gaps={len(base.gaps)}, 0.225-fattened connected={fat.connected}, "
        f"best_c=({c}, {dev}), {elapsed:.2f}s < 1s",
    )


def test_criterion_03_two_site_closed_form():
    checks = []
    for delta in (0.5, 1.0, 2.0):
        spec = schrodinger([0.0, delta])
        spectrum = compute_spectrum(spec, 1024)
        tol = 2.0 * (spectrum.resolution_error + 1e-9)
        report = gap_report(spectrum)
        width = report.gaps[0][1] - report.gaps[0][0] if report.gaps else 0.0
        small = gap_report(pseudospectrum_intervals(spectrum, 0.4 * delta))
        large = gap_report(pseudospectrum_intervals(spectrum, 0.6 * delta))
        checks.append(
            (
                abs(width - delta) <= tol,
                abs(report.epsilon_star - delta / 2.0) <= tol,
                not small.connected,
                large.connected,
                width,
                report.epsilon_star,
            )
        )
    ok = all(all(c[:4]) for c in checks)
    detail = "; ".join(
        f"delta={d}: width={c[4]:.6f}, eps*={c[5]:.6f}, "
        f"0.4d/0.6d connected={not c[2]}/{c[3]}"
        for d, c in zip((0.5, 1.0, 2.0), checks)
    )
    record(3, ok, detail)


def test_criterion_04_constant_potential_bands():
    checks = []
    for p, c in ((1, 0.0), (3, -1.5), (7, 2.25)):
        spectrum = compute_spectrum(schrodinger([c] * p), 1024)
        tol = 1e-6 + spectrum.resolution_error
        lo, hi = spectrum.intervals[0][0], spectrum.intervals[-1][1]
        checks.append(
            (
                len(spectrum.intervals) == 1,
                abs(lo - (c - 2.0)) <= tol,
                abs(hi - (c + 2.0)) <= tol,
            )
        )
    ok = all(all(c) for c in checks)
    record(
        4,
        ok,
        "single interval within 1e-6+padding of [c-2, c+2] for p in (1, 3, 7): "
        + ", ".join(str(all(c)) for c in checks),
    )


def test_criterion_05_randomized_theorem_suite():
    t0 = time.perf_counter()
    rng = np.random.default_rng(12345)
    forward_checked = forward_vacuous = 0
    worst_forward_margin = math.inf
    converse_checked = converse_vacuous = guarded = 0
    worst_slack = math.inf
    violations = 0
    for _ in range(500):
        spec = random_spec(rng)
        spectrum = compute_spectrum(spec, 1024)
        star = gap_report(spectrum).epsilon_star
        if star > 0.0:
            fwd = forward_from_spectrum(spec, spectrum, star)
            forward_checked += 1
            if fwd.connected:
                worst_forward_margin = min(worst_forward_margin, fwd.margin)
                if fwd.margin < -1e-8:
                    violations += 1
        else:
            forward_vacuous += 1
        dev = best_constant(spec.v)[1]
        a_dev = best_constant(spec.a)[1] if spec.a is not None else 0.0
        # Tight epsilon that satisfies the converse hypothesis exactly.
        eps_tight = max(dev, a_dev, (dev + 2.0 * a_dev) / 2.0)
        # Per-sequence epsilon alone; the combined off-diagonal bound can
        # fail here, in which case the check must be vacuous, not wrong.
        eps_literal = max(dev, a_dev)
        if eps_tight > 0.0:
            con = converse_from_spectrum(spec, spectrum, eps_tight)
            converse_checked += 1
            if not con.hypothesis_met:
                converse_vacuous += 1
            else:
                worst_slack = min(worst_slack, con.margin)
            if not con.satisfied:
                violations += 1
        if eps_literal > 0.0:
            lit = converse_from_spectrum(spec, spectrum, eps_literal)
            if not lit.hypothesis_met:
                guarded += 1
            if not lit.satisfied:
                violations += 1
    elapsed = time.perf_counter() - t0
    ok = violations == 0 and elapsed < 60.0
    record(
        5,
        ok,
        f"500 instances seed 12345: forward checked={forward_checked} "
        f"(vacuous {forward_vacuous}), worst margin={worst_forward_margin:+.3e}; "
        f"converse checked={converse_checked} (hypothesis-vacuous "
        f"{converse_vacuous}), worst slack={worst_slack:+.3e}, "
        f"combined-bound-guarded literal runs={guarded}; "
        f"violations={violations}, {elapsed:.1f}s < 60s",
    )


def test_criterion_06_interlacing_and_weyl_suites():
    rng = np.random.default_rng(606)
    worst_interlace = 0.0
    for _ in range(100):
        spec = random_spec(rng)
        rep = interlacing_report(spec, int(rng.integers(0, spec.period)), 256)
        worst_interlace = max(worst_interlace, rep.worst_violation)
    worst_weyl = -math.inf
    for _ in range(100):
        n = int(rng.integers(2, 12))
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        m = (m + m.conj().T) / 2.0
        e = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        e = (e + e.conj().T) / 2.0
        lam = hermitian_eigenvalues(m).values
        mu = hermitian_eigenvalues(m + e).values
        worst_weyl = max(worst_weyl, float(np.max(np.abs(lam - mu))) - operator_norm(e))
    ok = worst_interlace <= 1e-9 and worst_weyl <= 1e-10
    record(
        6,
        ok,
        f"100 specs worst interlacing violation={worst_interlace:.3e} <= 1e-9; "
        f"100 pairs worst Weyl excess={worst_weyl:+.3e} <= 1e-10",
    )


def test_criterion_07_trace_identity():
    rng = np.random.default_rng(707)
    worst = 0.0
    for _ in range(50):
        spec = random_spec(rng)
        v = np.asarray(spec.v)
        p = spec.period
        window = np.arange(p - 1)
        for i in range(p):
            got = trace_gap(spec, 0, i).difference
            expected = abs(float(np.sum(v[window % p]) - np.sum(v[(window + i) % p])))
            worst = max(worst, abs(got - expected))
    ok = worst <= 1e-12
    record(
        7,
        ok,
        f"50 specs, all shifts: worst |trace gap - telescoped sum|={worst:.3e} <= 1e-12",
    )


def test_criterion_08_truncation_containment():
    sizes = [4, 16, 64]
    details = []
    all_ok = True
    for spec, label in ((STAIRCASE, "staircase"), (schrodinger([0.0, 1.0]), "two-site")):
        comparison = truncation_compare(spec, sizes, 1024)
        one_sided = [row.one_sided for row in comparison.rows]
        nonincreasing = all(a >= b - 1e-12 for a, b in zip(one_sided, one_sided[1:]))
        interlaced = True
        for small, big in zip(sizes, sizes[1:]):
            p = spec.period
            lam_s = hermitian_eigenvalues(truncate(spec, small).entries).values
            lam_b = hermitian_eigenvalues(truncate(spec, big).entries).values
            d = (big - small) * p
            n = small * p
            interlaced = interlaced and bool(
                np.all(lam_b[:n] <= lam_s + 1e-9)
                and np.all(lam_s <= lam_b[d : d + n] + 1e-9)
            )
        all_ok = all_ok and nonincreasing and interlaced
        details.append(
            f"{label}: one-sided={['%.6f' % x for x in one_sided]} "
            f"nonincreasing={nonincreasing}, cross-size interlacing={interlaced}"
        )
    record(8, all_ok, "; ".join(details))


def test_criterion_09_golden_mean_sweep():
    t0 = time.perf_counter()
    sweep = approximant_sweep(GOLDEN, 5, 1024, coupling=1.0)
    bs = [r.convergent.b for r in sweep.reports]
    periods = [r.period for r in sweep.reports]
    flags = [r.offbyone_discrepancy for r in sweep.reports]
    hausdorff_ok = all(
        dh <= sup + 1e-9
        for dh, sup in zip(sweep.hausdorff_next, sweep.potential_sup_next)
    )
    gap_counts = [r.gap_count for r in sweep.reports]
    pots = [mathieu_potential(c, 1.0) for c in convergents(GOLDEN, 5).convergents]
    premise = tenmartini_premise(pots, 0.1, period_cap=5)
    elapsed = time.perf_counter() - t0
    ok = (
        bs == [1, 2, 3, 5, 8]
        and periods == bs
        and all(flags)
        and hausdorff_ok
        and all(g >= 0 for g in gap_counts)
        and premise.bound == pytest.approx(0.8)
        and premise.limit_deviation == pytest.approx(1.0)
        and not premise.compatible
        and elapsed < 30.0
    )
    record(
        9,
        ok,
        f"periods={periods} == denominators, off-by-one flags={all(flags)}, "
        f"d_H<=sup-dist={hausdorff_ok}, gap counts={gap_counts}, premise: "
        f"deviation {premise.limit_deviation} > bound {premise.bound} -> "
        f"incompatible={not premise.compatible}, {elapsed:.1f}s < 30s",
    )


def test_criterion_10_determinism(tmp_path):
    spec = '{"kind": "schrodinger", "period": 5, "v": [1.0, 1.1, 1.2, 1.3, 1.4]}'
    commands = [
        ("spectrum", ["spectrum", "--spec", spec, "--grid", "512",
                      "--format", "csv,json"], ["spectrum.json", "bands.csv"]),
        ("borg-random", ["borg", "--random", "20", "--seed", "99",
                         "--grid", "256"], ["borg_random.json"]),
        ("mathieu", ["mathieu", "--alpha", repr(GOLDEN), "--count", "4",
                     "--grid", "256", "--format", "csv,json"],
         ["mathieu_sweep.csv", "mathieu_sweep.json"]),
        ("oracle", ["oracle", "--spec", spec, "--grid", "256", "--blocks", "4",
                    "--blocks", "16", "--format", "csv,json"],
         ["oracle.csv", "oracle.json"]),
    ]
    mismatches = []
    for label, argv, names in commands:
        a, b = tmp_path / f"{label}-a", tmp_path / f"{label}-b"
        for out in (a, b):
            code = cli_main(argv + ["--out", str(out)])
            if code != 0:
                mismatches.append(f"{label}: exit {code}")
        for name in names:
            if (a / name).read_bytes() != (b / name).read_bytes():
                mismatches.append(f"{label}/{name}")
    ok = not mismatches
    record(
        10,
        ok,
        "byte-identical CSV/JSON across repeated runs of "
        f"{len(commands)} commands"
        + ("" if ok else f"; mismatches: {mismatches}"),
    )
