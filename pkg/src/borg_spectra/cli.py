"""Command-line front end: parse operator specs, run the pipelines, and
emit CSV / JSON / SVG artifacts.

Subcommands: spectrum, pseudospectrum, borg, mathieu, oracle.
Exit codes: 0 on success, 2 on bad input, 3 when a check command hits a
theorem-hypothesis violation.  All CSV/JSON output is deterministic for a
fixed seed; files are written atomically (temp file + rename).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .borg import (
    BorgReport,
    best_constant,
    converse_from_spectrum,
    forward_from_spectrum,
    report_json_dict,
)
from .errors import (
    BorgSpectraError,
    HypothesisViolationError,
    InvalidParameterError,
    InvalidSpecError,
)
from .mathieu import approximant_sweep
from .oracle import truncation_compare
from .render import pseudospectrum_svg, spectrum_svg, stacked_svg
from .spectra import (
    band_table,
    bands_csv_rows,
    compute_spectrum,
    gap_report,
    pseudospectrum_intervals,
    spectrum_intervals,
    spectrum_json_dict,
)
from .symbols import OperatorKind, OperatorSpec
from .util import atomic_write_text

FORMATS = ("csv", "json", "svg")


@dataclass(frozen=True)
class RunConfig:
    """Validated bundle of everything one subcommand invocation needs."""

    command: str
    spec: OperatorSpec | None = None
    grid: int = 1024
    epsilons: tuple[float, ...] = ()
    alpha: float | None = None
    count: int = 5
    coupling: float = 1.0
    blocks: tuple[int, ...] = (4, 16, 64)
    out_dir: Path = Path(".")
    formats: tuple[str, ...] = FORMATS
    seed: int = 0
    check: str = "both"
    random_count: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.grid, int) or self.grid < 2:
            raise InvalidParameterError(f"--grid must be an integer >= 2, got {self.grid!r}")
        for eps in self.epsilons:
            if not eps > 0.0:
                raise InvalidParameterError(f"--epsilon must be > 0, got {eps!r}")
        for fmt in self.formats:
            if fmt not in FORMATS:
                raise InvalidParameterError(f"unknown format {fmt!r}")
        for n in self.blocks:
            if not isinstance(n, int) or n < 1:
                raise InvalidParameterError(f"--blocks must be integers >= 1, got {n!r}")


def _load_spec(value: str) -> OperatorSpec:
    """Accept either a path to a JSON spec or an inline JSON object."""
    text = value
    if not value.lstrip().startswith("{"):
        path = Path(value)
        if not path.exists():
            raise InvalidSpecError(f"spec file not found: {value}")
        text = path.read_text()
    return OperatorSpec.from_json(text)


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = [f"# borg-spectra {__version__}", ",".join(header)]
    for row in rows:
        lines.append(",".join("" if x is None else repr(x) if isinstance(x, float) else str(x) for x in row))
    return "\n".join(lines) + "\n"


def _json_text(obj: dict) -> str:
    return json.dumps({"version": __version__, **obj}, indent=2) + "\n"


def _write(cfg: RunConfig, name: str, text: str, paths: list[Path]) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    path = cfg.out_dir / name
    atomic_write_text(path, text)
    paths.append(path)


def cmd_spectrum(cfg: RunConfig) -> list[Path]:
    table = band_table(cfg.spec, 0, cfg.grid)
    spectrum = spectrum_intervals(table)
    report = gap_report(spectrum)
    paths: list[Path] = []
    if "json" in cfg.formats:
        payload = spectrum_json_dict(spectrum)
        payload["gap_report"] = {
            "connected": report.connected,
            "gaps": [list(g) for g in report.gaps],
            "epsilon_star": report.epsilon_star,
        }
        _write(cfg, "spectrum.json", _json_text(payload), paths)
    if "csv" in cfg.formats:
        rows = [(theta, j, lam) for theta, j, lam in bands_csv_rows(table)]
        _write(cfg, "bands.csv", _csv(("theta", "band_index", "lambda"), rows), paths)
    if "svg" in cfg.formats:
        title = f"spectrum: {cfg.spec.kind.value}, period {cfg.spec.period}, grid {cfg.grid}"
        _write(cfg, "spectrum.svg", spectrum_svg(spectrum, title, __version__), paths)
    return paths


def cmd_pseudospectrum(cfg: RunConfig) -> list[Path]:
    if not cfg.epsilons:
        raise InvalidParameterError("pseudospectrum needs at least one --epsilon")
    spectrum = compute_spectrum(cfg.spec, cfg.grid)
    paths: list[Path] = []
    for eps in cfg.epsilons:
        fattened = pseudospectrum_intervals(spectrum, eps)
        report = gap_report(fattened)
        tag = repr(float(eps))
        if "json" in cfg.formats:
            payload = {
                "epsilon": eps,
                "intervals": [[lo, hi] for lo, hi in fattened.intervals],
                "resolution_error": fattened.resolution_error,
                "gap_report": {
                    "connected": report.connected,
                    "gaps": [list(g) for g in report.gaps],
                    "epsilon_star": report.epsilon_star,
                },
            }
            _write(cfg, f"pseudospectrum_{tag}.json", _json_text(payload), paths)
        if "svg" in cfg.formats:
            title = (
                f"pseudospectrum at eps={tag}: {cfg.spec.kind.value}, "
                f"period {cfg.spec.period}"
            )
            _write(
                cfg,
                f"pseudospectrum_{tag}.svg",
                pseudospectrum_svg(spectrum, eps, title, __version__),
                paths,
            )
    return paths


def _random_spec(rng: np.random.Generator) -> OperatorSpec:
    p = int(rng.integers(2, 9))
    v = tuple(rng.uniform(-1.0, 1.0, size=p))
    if int(rng.integers(0, 2)) == 1:
        a = tuple(rng.uniform(0.5, 2.0, size=p))
        return OperatorSpec(kind=OperatorKind.JACOBI, period=p, v=v, a=a)
    return OperatorSpec(kind=OperatorKind.SCHRODINGER, period=p, v=v)


def _random_suite(cfg: RunConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    reports = []
    violations = 0
    for _ in range(cfg.random_count):
        spec = _random_spec(rng)
        spectrum = compute_spectrum(spec, cfg.grid)
        star = gap_report(spectrum).epsilon_star
        if star > 0.0:
            fwd = forward_from_spectrum(spec, spectrum, star)
            reports.append(report_json_dict(fwd))
            violations += 0 if fwd.satisfied else 1
        dev = best_constant(spec.v)[1]
        if spec.kind is OperatorKind.JACOBI:
            a_dev = best_constant(spec.a)[1]
            dev = max(dev, a_dev, (dev + 2.0 * a_dev) / 2.0)
        if dev > 0.0:
            con = converse_from_spectrum(spec, spectrum, dev)
            reports.append(report_json_dict(con))
            violations += 0 if con.satisfied else 1
    return {
        "seed": cfg.seed,
        "instances": cfg.random_count,
        "violations": violations,
        "reports": reports,
    }


def cmd_borg(cfg: RunConfig) -> list[Path]:
    paths: list[Path] = []
    if cfg.random_count is not None:
        payload = _random_suite(cfg)
        _write(cfg, "borg_random.json", _json_text(payload), paths)
        return paths
    if not cfg.epsilons:
        raise InvalidParameterError("borg needs at least one --epsilon")
    spectrum = compute_spectrum(cfg.spec, cfg.grid)
    reports: list[BorgReport] = []
    for eps in cfg.epsilons:
        if cfg.check in ("forward", "both"):
            reports.append(forward_from_spectrum(cfg.spec, spectrum, eps))
        if cfg.check in ("converse", "both"):
            if (
                cfg.spec.kind is OperatorKind.LAURENT_GENERAL
                and cfg.check == "both"
            ):
                continue  # no converse exists; only fail when asked explicitly
            reports.append(converse_from_spectrum(cfg.spec, spectrum, eps))
    payload = {"reports": [report_json_dict(r) for r in reports]}
    _write(cfg, "borg.json", _json_text(payload), paths)
    return paths


def cmd_mathieu(cfg: RunConfig) -> list[Path]:
    if cfg.alpha is None:
        raise InvalidParameterError("mathieu needs --alpha")
    sweep = approximant_sweep(
        cfg.alpha, cfg.count, cfg.grid, epsilons=cfg.epsilons, coupling=cfg.coupling
    )
    paths: list[Path] = []
    if "csv" in cfg.formats:
        rows = []
        for i, rep in enumerate(sweep.reports):
            d_next = (
                sweep.hausdorff_next[i] if i < len(sweep.hausdorff_next) else None
            )
            rows.append(
                (rep.convergent.b, rep.period, rep.gap_count, rep.epsilon_star, d_next)
            )
        _write(
            cfg,
            "mathieu_sweep.csv",
            _csv(("b", "period", "gap_count", "epsilon_star", "d_H_to_next"), rows),
            paths,
        )
    if "json" in cfg.formats:
        payload = {
            "alpha": sweep.alpha,
            "coupling": sweep.coupling,
            "truncated": sweep.truncated,
            "hausdorff_next": list(sweep.hausdorff_next),
            "potential_sup_next": list(sweep.potential_sup_next),
            "approximants": [
                {
                    "a": rep.convergent.a,
                    "b": rep.convergent.b,
                    "period": rep.period,
                    "offbyone_discrepancy": rep.offbyone_discrepancy,
                    "gap_count": rep.gap_count,
                    "epsilon_star": rep.epsilon_star,
                    "potential_distance": rep.potential_distance,
                    "potential_distance_bound": rep.potential_distance_bound,
                    "pseudo_connected": {
                        repr(k): v for k, v in rep.pseudo_connected.items()
                    },
                    "intervals": [[lo, hi] for lo, hi in rep.spectrum.intervals],
                    "resolution_error": rep.spectrum.resolution_error,
                    "grid_warning": rep.grid_warning,
                }
                for rep in sweep.reports
            ],
        }
        _write(cfg, "mathieu_sweep.json", _json_text(payload), paths)
    if "svg" in cfg.formats:
        rows = [
            (f"{rep.convergent.a}/{rep.convergent.b}", rep.spectrum)
            for rep in sweep.reports
        ]
        title = f"approximant spectra, alpha={cfg.alpha!r}, coupling={cfg.coupling!r}"
        _write(cfg, "mathieu_sweep.svg", stacked_svg(rows, title, __version__), paths)
    return paths


def cmd_oracle(cfg: RunConfig) -> list[Path]:
    comparison = truncation_compare(cfg.spec, cfg.blocks, cfg.grid)
    paths: list[Path] = []
    if "csv" in cfg.formats:
        rows = []
        for row in comparison.rows:
            for i, (lam, dist) in enumerate(zip(row.eigenvalues, row.distances), 1):
                rows.append((row.blocks, i, float(lam), float(dist)))
        _write(
            cfg,
            "oracle.csv",
            _csv(
                ("n", "eigenvalue_index", "eigenvalue", "dist_to_symbol_spectrum"),
                rows,
            ),
            paths,
        )
    if "json" in cfg.formats:
        payload = {
            "spectrum": spectrum_json_dict(comparison.spectrum),
            "rows": [
                {
                    "blocks": row.blocks,
                    "size": row.size,
                    "one_sided": row.one_sided,
                    "hausdorff": row.hausdorff,
                }
                for row in comparison.rows
            ],
        }
        _write(cfg, "oracle.json", _json_text(payload), paths)
    return paths


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "pseudospectrum": cmd_pseudospectrum,
    "borg": cmd_borg,
    "mathieu": cmd_mathieu,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borg-spectra",
        description="Band spectra, pseudospectra, and gap certificates of "
        "periodic discrete Schrodinger / Jacobi / block Laurent operators.",
    )
    parser.add_argument("--version", action="version", version=f"borg-spectra {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, spec: bool = True) -> None:
        if spec:
            p.add_argument("--spec", required=False, help="path to a JSON operator spec, or an inline JSON object")
        p.add_argument("--grid", type=int, default=1024, help="theta grid size N (default 1024)")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--format", default="csv,json,svg", help="comma-separated subset of csv,json,svg")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized modes")

    p_spec = sub.add_parser("spectrum", help="band table and spectrum intervals")
    common(p_spec)

    p_pseudo = sub.add_parser("pseudospectrum", help="epsilon-fattened spectrum and gap report")
    common(p_pseudo)
    p_pseudo.add_argument("--epsilon", type=float, action="append", default=[], help="fattening radius (repeatable)")

    p_borg = sub.add_parser("borg", help="forward/converse deviation certificates")
    common(p_borg)
    p_borg.add_argument("--epsilon", type=float, action="append", default=[], help="certificate epsilon (repeatable)")
    p_borg.add_argument("--check", choices=("forward", "converse", "both"), default="both")
    p_borg.add_argument("--random", type=int, default=None, metavar="COUNT", help="run a seeded randomized certificate suite instead")

    p_mat = sub.add_parser("mathieu", help="continued-fraction approximant sweep")
    common(p_mat, spec=False)
    p_mat.add_argument("--alpha", type=float, required=True, help="target frequency")
    p_mat.add_argument("--count", type=int, default=5, help="number of convergents")
    p_mat.add_argument("--coupling", type=float, default=1.0, help="cosine coupling strength")
    p_mat.add_argument("--epsilon", type=float, action="append", default=[], help="also report pseudospectrum connectivity at this epsilon (repeatable)")

    p_oracle = sub.add_parser("oracle", help="finite truncations vs. the symbol spectrum")
    common(p_oracle)
    p_oracle.add_argument("--blocks", type=int, action="append", default=[], help="truncation block count (repeatable; default 4 16 64)")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    spec = None
    if getattr(args, "spec", None) is not None:
        spec = _load_spec(args.spec)
    needs_spec = args.command in ("spectrum", "pseudospectrum", "oracle") or (
        args.command == "borg" and getattr(args, "random", None) is None
    )
    if needs_spec and spec is None:
        raise InvalidSpecError(f"{args.command} needs --spec")
    formats = tuple(f.strip() for f in args.format.split(",") if f.strip())
    return RunConfig(
        command=args.command,
        spec=spec,
        grid=args.grid,
        epsilons=tuple(getattr(args, "epsilon", []) or []),
        alpha=getattr(args, "alpha", None),
        count=getattr(args, "count", 5),
        coupling=getattr(args, "coupling", 1.0),
        blocks=tuple(getattr(args, "blocks", []) or [4, 16, 64]),
        out_dir=Path(args.out),
        formats=formats,
        seed=args.seed,
        check=getattr(args, "check", "both"),
        random_count=getattr(args, "random", None),
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        paths = _COMMANDS[cfg.command](cfg)
    except HypothesisViolationError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return 3
    except (InvalidSpecError, InvalidParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BorgSpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for path in paths:
        print(path)
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
