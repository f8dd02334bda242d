"""Command-line interface.

Subcommands: coeffs, purity, surface, reduce, verify.  Angles are read
as radians; outputs are deterministic (identical invocations produce
byte-identical files).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, replace

import numpy as np

from . import verify as verify_mod
from .docio import render_json
from .entanglement import (
    Bipartition,
    closed_form_purity,
    jacobi_coefficients,
    makarov_lambda,
    mode_spectrum,
    purity,
)
from .oscillator import as_excitation, mixing_matrix
from .schmidt import coefficients_k16, coefficients_sum, to_document
from .specfun import DegreeLimitError
from .surface import SurfaceRequest, render_csv, surface_grid

__all__ = ["RunConfig", "main"]


@dataclass(frozen=True)
class RunConfig:
    """Run-wide settings; flags override values read from --config."""

    hbar: float = 1.0
    mean_mass: float = 1.0
    varpi: float = 1.0
    tolerance: float | None = None
    quadrature_order: int | None = None
    seed: int = 7
    skip: tuple[str, ...] = ()
    format: str | None = None
    out: str | None = None

    def validate(self) -> "RunConfig":
        if self.tolerance is not None and self.tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if any(v <= 0 for v in (self.hbar, self.mean_mass, self.varpi)):
            raise ValueError("unit scales must be positive")
        return self


_CONFIG_KEYS = {
    "hbar": float,
    "mean_mass": float,
    "varpi": float,
    "tolerance": float,
    "quadrature_order": int,
    "seed": int,
    "skip": lambda s: tuple(part.strip() for part in s.split(",") if part.strip()),
    "format": str,
    "out": str,
}


def load_config(path: str) -> dict:
    """Parse a key=value file (one pair per line, '#' comments)."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = _CONFIG_KEYS[key](value.strip())
    return values


def _parse_triple(text: str, kind, flag: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"{flag} expects three comma-separated values, got {text!r}")
    try:
        return tuple(kind(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"{flag}: {exc}") from None


def _parse_range(text: str, flag: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"{flag} expects lo,hi in radians, got {text!r}")
    return float(parts[0]), float(parts[1])


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _single_axis(exc) -> str | None:
    excited = [i for i, v in enumerate(exc) if v > 0]
    return ("n1", "n2", "n3")[excited[0]] if len(excited) == 1 else None


# ---------------------------------------------------------------------------
# subcommands


def cmd_coeffs(args, cfg: RunConfig) -> int:
    exc = as_excitation(_parse_triple(args.n, int, "--n"))
    angles = _parse_triple(args.angles, float, "--angles")
    mix = mixing_matrix(angles)

    if args.route == "sum":
        matrix = coefficients_sum(exc, mix)
        doc = to_document(matrix)
        doc["route"] = "sum"
    elif args.route == "k16":
        matrix = coefficients_k16(exc, mix)
        doc = to_document(matrix)
        doc["route"] = "k16"
        doc["fallback_entries"] = matrix.fallback_count
    else:
        matrix = coefficients_sum(exc, mix)
        closed = coefficients_k16(exc, mix)
        doc = to_document(matrix)
        doc["route"] = "both"
        doc["fallback_entries"] = closed.fallback_count
        doc["max_route_discrepancy"] = float(
            np.abs(matrix.amplitudes - closed.amplitudes).max()
        )

    if cfg.format == "csv":
        lines = ["k,l,m,value"]
        lines += [f"{k},{l},{m},{v:.17g}" for k, l, m, v in matrix.items()]
        _write_text("\n".join(lines) + "\n", cfg.out)
    else:
        _write_text(render_json(doc), cfg.out)
    return 0


def cmd_purity(args, cfg: RunConfig) -> int:
    exc = as_excitation(_parse_triple(args.n, int, "--n"))
    angles = _parse_triple(args.angles, float, "--angles")
    bip = Bipartition(args.bipartition)
    axis = _single_axis(exc)

    if args.method == "closed" and axis is None:
        print(
            "error: the closed method applies only to single-axis excitations "
            "(exactly one of n1, n2, n3 nonzero); use --method direct",
            file=sys.stderr,
        )
        return 2

    spectrum = mode_spectrum(coefficients_sum(exc, mixing_matrix(angles)), bip)
    direct = purity(spectrum)
    closed = (
        closed_form_purity(axis, bip, exc.total, angles) if axis is not None else None
    )
    chosen = closed if args.method == "closed" else direct

    doc = {
        "n": list(exc),
        "angles": list(angles),
        "bipartition": bip.value,
        "method": args.method,
        "spectrum": [float(v) for v in spectrum.values],
        "purity": chosen,
    }
    if closed is not None:
        doc["purity_direct"] = direct
        doc["purity_closed"] = closed
        doc["difference"] = abs(direct - closed)

    if cfg.format == "doc":
        _write_text(render_json(doc), cfg.out)
    elif cfg.format == "csv":
        lines = ["quantity,value"]
        lines += [f"spectrum_{i},{v:.17g}" for i, v in enumerate(spectrum.values)]
        lines.append(f"purity,{chosen:.17g}")
        if closed is not None:
            lines.append(f"purity_direct,{direct:.17g}")
            lines.append(f"purity_closed,{closed:.17g}")
            lines.append(f"difference,{abs(direct - closed):.17g}")
        _write_text("\n".join(lines) + "\n", cfg.out)
    else:
        lines = [
            f"n = {tuple(exc)}, angles = ({angles[0]:.9g}, {angles[1]:.9g}, {angles[2]:.9g}), "
            f"bipartition {bip.value}",
            "spectrum: " + ", ".join(f"{v:.9g}" for v in spectrum.values),
            f"purity ({args.method}): {chosen:.9g}",
        ]
        if closed is not None:
            lines.append(
                f"direct {direct:.9g} / closed {closed:.9g} "
                f"(difference {abs(direct - closed):.3g})"
            )
        _write_text("\n".join(lines) + "\n", cfg.out)
    return 0


def cmd_surface(args, cfg: RunConfig) -> int:
    if cfg.format == "doc":
        print("error: surface output is CSV only", file=sys.stderr)
        return 2
    request = SurfaceRequest(
        bipartition=Bipartition(args.bipartition),
        excitation=as_excitation(_parse_triple(args.n, int, "--n")),
        fixed_vphi=args.vphi,
        grid_points=args.grid_points,
        theta_range=_parse_range(args.theta_range, "--theta-range"),
        phi_range=_parse_range(args.phi_range, "--phi-range"),
    )
    thetas, phis, grid = surface_grid(request)
    csv_text = render_csv(thetas, phis, grid)
    try:
        _write_text(csv_text, cfg.out)
    except OSError as exc:
        print(f"error: cannot write {cfg.out!r}: {exc}", file=sys.stderr)
        return 1
    summary = f"min={grid.min():.9g} max={grid.max():.9g}"
    # keep a stdout CSV stream clean; the summary goes to stderr then
    print(summary, file=sys.stderr if cfg.out is None else sys.stdout)
    return 0


def cmd_reduce(args, cfg: RunConfig) -> int:
    coeffs = jacobi_coefficients(args.n1, args.n2, args.phi)
    lam = makarov_lambda(args.n1, args.n2, args.phi)
    tripartite = coefficients_sum(
        (args.n1, args.n2, 0), mixing_matrix((0.0, 0.0, args.phi))
    )
    expected = np.zeros_like(tripartite.amplitudes)
    for k, value in enumerate(coeffs):
        expected[k, args.n1 + args.n2 - k] = value
    deviation = float(np.abs(tripartite.amplitudes - expected).max())

    doc = {
        "n1": args.n1,
        "n2": args.n2,
        "phi": args.phi,
        "coefficients": [float(v) for v in coeffs],
        "lambda": [float(v) for v in lam],
        "max_tripartite_deviation": deviation,
    }
    if cfg.format == "doc":
        _write_text(render_json(doc), cfg.out)
    elif cfg.format == "csv":
        lines = ["k,coefficient,lambda"]
        lines += [f"{k},{c:.17g},{v:.17g}" for k, (c, v) in enumerate(zip(coeffs, lam))]
        lines.append(f"max_tripartite_deviation,{deviation:.17g},")
        _write_text("\n".join(lines) + "\n", cfg.out)
    else:
        lines = [
            f"two-oscillator reduction: n1={args.n1}, n2={args.n2}, phi={args.phi:.9g}",
            "coefficients: " + ", ".join(f"{v:.9g}" for v in coeffs),
            "lambda:       " + ", ".join(f"{v:.9g}" for v in lam),
            f"max deviation from the tripartite table at angles (0, 0, phi): {deviation:.3g}",
        ]
        _write_text("\n".join(lines) + "\n", cfg.out)
    return 0


def cmd_verify(args, cfg: RunConfig) -> int:
    report = verify_mod.run_suite(
        skip=cfg.skip,
        tolerance=cfg.tolerance,
        quadrature_order=cfg.quadrature_order,
        seed=cfg.seed,
    )
    # human-readable margins go to stderr; stdout carries the summary document
    for c in report.checks:
        flag = "PASS" if c.passed else "FAIL"
        print(
            f"[{flag}] {c.stage}/{c.name}: observed {c.observed:.3e} "
            f"vs tolerance {c.tolerance:.1e} ({c.seconds:.2f} s)",
            file=sys.stderr,
        )
        if c.detail:
            print(f"       {c.detail}", file=sys.stderr)
        if not c.passed:
            print(
                f"       margin exceeded by a factor {c.observed / c.tolerance:.3g}",
                file=sys.stderr,
            )
    status = "all checks passed" if report.passed else "FAILURES present"
    print(f"{len(report.checks)} checks in {report.elapsed:.1f} s: {status}", file=sys.stderr)

    doc = report.to_document()
    if cfg.format == "csv":
        lines = ["stage,name,tolerance,observed,passed"]
        lines += [
            f"{c.stage},{c.name},{c.tolerance:.17g},{c.observed:.17g},{c.passed}"
            for c in report.checks
        ]
        _write_text("\n".join(lines) + "\n", None)
    else:
        _write_text(render_json(doc), None)
    if cfg.out is not None:
        _write_text(render_json(doc), cfg.out)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", help="key=value file mirroring RunConfig")
    shared.add_argument("--out", help="output path (default: stdout)")
    shared.add_argument("--format", choices=("csv", "doc"), help="output format")

    parser = argparse.ArgumentParser(
        prog="trischmidt",
        description=(
            "Schmidt amplitudes, mode spectra, and bipartition purities for "
            "eigenstates of three coupled harmonic oscillators"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[shared], help="Schmidt amplitude table")
    p.add_argument("--n", required=True, help="quantum numbers n1,n2,n3")
    p.add_argument(
        "--angles",
        required=True,
        help="angles theta,vphi,phi in radians (write --angles=-0.5,0.2,0.1 "
        "when the first value is negative)",
    )
    p.add_argument("--route", choices=("sum", "k16", "both"), default="sum")
    p.set_defaults(handler=cmd_coeffs)

    p = sub.add_parser("purity", parents=[shared], help="mode spectrum and purity")
    p.add_argument("--n", required=True, help="quantum numbers n1,n2,n3")
    p.add_argument(
        "--angles", required=True, help="angles theta,vphi,phi in radians (= form for negatives)"
    )
    p.add_argument("--bipartition", required=True, choices=("A", "B", "C"))
    p.add_argument("--method", choices=("direct", "closed"), default="direct")
    p.set_defaults(handler=cmd_purity)

    p = sub.add_parser("surface", parents=[shared], help="purity grid over (theta, phi)")
    p.add_argument("--bipartition", required=True, choices=("A", "B", "C"))
    p.add_argument("--n", required=True, help="quantum numbers n1,n2,n3")
    p.add_argument("--vphi", type=float, default=0.0, help="fixed vphi (radians)")
    p.add_argument("--grid-points", type=int, default=101, dest="grid_points")
    p.add_argument(
        "--theta-range",
        default=f"{-math.pi},{math.pi}",
        dest="theta_range",
        help="closed interval lo,hi in radians (= form for negatives; default full period)",
    )
    p.add_argument(
        "--phi-range",
        default=f"{-math.pi},{math.pi}",
        dest="phi_range",
        help="closed interval lo,hi in radians (= form for negatives; default full period)",
    )
    p.set_defaults(handler=cmd_surface)

    p = sub.add_parser("reduce", parents=[shared], help="two-oscillator reduction")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("verify", parents=[shared], help="run the full invariant suite")
    p.add_argument(
        "--skip",
        action="append",
        default=[],
        metavar="STAGE",
        help=f"skip a stage (repeatable); stages: {', '.join(verify_mod.STAGES)}",
    )
    p.add_argument("--tolerance", type=float, help="override every check tolerance")
    p.add_argument("--quadrature-order", type=int, dest="quadrature_order")
    p.add_argument("--seed", type=int, help="seed for the random draws")
    p.set_defaults(handler=cmd_verify)
    return parser


def _resolve_config(args) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        cfg = replace(cfg, **load_config(args.config))
    overrides = {}
    for key in ("out", "format", "tolerance", "quadrature_order", "seed"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "skip", None):
        overrides["skip"] = tuple(dict.fromkeys(tuple(cfg.skip) + tuple(args.skip)))
    return replace(cfg, **overrides).validate()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
        return args.handler(args, cfg)
    except DegreeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
