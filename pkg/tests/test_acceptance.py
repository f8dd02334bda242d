"""Acceptance suite: one test per numbered criterion, run at the stated
tolerances.  Each test prints a PASS/FAIL line (run with -s to see them
on passing runs)."""

import math
import time

import numpy as np
import pytest

import trischmidt as ts
from trischmidt.cli import main as cli_main
from trischmidt.verify import run_suite

TARGETS = {
    "route-equivalence": 10.0,
    "overlap-matches-sum-route": 30.0,
}


@pytest.fixture(scope="module")
def report():
    start = time.perf_counter()
    rep = run_suite()
    rep.wall_clock = time.perf_counter() - start
    return rep


def _check(report, name):
    found = [c for c in report.checks if c.name == name]
    assert found, f"missing check {name}"
    return found[0]


def _announce(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number} ({label}): {status} {detail}")
    assert ok, f"criterion {number} ({label}) failed: {detail}"


def test_criterion_1_route_equivalence(report):
    check = _check(report, "route-equivalence")
    ok = check.passed and check.seconds < TARGETS["route-equivalence"]
    _announce(
        1,
        "route equivalence",
        ok,
        f"max |delta| = {check.observed:.3e} <= 1e-10 in {check.seconds:.2f} s; {check.detail}",
    )


def test_criterion_2_quadrature_oracle(report):
    overlap = _check(report, "overlap-matches-sum-route")
    zeros = _check(report, "selection-rule-zeros")
    ok = (
        overlap.passed
        and zeros.passed
        and overlap.seconds < TARGETS["overlap-matches-sum-route"]
    )
    _announce(
        2,
        "quadrature oracle",
        ok,
        f"overlap {overlap.observed:.3e} <= 1e-6, selection zeros {zeros.observed:.3e} <= 1e-10, "
        f"{overlap.seconds + zeros.seconds:.2f} s",
    )


def test_criterion_3_trace_one(report):
    completeness = _check(report, "completeness-trace-one")
    spectra = _check(report, "spectra-trace-one")
    ok = completeness.passed and spectra.passed
    _announce(
        3,
        "trace one",
        ok,
        f"completeness {completeness.observed:.3e}, spectra {spectra.observed:.3e} <= 1e-10",
    )


def test_criterion_4_closed_form_purities(report):
    families = _check(report, "closed-form-purity-vs-direct")
    pins = _check(report, "purity-value-pins")
    two_quanta = ts.closed_form_purity(
        "n2", ts.Bipartition.A_VS_BC, 2, (0.0, 0.0, math.pi / 8)
    )
    balanced = ts.closed_form_purity(
        "n3", ts.Bipartition.A_VS_BC, 1, (math.pi / 4, 0.0, 0.0)
    )
    ok = (
        families.passed
        and pins.passed
        and abs(two_quanta - 0.59375) < 1e-10
        and abs(balanced - 0.5) < 1e-10
    )
    _announce(
        4,
        "nine closed-form purity families",
        ok,
        f"grid deviation {families.observed:.3e} <= 1e-10; "
        f"pinned 0.59375 -> {two_quanta:.12f}, 0.5 -> {balanced:.12f}",
    )


def test_criterion_5_documented_erratum(report):
    check = _check(report, "simplified-line-record")
    recorded = "deviation from the simplified line" in check.detail
    phis = np.linspace(-math.pi / 4, math.pi / 4, 21)
    worst = 0.0
    for phi in phis:
        angles = (0.15, -0.45, float(phi))
        direct = ts.purity_direct((0, 1, 0), angles, ts.Bipartition.A_VS_BC)
        general = ts.closed_form_purity("n2", ts.Bipartition.A_VS_BC, 1, angles)
        expected = (1 + math.cos(2 * phi) ** 2) / 2
        worst = max(worst, abs(direct - expected), abs(general - expected))
    ok = check.passed and recorded and worst < 1e-12
    _announce(
        5,
        "documented erratum",
        ok,
        f"both routes equal (1 + cos^2(2 phi))/2 within {worst:.3e}; report says: {check.detail!r}",
    )


def test_criterion_6_spectrum_map(report):
    eig = _check(report, "coupling-eigenvalues-match")
    quot = _check(report, "ratios-vs-entry-quotients")
    limit = _check(report, "degenerate-ratio-limit")
    ok = eig.passed and quot.passed and limit.passed
    _announce(
        6,
        "spectrum map",
        ok,
        f"eigenvalues {eig.observed:.3e} <= 1e-10, quotients {quot.observed:.3e} <= 1e-10, "
        f"equal-spacing limit {limit.observed:.3e} <= 1e-4",
    )


def test_criterion_7_two_oscillator_reduction(report):
    collapse = _check(report, "tripartite-collapse")
    lam = ts.makarov_lambda(1, 0, math.pi / 6)
    rule = ts.gauss_hermite_rule(16)
    overlap = ts.coefficient_overlap_2d(1, 0, math.pi / 6, 0, rule)
    ok = (
        collapse.passed
        and np.allclose(lam, [0.25, 0.75], atol=1e-12)
        and abs(overlap + 0.5) < 1e-8
    )
    _announce(
        7,
        "two-oscillator reduction",
        ok,
        f"collapse {collapse.observed:.3e} <= 1e-12, lambda = {lam.tolist()}, "
        f"2D overlap {overlap:.10f} vs -0.5",
    )


def test_criterion_8_figure_surfaces(tmp_path, capsys):
    grids = {}
    for tag, bipartition, vphi in (
        ("A", "A", "0.3"),
        ("B", "B", str(math.pi / 2)),
        ("C", "C", str(math.pi / 4)),
    ):
        out = tmp_path / f"surface_{tag}.csv"
        code = cli_main(
            [
                "surface",
                "--bipartition",
                bipartition,
                "--n",
                "0,0,1",
                "--vphi",
                vphi,
                "--grid-points",
                "41",
                "--out",
                str(out),
            ]
        )
        capsys.readouterr()
        assert code == 0
        rows = np.array(
            [
                [float(v) for v in line.split(",")]
                for line in out.read_text().splitlines()[1:]
            ]
        )
        grids[tag] = rows[:, 2].reshape(41, 41)

    a = grids["A"]
    extremes_ok = abs(a.min() - 0.5) < 1e-9 and abs(a.max() - 1.0) < 1e-9
    sym_ok = (
        np.abs(a - a[::-1, :]).max() < 1e-12
        and np.abs(a - a[:, ::-1]).max() < 1e-12
        and np.abs(a[20:, :] - a[:21, :]).max() < 1e-12
        and np.abs(a[:, 20:] - a[:, :21]).max() < 1e-12
    )
    bounds_ok = all(
        grids[t].min() >= 0.5 - 1e-9 and grids[t].max() <= 1.0 + 1e-9
        for t in ("B", "C")
    )
    ok = extremes_ok and sym_ok and bounds_ok
    _announce(
        8,
        "figure surfaces",
        ok,
        f"A: min {a.min():.12f}, max {a.max():.12f}; companion surfaces within [0.5, 1]",
    )


def test_criterion_9_product_state_limits(report):
    check = _check(report, "product-state-purity")
    zero_mix = ts.mixing_matrix((0.0, 0.0, 0.0))
    worst = 0.0
    for exc in ((0, 0, 0), (2, 1, 0)):
        sm = ts.coefficients_sum(exc, zero_mix)
        for bip in ts.Bipartition:
            worst = max(worst, abs(ts.purity(ts.mode_spectrum(sm, bip)) - 1.0))
    ok = check.passed and worst < 1e-12
    _announce(9, "product-state limits", ok, f"purity deviates from 1 by {worst:.3e}")


def test_criterion_10_verify_under_budget(report, capsys):
    code = cli_main(["verify"])
    captured = capsys.readouterr()
    ok = (
        code == 0
        and report.wall_clock < 60.0
        and "all checks passed" in captured.err
        and '"passed": true' in captured.out
    )
    _announce(
        10,
        "verify suite",
        ok,
        f"exit {code}, library run {report.wall_clock:.1f} s < 60 s",
    )
