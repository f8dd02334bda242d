"""Self-verification suite: every library invariant at its pinned tolerance.

Each check reports the worst observed deviation next to the tolerance
it is held to, so margins stay visible even when everything passes.
All random draws are seeded; repeated runs are identical.
"""

from __future__ import annotations

import math
import time
import zlib
from dataclasses import dataclass, field

import numpy as np

from . import entanglement as ent
from . import quadrature as quad
from . import schmidt
from .oscillator import (
    coupling_matrix,
    coupling_ratios,
    coupling_ratios_degenerate,
    mixing_matrix,
)
from .specfun import K16Arguments, exton_k16, hermite_function, hermite_phys, jacobi, legendre
from .surface import SurfaceRequest, render_csv, surface_grid

__all__ = ["CheckResult", "STAGES", "VerifyReport", "run_suite"]

STAGES = (
    "specfun",
    "mixing",
    "spectrum-map",
    "schmidt",
    "entanglement",
    "reduction",
    "quadrature",
    "surfaces",
)

_BIPARTITIONS = (
    ent.Bipartition.A_VS_BC,
    ent.Bipartition.B_VS_AC,
    ent.Bipartition.C_VS_AB,
)


@dataclass
class CheckResult:
    stage: str
    name: str
    tolerance: float
    observed: float
    passed: bool
    detail: str = ""
    seconds: float = 0.0


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_document(self) -> dict:
        # timings are deliberately left out: emitted documents must be
        # byte-identical across identical invocations
        return {
            "passed": self.passed,
            "checks": [
                {
                    "stage": c.stage,
                    "name": c.name,
                    "tolerance": c.tolerance,
                    "observed": c.observed if math.isfinite(c.observed) else None,
                    "passed": c.passed,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


class _Context:
    """Shared seeded randomness and memoized heavyweight intermediates."""

    def __init__(self, seed: int, quadrature_order: int | None):
        self.seed = seed
        self.quadrature_order = quadrature_order
        self._small_matrices: list[schmidt.SchmidtMatrix] | None = None

    def rng(self, tag: str) -> np.random.Generator:
        return np.random.default_rng([self.seed, zlib.crc32(tag.encode())])

    def rule(self, total_degree: int) -> quad.QuadratureRule:
        order = self.quadrature_order or quad.default_rule_order(total_degree)
        return quad.gauss_hermite_rule(order)

    def small_matrices(self) -> list[schmidt.SchmidtMatrix]:
        """Amplitude tables for every excitation with N <= 5 at 50 seeded angle triples."""
        if self._small_matrices is None:
            rng = self.rng("small-matrices")
            excitations = [
                (n1, n2, n3)
                for n1 in range(6)
                for n2 in range(6)
                for n3 in range(6)
                if n1 + n2 + n3 <= 5
            ]
            out = []
            for _ in range(50):
                mix = mixing_matrix(rng.uniform(-math.pi, math.pi, 3))
                for exc in excitations:
                    out.append(schmidt.coefficients_sum(exc, mix))
            self._small_matrices = out
        return self._small_matrices


def _relative(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


# ---------------------------------------------------------------------------
# specfun


def _check_hermite_expansion(ctx: _Context):
    rng = ctx.rng("hermite")
    xs = rng.uniform(-3.0, 3.0, 20)
    worst = 0.0
    for n in range(9):
        for x in xs:
            expansion = sum(
                (-1) ** m
                * math.factorial(n)
                // (math.factorial(m) * math.factorial(n - 2 * m))
                * (2.0 * x) ** (n - 2 * m)
                for m in range(n // 2 + 1)
            )
            worst = max(worst, _relative(hermite_phys(n, x), expansion))
    return worst, "degrees 0..8, 20 points in [-3, 3]"


def _check_legendre_unit(ctx: _Context):
    worst = max(abs(legendre(n, 1.0) - 1.0) for n in range(21))
    return worst, "P_n(1) = 1 for n <= 20"


def _jacobi_identity_grid():
    return range(6), range(-3, 4), (-0.5, 0.3, 0.9)


def _check_jacobi_shift(ctx: _Context):
    ns, rhos, zs = _jacobi_identity_grid()
    worst, combos = 0.0, 0
    for n in ns:
        for m in ns:
            for rho in rhos:
                if n + rho + 1 <= 0 or m + rho + 1 <= 0:
                    continue
                gamma_ratio = math.gamma(n + rho + 1) / math.gamma(m + rho + 1)
                for z in zs:
                    lhs = jacobi(n, rho, m - n, z)
                    rhs = (
                        math.factorial(m)
                        / math.factorial(n)
                        * gamma_ratio
                        * ((z + 1) / 2.0) ** (n - m)
                        * jacobi(m, rho, n - m, z)
                    )
                    worst = max(worst, _relative(lhs, rhs))
                    combos += 1
    return worst, f"{combos} parameter combinations (gamma poles skipped)"


def _check_jacobi_reflection(ctx: _Context):
    ns, params, zs = _jacobi_identity_grid()
    worst, combos = 0.0, 0
    for n in ns:
        for rho in params:
            for sigma in params:
                for z in zs:
                    lhs = jacobi(n, rho, sigma, z)
                    rhs = ((1.0 - z) / 2.0) ** n * jacobi(
                        n, -rho - sigma - 2 * n - 1, sigma, (z + 3.0) / (z - 1.0)
                    )
                    worst = max(worst, _relative(lhs, rhs))
                    combos += 1
    return worst, f"{combos} parameter combinations"


def _poch_float(a: float, k: int) -> float:
    r = 1.0
    for i in range(k):
        r *= a + i
    return r


def _k16_oracle(a1, a2, a3, a4, beta, x, y, z, t):
    # independent float-arithmetic quadruple loop, bounds |alpha_i| each
    total = 0.0
    for m1 in range(-a1 + 1):
        for m2 in range(-a2 + 1):
            for m3 in range(-a3 + 1):
                for m4 in range(-a4 + 1):
                    num = (
                        _poch_float(a1, m1 + m2)
                        * _poch_float(a2, m2 + m3)
                        * _poch_float(a3, m3 + m4)
                        * _poch_float(a4, m4 + m1)
                    )
                    if num == 0.0:
                        continue
                    total += (
                        num
                        / _poch_float(beta, m1 + m2 + m3 + m4)
                        * x**m1
                        * y**m2
                        * z**m3
                        * t**m4
                        / (
                            math.factorial(m1)
                            * math.factorial(m2)
                            * math.factorial(m3)
                            * math.factorial(m4)
                        )
                    )
    return total


def _check_k16_oracle(ctx: _Context):
    rng = ctx.rng("k16")
    worst = 0.0
    for _ in range(100):
        alphas = [-int(v) for v in rng.integers(0, 4, 4)]
        beta = float(rng.uniform(1.0, 6.0))
        args = [float(v) for v in rng.uniform(-2.0, 2.0, 4)]
        lib = exton_k16(K16Arguments(*alphas, beta, *args))
        oracle = _k16_oracle(*alphas, beta, *args)
        worst = max(worst, _relative(lib, oracle))
    return worst, "100 draws, upper parameters in {0,..,-3}, beta in [1, 6]"


# ---------------------------------------------------------------------------
# mixing


def _check_orthogonality(ctx: _Context):
    rng = ctx.rng("orthogonality")
    worst = 0.0
    for _ in range(1000):
        m = mixing_matrix(rng.uniform(-math.pi, math.pi, 3)).matrix
        worst = max(
            worst,
            np.abs(m @ m.T - np.eye(3)).max(),
            abs(np.linalg.det(m) - 1.0),
        )
    return worst, "1000 angle triples in [-pi, pi]^3: |M M^T - I| and |det M - 1|"


def _check_row_norms(ctx: _Context):
    rng = ctx.rng("row-norms")
    worst = 0.0
    for _ in range(1000):
        m = mixing_matrix(rng.uniform(-math.pi, math.pi, 3)).matrix
        worst = max(worst, np.abs((m**2).sum(axis=1) - 1.0).max())
    return worst, "unit row norms over 1000 angle triples"


# ---------------------------------------------------------------------------
# spectrum-map


def _check_coupling_eigenvalues(ctx: _Context):
    rng = ctx.rng("coupling-eig")
    worst = 0.0
    for _ in range(200):
        sigma_sq = rng.uniform(0.2, 5.0, 3)
        angles = rng.uniform(-math.pi, math.pi, 3)
        eig = np.sort(np.linalg.eigvalsh(coupling_matrix(sigma_sq, angles)))
        target = np.sort(sigma_sq)
        worst = max(worst, np.abs(eig - target).max() / target.max())
    return worst, "200 random (sigma^2, angles) draws, sorted spectra"


def _check_ratio_quotients(ctx: _Context):
    rng = ctx.rng("ratio-quotients")
    worst, used = 0.0, 0
    for _ in range(10000):
        if used >= 200:
            break
        sigma_sq = rng.uniform(0.5, 4.0, 3)
        angles = rng.uniform(-0.7, 0.7, 3)
        k = coupling_matrix(sigma_sq, angles)
        w = np.diag(k)
        pairs = ((0, 1), (0, 2), (1, 2))
        if min(abs(w[i] - w[j]) for i, j in pairs) <= 1e-8:
            continue
        quotients = [2.0 * k[i, j] / (w[i] - w[j]) for i, j in pairs]
        ratios = coupling_ratios(sigma_sq, angles)
        worst = max(worst, max(_relative(r, q) for r, q in zip(ratios, quotients)))
        used += 1
    return worst, f"{used} draws with frequency gaps above 1e-8"


def _check_degenerate_limit(ctx: _Context):
    rng = ctx.rng("degenerate-limit")
    worst6 = worst4 = 0.0
    for _ in range(50):
        angles = rng.uniform(-math.pi / 5, math.pi / 5, 3)
        limit = coupling_ratios_degenerate(angles)
        for eps, keep in ((1e-6, "6"), (1e-4, "4")):
            finite = coupling_ratios((1 + 2 * eps, 1 + eps, 1.0), angles)
            err = max(abs(a - b) for a, b in zip(finite, limit))
            if keep == "6":
                worst6 = max(worst6, err)
            else:
                worst4 = max(worst4, err)
    observed = max(worst6, worst4 / 100.0)
    return observed, (
        f"equal-spacing limit: err(eps=1e-6)={worst6:.3e}, err(eps=1e-4)={worst4:.3e} "
        "(first-order scaling folded into the margin)"
    )


# ---------------------------------------------------------------------------
# schmidt


def _check_completeness(ctx: _Context):
    worst = 0.0
    for sm in ctx.small_matrices():
        worst = max(worst, abs(float((sm.amplitudes**2).sum()) - 1.0))
    return worst, "sum of squared amplitudes over all N <= 5 excitations, 50 angle draws"


def _check_route_equivalence(ctx: _Context):
    grid = np.linspace(-math.pi / 4, math.pi / 4, 5)
    excitations = [
        (n1, n2, n3)
        for n1 in range(5)
        for n2 in range(5)
        for n3 in range(5)
        if n1 + n2 + n3 <= 4
    ]
    worst, fallback, compared = 0.0, 0, 0
    masks = {}
    for theta in grid:
        for vphi in grid:
            for phi in grid:
                mix = mixing_matrix((theta, vphi, phi))
                for exc in excitations:
                    total = sum(exc)
                    if total not in masks:
                        k_idx, l_idx = np.indices((total + 1, total + 1))
                        masks[total] = k_idx + l_idx <= total
                    direct = schmidt.coefficients_sum(exc, mix)
                    closed = schmidt.coefficients_k16(exc, mix)
                    keep = masks[total] & ~closed.fallback_mask
                    fallback += closed.fallback_count
                    compared += int(keep.sum())
                    if keep.any():
                        worst = max(
                            worst,
                            float(
                                np.abs(direct.amplitudes - closed.amplitudes)[keep].max()
                            ),
                        )
    return worst, (
        f"N <= 4 over a 5x5x5 angle grid; {compared} entries compared, "
        f"{fallback} fallback entries excluded"
    )


def _check_product_state_limit(ctx: _Context):
    mix = mixing_matrix((0.0, 0.0, 0.0))
    worst = 0.0
    for n1 in range(6):
        for n2 in range(6):
            for n3 in range(6):
                if n1 + n2 + n3 > 5:
                    continue
                sm = schmidt.coefficients_sum((n1, n2, n3), mix)
                expected = np.zeros_like(sm.amplitudes)
                expected[n1, n2] = 1.0
                worst = max(worst, np.abs(sm.amplitudes - expected).max())
    return worst, "identity mixing gives A[k,l] = delta(k,n1) delta(l,n2)"


def _check_expansion_consistency(ctx: _Context):
    rng = ctx.rng("expansion")
    points = rng.uniform(-2.0, 2.0, (20, 3))
    angle_draws = [rng.uniform(-math.pi / 3, math.pi / 3, 3) for _ in range(3)]
    excitations = [
        (n1, n2, n3)
        for n1 in range(3)
        for n2 in range(3)
        for n3 in range(3)
        if n1 + n2 + n3 <= 2
    ]
    worst = 0.0
    for angles in angle_draws:
        mix = mixing_matrix(angles)
        for exc in excitations:
            sm = schmidt.coefficients_sum(exc, mix)
            for point in points:
                series = sum(
                    value
                    * hermite_function(k, point[0])
                    * hermite_function(l, point[1])
                    * hermite_function(m, point[2])
                    for k, l, m, value in sm.items()
                )
                worst = max(
                    worst, abs(series - schmidt.wavefunction_eval(exc, mix, point))
                )
    return worst, "pointwise reconstruction vs direct evaluation, N <= 2, 20 points"


# ---------------------------------------------------------------------------
# entanglement


def _check_spectra_trace(ctx: _Context):
    worst = 0.0
    for sm in ctx.small_matrices():
        for bip in _BIPARTITIONS:
            worst = max(
                worst, abs(float(ent.mode_spectrum(sm, bip).values.sum()) - 1.0)
            )
    return worst, "all three spectra sum to one, N <= 5, 50 angle draws"


def _closed_grid():
    return np.linspace(-math.pi / 4, math.pi / 4, 7)


def _check_closed_form_purity(ctx: _Context):
    grid = _closed_grid()
    worst = 0.0
    for theta in grid:
        for vphi in grid:
            for phi in grid:
                angles = (theta, vphi, phi)
                mix = mixing_matrix(angles)
                for axis_index, axis in enumerate(("n1", "n2", "n3")):
                    for n in range(1, 7):
                        exc = [0, 0, 0]
                        exc[axis_index] = n
                        sm = schmidt.coefficients_sum(exc, mix)
                        for bip in _BIPARTITIONS:
                            direct = ent.purity(ent.mode_spectrum(sm, bip))
                            closed = ent.closed_form_purity(axis, bip, n, angles)
                            worst = max(worst, abs(direct - closed))
    return worst, "nine (axis, bipartition) families, n <= 6, 7x7x7 angle grid"


def _check_purity_pins(ctx: _Context):
    mid = ent.closed_form_purity(
        "n2", ent.Bipartition.A_VS_BC, 2, (0.4, -0.9, math.pi / 8)
    )
    unit = ent.closed_form_purity(
        "n3", ent.Bipartition.A_VS_BC, 1, (math.pi / 4, 0.7, 0.0)
    )
    worst = max(abs(mid - 0.59375), abs(unit - 0.5))
    return worst, "pinned values 0.59375 (two quanta, phi=pi/8) and 0.5 (theta=pi/4)"


def _check_legendre_argument_identity(ctx: _Context):
    grid = _closed_grid()
    worst, skipped = 0.0, 0
    for theta in grid:
        for phi in grid:
            base = (math.cos(theta) ** 2 + math.sin(theta) ** 2 * math.sin(phi) ** 2) ** 2
            quart = math.sin(theta) ** 4 * math.cos(phi) ** 4
            for n in range(1, 7):
                if abs(base - quart) < 1e-6:
                    skipped += 1
                    continue
                explicit = (base - quart) ** n * legendre(
                    n, (base + quart) / (base - quart)
                )
                closed = ent.closed_form_purity(
                    "n3", ent.Bipartition.A_VS_BC, n, (theta, 0.2, phi)
                )
                worst = max(worst, abs(explicit - closed))
    return worst, (
        "third-axis/A family against the explicit trig expression "
        f"({skipped} removable points evaluated by the binomial sum only)"
    )


def _check_simplified_line(ctx: _Context):
    phis = np.linspace(-math.pi / 4, math.pi / 4, 21)
    worst, deviation = 0.0, 0.0
    for phi in phis:
        angles = (0.3, -0.25, float(phi))
        direct = ent.purity_direct((0, 1, 0), angles, ent.Bipartition.A_VS_BC)
        general = ent.closed_form_purity("n2", ent.Bipartition.A_VS_BC, 1, angles)
        expected = (1.0 + math.cos(2 * phi) ** 2) / 2.0
        worst = max(worst, abs(direct - general), abs(general - expected))
        deviation = max(deviation, abs(general - math.cos(2 * phi)))
    return worst, (
        "mid-axis unit excitation, split A: direct sum and Legendre form agree at "
        f"(1 + cos^2(2 phi))/2; max deviation from the simplified line cos(2 phi) "
        f"recorded as {deviation:.6f}"
    )


def _factorization_cases(ctx: _Context):
    rng = ctx.rng("factorization")
    cases = []
    for exc in ((0, 0, 1), (1, 1, 0), (2, 0, 1), (1, 1, 1), (0, 2, 2)):
        mix = mixing_matrix(rng.uniform(-1.0, 1.0, 3))
        cases.append(schmidt.coefficients_sum(exc, mix))
    return cases


def _check_factorization_reconstruction(ctx: _Context):
    worst = 0.0
    for sm in _factorization_cases(ctx):
        for bip in _BIPARTITIONS:
            rebuilt = ent.bipartite_factorization(sm, bip).reconstruct()
            worst = max(worst, np.abs(rebuilt - sm.amplitudes).max())
    return worst, "weights x partners reproduce every amplitude, three splits"


def _check_partner_orthonormality(ctx: _Context):
    worst = 0.0
    for sm in _factorization_cases(ctx):
        for bip in _BIPARTITIONS:
            fact = ent.bipartite_factorization(sm, bip)
            vectors = []
            for term in fact.terms:
                vec = np.zeros((sm.total + 1, sm.total + 1))
                for (i, j), amp in term.partner:
                    vec[i, j] = amp
                vectors.append(vec.reshape(-1))
            gram = np.array([[float(u @ v) for v in vectors] for u in vectors])
            worst = max(worst, np.abs(gram - np.eye(len(vectors))).max())
    return worst, "Gram matrix of partner states is the identity"


def _check_product_state_purity(ctx: _Context):
    rng = ctx.rng("product-purity")
    worst = 0.0
    zero_mix = mixing_matrix((0.0, 0.0, 0.0))
    for exc in ((0, 0, 0), (1, 0, 0), (0, 2, 1), (2, 2, 2)):
        sm = schmidt.coefficients_sum(exc, zero_mix)
        for bip in _BIPARTITIONS:
            worst = max(worst, abs(ent.purity(ent.mode_spectrum(sm, bip)) - 1.0))
    for _ in range(5):
        mix = mixing_matrix(rng.uniform(-math.pi, math.pi, 3))
        sm = schmidt.coefficients_sum((0, 0, 0), mix)
        for bip in _BIPARTITIONS:
            worst = max(worst, abs(ent.purity(ent.mode_spectrum(sm, bip)) - 1.0))
    return worst, "purity is one at zero angles and for the ground state"


def _check_unit_excitation_spectra(ctx: _Context):
    rng = ctx.rng("unit-excitation")
    worst = 0.0
    for _ in range(10):
        mix = mixing_matrix(rng.uniform(-math.pi, math.pi, 3))
        c1, c2, c3 = mix.c
        sm = schmidt.coefficients_sum((0, 0, 1), mix)
        expected = {
            ent.Bipartition.A_VS_BC: (c2**2 + c3**2, c1**2),
            ent.Bipartition.B_VS_AC: (c1**2 + c3**2, c2**2),
            ent.Bipartition.C_VS_AB: (c1**2 + c2**2, c3**2),
        }
        for bip, target in expected.items():
            values = ent.mode_spectrum(sm, bip).values
            worst = max(worst, np.abs(values - np.array(target)).max())
    return worst, "unit third-axis excitation: spectra are squared bottom-row splits"


# ---------------------------------------------------------------------------
# reduction


def _check_tripartite_collapse(ctx: _Context):
    worst = 0.0
    for phi in (-0.9, -0.3, 0.4, 1.1):
        mix = mixing_matrix((0.0, 0.0, phi))
        for n1 in range(6):
            for n2 in range(6 - n1):
                sm = schmidt.coefficients_sum((n1, n2, 0), mix)
                coeffs = ent.jacobi_coefficients(n1, n2, phi)
                expected = np.zeros_like(sm.amplitudes)
                for k in range(n1 + n2 + 1):
                    expected[k, n1 + n2 - k] = coeffs[k]
                worst = max(worst, np.abs(sm.amplitudes - expected).max())
    return worst, "theta = vphi = 0 collapses tables onto the Jacobi amplitudes, n1+n2 <= 5"


def _check_makarov_values(ctx: _Context):
    lam = ent.makarov_lambda(1, 0, math.pi / 6)
    worst = max(abs(lam[0] - 0.25), abs(lam[1] - 0.75))
    for (n1, n2, phi) in ((2, 1, 0.4), (0, 0, 1.3), (3, 2, -0.7)):
        worst = max(worst, abs(float(ent.makarov_lambda(n1, n2, phi).sum()) - 1.0))
    return worst, "lambda(1,0,pi/6) = [0.25, 0.75]; spectra normalized"


def _check_makarov_vs_tripartite(ctx: _Context):
    worst = 0.0
    for (n1, n2, phi) in ((2, 0, math.pi / 4), (1, 1, 0.5), (3, 0, -0.8)):
        lam = ent.makarov_lambda(n1, n2, phi)
        sm = schmidt.coefficients_sum((n1, n2, 0), mixing_matrix((0.0, 0.0, phi)))
        spectrum = ent.mode_spectrum(sm, ent.Bipartition.A_VS_BC).values[: len(lam)]
        worst = max(worst, np.abs(lam - spectrum).max())
    return worst, "two-oscillator spectrum equals the decoupled tripartite spectrum"


# ---------------------------------------------------------------------------
# quadrature


def _check_weight_sum(ctx: _Context):
    worst = 0.0
    for order in (1, 2, 7, 16, 40, 64, 128):
        rule = quad.gauss_hermite_rule(order)
        worst = max(worst, abs(float(rule.weights.sum()) - math.sqrt(math.pi)) / math.sqrt(math.pi))
    return worst, "weights sum to sqrt(pi), orders 1..128"


def _check_moment_identity(ctx: _Context):
    worst = 0.0
    for order in (2, 8, 24, 64):
        rule = quad.gauss_hermite_rule(order)
        moment = float((rule.weights * rule.nodes**2).sum())
        worst = max(worst, abs(moment - math.sqrt(math.pi) / 2.0))
    return worst, "second moment sqrt(pi)/2 reproduced for orders >= 2"


def _check_order_plateau(ctx: _Context):
    mix = mixing_matrix((0.45, -0.35, 0.6))
    worst = 0.0
    base = ctx.rule(3)
    bumped = quad.gauss_hermite_rule(min(base.order + 8, 128))
    for exc in ((0, 0, 3), (1, 1, 1), (2, 1, 0)):
        total = sum(exc)
        for k in range(total + 1):
            for l in range(total - k + 1):
                m = total - k - l
                a = quad.coefficient_overlap(exc, mix, k, l, m, base)
                b = quad.coefficient_overlap(exc, mix, k, l, m, bumped)
                worst = max(worst, abs(a - b))
    return worst, f"raising the order from {base.order} by 8 moves no coefficient"


def _check_overlap_vs_sum(ctx: _Context):
    rng = ctx.rng("overlap")
    rule = ctx.rule(3)
    excitations = [
        (n1, n2, n3)
        for n1 in range(4)
        for n2 in range(4)
        for n3 in range(4)
        if n1 + n2 + n3 <= 3
    ]
    worst = 0.0
    for _ in range(10):
        mix = mixing_matrix(rng.uniform(-math.pi, math.pi, 3))
        for exc in excitations:
            sm = schmidt.coefficients_sum(exc, mix)
            for k, l, m, value in sm.items():
                integral = quad.coefficient_overlap(exc, mix, k, l, m, rule)
                worst = max(worst, abs(integral - value))
    return worst, "independent 3D overlap integrals, N <= 3, 10 angle draws"


def _check_selection_zeros(ctx: _Context):
    rng = ctx.rng("selection")
    rule = ctx.rule(3)
    worst = 0.0
    for exc in ((0, 0, 1), (1, 1, 0), (1, 1, 1), (0, 2, 1)):
        mix = mixing_matrix(rng.uniform(-math.pi, math.pi, 3))
        total = sum(exc)
        violations = [
            (k, l, m)
            for k in range(total + 2)
            for l in range(total + 2)
            for m in range(total + 2)
            if k + l + m != total and k + l + m <= total + 2
        ]
        for (k, l, m) in violations[:12]:
            worst = max(worst, abs(quad.coefficient_overlap(exc, mix, k, l, m, rule)))
    return worst, "overlaps violating k+l+m = N integrate to zero"


def _check_overlap_2d(ctx: _Context):
    rule = ctx.rule(2)
    a0 = quad.coefficient_overlap_2d(1, 0, math.pi / 6, 0, rule)
    a1 = quad.coefficient_overlap_2d(1, 0, math.pi / 6, 1, rule)
    worst = max(abs(a0 + 0.5), abs(a1 - math.cos(math.pi / 6)))
    for k in range(4):
        target = ent.jacobi_coefficients(2, 1, 0.7)[k]
        worst = max(
            worst, abs(quad.coefficient_overlap_2d(2, 1, 0.7, k, rule) - target)
        )
    return worst, "plane-rotation overlaps match the Jacobi amplitudes"


# ---------------------------------------------------------------------------
# surfaces


def _surface_values(req: SurfaceRequest):
    thetas, phis, grid = surface_grid(req)
    # Round-trip through the emitted CSV so the checks see exactly what a
    # consumer would parse back.
    rows = render_csv(thetas, phis, grid).splitlines()[1:]
    parsed = np.array([[float(v) for v in row.split(",")] for row in rows])
    count = len(thetas)
    return (
        parsed[:, 0].reshape(count, count),
        parsed[:, 1].reshape(count, count),
        parsed[:, 2].reshape(count, count),
    )


def _unit_surface(points: int = 41) -> SurfaceRequest:
    # spacing pi/20 puts theta = pi/4, phi = 0 (the purity minimum) on the grid
    return SurfaceRequest(
        bipartition=ent.Bipartition.A_VS_BC,
        excitation=(0, 0, 1),
        fixed_vphi=0.3,
        grid_points=points,
    )


def _check_surface_extremes(ctx: _Context):
    _, _, values = _surface_values(_unit_surface())
    worst = max(abs(values.min() - 0.5), abs(values.max() - 1.0))
    return worst, "unit third-axis excitation, split A: min 0.5 and max 1.0 on the grid"


def _check_surface_symmetries(ctx: _Context):
    _, _, values = _surface_values(_unit_surface())
    count = values.shape[0]
    worst = max(
        np.abs(values - values[::-1, :]).max(),  # theta -> -theta
        np.abs(values - values[:, ::-1]).max(),  # phi -> -phi
    )
    half = (count - 1) // 2  # period pi = half the [-pi, pi] span
    worst = max(
        worst,
        np.abs(values[half:, :] - values[: count - half, :]).max(),
        np.abs(values[:, half:] - values[:, : count - half]).max(),
    )
    return worst, "sign flips and period pi in each angle, checked on emitted data"


def _check_surface_bounds_bc(ctx: _Context):
    worst = 0.0
    for bip, vphi in (
        (ent.Bipartition.B_VS_AC, math.pi / 2),
        (ent.Bipartition.C_VS_AB, math.pi / 4),
    ):
        req = SurfaceRequest(
            bipartition=bip, excitation=(0, 0, 1), fixed_vphi=vphi, grid_points=41
        )
        _, _, values = _surface_values(req)
        worst = max(worst, max(0.5 - values.min(), values.max() - 1.0, 0.0))
    return worst, "companion-split surfaces stay inside [0.5, 1.0]"


# ---------------------------------------------------------------------------

_REGISTRY = (
    ("specfun", "hermite-recurrence-vs-expansion", 1e-12, _check_hermite_expansion),
    ("specfun", "legendre-at-unit-argument", 1e-14, _check_legendre_unit),
    ("specfun", "jacobi-parameter-shift-identity", 1e-10, _check_jacobi_shift),
    ("specfun", "jacobi-reflection-identity", 1e-10, _check_jacobi_reflection),
    ("specfun", "k16-vs-nested-sum-oracle", 1e-12, _check_k16_oracle),
    ("mixing", "orthogonality-and-determinant", 1e-12, _check_orthogonality),
    ("mixing", "row-normalization", 1e-13, _check_row_norms),
    ("spectrum-map", "coupling-eigenvalues-match", 1e-10, _check_coupling_eigenvalues),
    ("spectrum-map", "ratios-vs-entry-quotients", 1e-10, _check_ratio_quotients),
    ("spectrum-map", "degenerate-ratio-limit", 1e-4, _check_degenerate_limit),
    ("schmidt", "completeness-trace-one", 1e-10, _check_completeness),
    ("schmidt", "route-equivalence", 1e-10, _check_route_equivalence),
    ("schmidt", "product-state-limit", 1e-14, _check_product_state_limit),
    ("schmidt", "expansion-consistency", 1e-8, _check_expansion_consistency),
    ("entanglement", "spectra-trace-one", 1e-10, _check_spectra_trace),
    ("entanglement", "closed-form-purity-vs-direct", 1e-10, _check_closed_form_purity),
    ("entanglement", "purity-value-pins", 1e-10, _check_purity_pins),
    ("entanglement", "legendre-argument-identity", 1e-12, _check_legendre_argument_identity),
    ("entanglement", "simplified-line-record", 1e-12, _check_simplified_line),
    ("entanglement", "factorization-reconstruction", 1e-12, _check_factorization_reconstruction),
    ("entanglement", "partner-orthonormality", 1e-10, _check_partner_orthonormality),
    ("entanglement", "product-state-purity", 1e-12, _check_product_state_purity),
    ("entanglement", "unit-excitation-spectra", 1e-14, _check_unit_excitation_spectra),
    ("reduction", "tripartite-collapse", 1e-12, _check_tripartite_collapse),
    ("reduction", "makarov-lambda-values", 1e-12, _check_makarov_values),
    ("reduction", "makarov-vs-tripartite-spectrum", 1e-10, _check_makarov_vs_tripartite),
    ("quadrature", "weight-sum-sqrt-pi", 1e-12, _check_weight_sum),
    ("quadrature", "second-moment-identity", 1e-13, _check_moment_identity),
    ("quadrature", "order-plateau-stability", 1e-11, _check_order_plateau),
    ("quadrature", "overlap-matches-sum-route", 1e-6, _check_overlap_vs_sum),
    ("quadrature", "selection-rule-zeros", 1e-10, _check_selection_zeros),
    ("quadrature", "two-oscillator-overlap", 1e-8, _check_overlap_2d),
    ("surfaces", "surface-A-extremes", 1e-9, _check_surface_extremes),
    ("surfaces", "surface-A-symmetries", 1e-12, _check_surface_symmetries),
    ("surfaces", "surface-B-C-bounds", 1e-9, _check_surface_bounds_bc),
)


def run_suite(
    skip: tuple[str, ...] = (),
    tolerance: float | None = None,
    quadrature_order: int | None = None,
    seed: int = 7,
) -> VerifyReport:
    """Run every registered check; `skip` drops whole stages by name."""
    unknown = set(skip) - set(STAGES)
    if unknown:
        raise ValueError(f"unknown stages {sorted(unknown)}; choose from {STAGES}")
    if tolerance is not None and tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    ctx = _Context(seed, quadrature_order)
    report = VerifyReport()
    start = time.perf_counter()
    for stage, name, default_tol, fn in _REGISTRY:
        if stage in skip:
            continue
        tol = tolerance if tolerance is not None else default_tol
        t0 = time.perf_counter()
        try:
            observed, detail = fn(ctx)
        except Exception as exc:  # a crashed check is a failed check
            observed, detail = math.inf, f"check raised {type(exc).__name__}: {exc}"
        seconds = time.perf_counter() - t0
        report.checks.append(
            CheckResult(
                stage=stage,
                name=name,
                tolerance=tol,
                observed=float(observed),
                passed=bool(observed <= tol),
                detail=detail,
                seconds=seconds,
            )
        )
    report.elapsed = time.perf_counter() - start
    return report
