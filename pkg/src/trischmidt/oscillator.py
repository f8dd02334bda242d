"""Physical model layer for three harmonically coupled oscillators.

Houses the three-angle orthogonal mixing matrix, mass scalings and
normal coordinates, the forward map from normal-mode squared
frequencies to physical stiffness parameters, coupling ratios with
their equal-spacing limits, and the energy spectrum.

Conventions: the mixing matrix M has rows (a1, a2, a3), (b1, b2, b3),
(c1, c2, c3) and acts on mass-scaled positions as q = M (mu * x).  The
coupling matrix built here satisfies K = M^T diag(S^2) M, equivalently
M K M^T = diag(S^2); this orientation is pinned numerically by the test
suite against the explicit entry formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .specfun import DEGREE_LIMIT, DegreeLimitError

__all__ = [
    "Angles",
    "DegenerateFrequencyError",
    "Excitation",
    "Masses",
    "MixingMatrix",
    "NormalFrequenciesSq",
    "PhysicalScales",
    "as_angles",
    "as_excitation",
    "as_sigma_sq",
    "coupling_matrix",
    "coupling_ratios",
    "coupling_ratios_degenerate",
    "energy",
    "frequency_geometry",
    "mass_scalings",
    "mixing_matrix",
    "normal_coordinates",
]


class Angles(NamedTuple):
    """Mixing-angle triple (theta, vphi, phi), in radians.

    ``phi`` is the angle with b1 = sin(phi); ``vphi`` the one with
    b2 = cos(phi) cos(vphi).  All operations accept arbitrary reals.
    """

    theta: float
    vphi: float
    phi: float


class Excitation(NamedTuple):
    """Non-negative quantum numbers (n1, n2, n3) of one eigenstate."""

    n1: int
    n2: int
    n3: int

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n3


class Masses(NamedTuple):
    """Strictly positive oscillator masses."""

    m1: float
    m2: float
    m3: float


class NormalFrequenciesSq(NamedTuple):
    """Strictly positive squared normal-mode frequencies."""

    sigma1_sq: float
    sigma2_sq: float
    sigma3_sq: float


class PhysicalScales(NamedTuple):
    """Unit system (hbar, geometric-mean mass, geometric-mean frequency).

    The default dimensionless configuration sets all three to one; the
    Schmidt analysis downstream is carried out entirely in these units.
    """

    hbar: float = 1.0
    mean_mass: float = 1.0
    varpi: float = 1.0


class DegenerateFrequencyError(ValueError):
    """A coupling-ratio denominator is (numerically) zero."""


def as_angles(angles) -> Angles:
    ang = Angles(*(float(v) for v in angles))
    if not all(math.isfinite(v) for v in ang):
        raise ValueError(f"angles must be finite, got {ang}")
    return ang


def as_excitation(n) -> Excitation:
    values = list(n)
    if len(values) != 3 or any(not float(v).is_integer() for v in values):
        raise ValueError(f"quantum numbers must be three integers, got {tuple(values)}")
    exc = Excitation(*(int(v) for v in values))
    if any(v < 0 for v in exc):
        raise ValueError(f"quantum numbers must be non-negative, got {exc}")
    if exc.total > DEGREE_LIMIT:
        raise DegreeLimitError(
            f"total excitation {exc.total} exceeds the supported bound {DEGREE_LIMIT}"
        )
    return exc


def as_sigma_sq(sigma_sq) -> NormalFrequenciesSq:
    s = NormalFrequenciesSq(*(float(v) for v in sigma_sq))
    if any(v <= 0 for v in s):
        raise ValueError(f"squared frequencies must be positive, got {s}")
    return s


@dataclass(frozen=True)
class MixingMatrix:
    """Orthogonal 3x3 rotation from mass-scaled positions to normal coordinates.

    Rows are (a1, a2, a3), (b1, b2, b3), (c1, c2, c3); each row and
    column is unit-norm and det M = +1.
    """

    angles: Angles
    matrix: np.ndarray = field(repr=False)

    @property
    def a(self) -> np.ndarray:
        return self.matrix[0]

    @property
    def b(self) -> np.ndarray:
        return self.matrix[1]

    @property
    def c(self) -> np.ndarray:
        return self.matrix[2]

    def coefficient_vector(self) -> np.ndarray:
        """The nine entries ordered (a1, b1, c1, a2, b2, c2, a3, b3, c3)."""
        return self.matrix.T.reshape(-1)


def mixing_matrix(angles) -> MixingMatrix:
    """Build the three-angle mixing matrix with its nine trigonometric entries."""
    ang = as_angles(angles)
    ct, st = math.cos(ang.theta), math.sin(ang.theta)
    cv, sv = math.cos(ang.vphi), math.sin(ang.vphi)
    cp, sp = math.cos(ang.phi), math.sin(ang.phi)
    m = np.array(
        [
            [ct * cp, -st * sv - ct * cv * sp, ct * sp * sv - st * cv],
            [sp, cp * cv, -cp * sv],
            [cp * st, ct * sv - st * cv * sp, ct * cv + st * sp * sv],
        ]
    )
    m.setflags(write=False)
    return MixingMatrix(ang, m)


def mass_scalings(masses) -> tuple[float, np.ndarray]:
    """Geometric-mean mass m and the scalings mu_i = sqrt(m_i / m).

    The product mu1 mu2 mu3 is one by construction.
    """
    ms = Masses(*(float(v) for v in masses))
    if any(v <= 0 for v in ms):
        raise ValueError(f"masses must be positive, got {ms}")
    mean = (ms.m1 * ms.m2 * ms.m3) ** (1.0 / 3.0)
    return mean, np.sqrt(np.array(ms) / mean)


def normal_coordinates(angles, masses, x: Sequence[float]) -> np.ndarray:
    """Normal coordinates q_i = sum_j M[i][j] mu_j x_j."""
    mix = mixing_matrix(angles)
    _, mu = mass_scalings(masses)
    xv = np.asarray(x, dtype=float)
    if xv.shape != (3,):
        raise ValueError(f"expected a position triple, got shape {xv.shape}")
    return mix.matrix @ (mu * xv)


def coupling_matrix(sigma_sq, angles) -> np.ndarray:
    """Symmetric stiffness matrix K with diagonal (w1^2, w2^2, w3^2) and
    off-diagonal couplings (J12, J13, J23), from the forward map.

    Equals M^T diag(S^2) M for the mixing matrix M of the same angles,
    so its eigenvalues are exactly the generating squared frequencies.
    """
    s1, s2, s3 = as_sigma_sq(sigma_sq)
    ang = as_angles(angles)
    ct2, st2 = math.cos(ang.theta) ** 2, math.sin(ang.theta) ** 2
    cp2, sp2 = math.cos(ang.phi) ** 2, math.sin(ang.phi) ** 2
    cv2, sv2 = math.cos(ang.vphi) ** 2, math.sin(ang.vphi) ** 2
    sp, cp = math.sin(ang.phi), math.cos(ang.phi)
    sv, cv = math.sin(ang.vphi), math.cos(ang.vphi)
    s2t, s2p, s2v = math.sin(2 * ang.theta), math.sin(2 * ang.phi), math.sin(2 * ang.vphi)
    c2t, c2v = math.cos(2 * ang.theta), math.cos(2 * ang.vphi)

    w1 = (s1 * ct2 + s3 * st2) * cp2 + s2 * sp2
    w2 = (
        (s2 * cp2 + (s1 * ct2 + s3 * st2) * sp2) * cv2
        + (s3 * ct2 + s1 * st2) * sv2
        + (s1 - s3) / 2 * s2t * sp * s2v
    )
    w3 = (
        (s3 * ct2 + s1 * st2) * cv2
        + (s2 * cp2 + (s1 * ct2 + s3 * st2) * sp2) * sv2
        - (s1 - s3) / 2 * s2t * sp * s2v
    )
    j12 = (
        -((s1 - s2) * ct2 + (s3 - s2) * st2) / 2 * s2p * cv
        - (s1 - s3) / 2 * s2t * cp * sv
    )
    j13 = (
        ((s1 - s2) * ct2 + (s3 - s2) * st2) / 2 * s2p * sv
        - (s1 - s3) / 2 * s2t * cp * cv
    )
    j23 = (s1 - s3) / 2 * s2t * sp * c2v - (
        ((s2 - s3) * ct2 - (s1 - s2) * st2) * cp2 + (s1 - s3) * c2t * sp2
    ) / 2 * s2v
    return np.array([[w1, j12, j13], [j12, w2, j23], [j13, j23, w3]])


def coupling_ratios(sigma_sq, angles) -> tuple[float, float, float]:
    """The ratios (2J12/(w1^2-w2^2), 2J13/(w1^2-w3^2), 2J23/(w2^2-w3^2)).

    Raises :class:`DegenerateFrequencyError` when a squared-frequency
    difference is below 1e-12 of the largest squared frequency.
    """
    s1, s2, s3 = as_sigma_sq(sigma_sq)
    ang = as_angles(angles)

    k = coupling_matrix(sigma_sq, ang)
    w = np.diag(k)
    scale = np.abs(w).max()
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        if abs(w[i] - w[j]) < 1e-12 * scale:
            raise DegenerateFrequencyError(
                f"squared frequencies {i + 1} and {j + 1} are degenerate "
                f"(|difference| = {abs(w[i] - w[j]):.3e})"
            )

    st2, ct2 = math.sin(ang.theta) ** 2, math.cos(ang.theta) ** 2
    sp, cp = math.sin(ang.phi), math.cos(ang.phi)
    sv, cv = math.sin(ang.vphi), math.cos(ang.vphi)
    s2t, s2p, s2v = math.sin(2 * ang.theta), math.sin(2 * ang.phi), math.sin(2 * ang.vphi)
    c2t, c2v = math.cos(2 * ang.theta), math.cos(2 * ang.vphi)

    n12 = -(s1 - s2) * ct2 * s2p * cv + (s2 - s3) * st2 * s2p * cv + (s3 - s1) * s2t * cp * sv
    d12 = (s2 - s3) * (sp * sp - cp * cp * cv * cv) + (s3 - s1) * (
        st2 * sv * sv - ct2 * cp * cp + ct2 * sp * sp * cv * cv + 0.5 * s2t * sp * s2v
    )
    n13 = (s1 - s2) * ct2 * s2p * sv - (s2 - s3) * st2 * s2p * sv + (s3 - s1) * s2t * cp * cv
    d13 = (s3 - s1) * (
        st2 * cv * cv - ct2 * cp * cp + ct2 * sp * sp * sv * sv - 0.5 * s2t * sp * s2v
    ) + (s2 - s3) * (sp * sp - cp * cp * sv * sv)
    n23 = (
        (s3 - s1) * (c2t * sp * sp * s2v - s2t * sp * c2v)
        - (s2 - s3) * ct2 * cp * cp * s2v
        + (s1 - s2) * st2 * cp * cp * s2v
    )
    d23 = (s2 - s3) * cp * cp * c2v + (s3 - s1) * (
        st2 * c2v - ct2 * sp * sp * c2v - s2t * sp * s2v
    )
    return (n12 / d12, n13 / d13, n23 / d23)


def coupling_ratios_degenerate(angles) -> tuple[float, float, float]:
    """Angle-only coupling ratios in the equally spaced spectrum limit.

    These are the limits of :func:`coupling_ratios` as the squared
    frequencies approach a common value with equal spacing
    (S1^2 - S2^2 = S2^2 - S3^2 -> 0).
    """
    ang = as_angles(angles)
    st2, ct2 = math.sin(ang.theta) ** 2, math.cos(ang.theta) ** 2
    sp, cp = math.sin(ang.phi), math.cos(ang.phi)
    sv, cv = math.sin(ang.vphi), math.cos(ang.vphi)
    s2t, s2p, s2v = math.sin(2 * ang.theta), math.sin(2 * ang.phi), math.sin(2 * ang.vphi)
    c2t, c2v = math.cos(2 * ang.theta), math.cos(2 * ang.vphi)

    numerators = (
        -c2t * s2p * cv - 2 * s2t * cp * sv,
        c2t * s2p * sv - 2 * s2t * cp * cv,
        -2 * c2t * sp * sp * s2v + 2 * s2t * sp * c2v - c2t * cp * cp * s2v,
    )
    denominators = (
        sp * sp - cp * cp * cv * cv - 2 * st2 * sv * sv + 2 * ct2 * cp * cp
        - 2 * ct2 * sp * sp * cv * cv - s2t * sp * s2v,
        -2 * st2 * cv * cv + 2 * ct2 * cp * cp - 2 * ct2 * sp * sp * sv * sv
        + s2t * sp * s2v + sp * sp - cp * cp * sv * sv,
        cp * cp * c2v - 2 * st2 * c2v + 2 * ct2 * sp * sp * c2v + 2 * s2t * sp * s2v,
    )
    labels = ("ratio 12", "ratio 13", "ratio 23")
    out = []
    for num, den, label in zip(numerators, denominators, labels):
        if abs(den) < 1e-12:
            raise DegenerateFrequencyError(
                f"{label} denominator vanishes at angles {tuple(ang)} (value {den:.3e})"
            )
        out.append(num / den)
    return tuple(out)


def frequency_geometry(sigma_sq) -> tuple[float, tuple[float, float, float]]:
    """Geometric-mean frequency and the ratios (S1, S2, S3) / varpi.

    The three ratios telescope, so their product is one.
    """
    s = as_sigma_sq(sigma_sq)
    sig = tuple(math.sqrt(v) for v in s)
    varpi = (sig[0] * sig[1] * sig[2]) ** (1.0 / 3.0)
    return varpi, tuple(v / varpi for v in sig)


def energy(n, sigma_sq, scales: PhysicalScales = PhysicalScales()) -> float:
    """Eigenstate energy hbar varpi (r1 n1 + r2 n2 + r3 n3 + (r1+r2+r3)/2).

    The r_i are the frequency ratios of :func:`frequency_geometry`; in
    the fully degenerate case this reduces to hbar varpi (N + 3/2).
    """
    exc = as_excitation(n)
    if any(v <= 0 for v in scales):
        raise ValueError(f"physical scales must be strictly positive, got {scales}")
    varpi, (r1, r2, r3) = frequency_geometry(sigma_sq)
    return scales.hbar * varpi * (r1 * exc.n1 + r2 * exc.n2 + r3 * exc.n3 + (r1 + r2 + r3) / 2.0)
