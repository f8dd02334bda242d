"""Bipartition mode spectra, purities, and the two-oscillator reduction.

A tripartite eigenstate admits three Schmidt decompositions, splitting
one oscillator from the remaining pair.  The reduced-density-matrix
eigenvalues for each split follow from the amplitude table by summing
squares along rows (A|BC), columns (B|AC), or anti-diagonals (C|AB).
For states with a single excited axis all nine (axis, bipartition)
purities collapse onto one Legendre closed form in a single squared
mixing-matrix entry.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .oscillator import Excitation, mixing_matrix
from .schmidt import SchmidtMatrix
from .specfun import DEGREE_LIMIT, DegreeLimitError, legendre

__all__ = [
    "BipartiteFactorization",
    "Bipartition",
    "ModeSpectrum",
    "SchmidtTerm",
    "bipartite_factorization",
    "closed_form_purity",
    "jacobi_coefficients",
    "makarov_lambda",
    "mode_spectrum",
    "purity",
    "purity_direct",
    "von_neumann_entropy",
]

# Schmidt indices whose spectrum weight falls below this are dropped:
# the partner state is undefined at exactly zero weight.
_WEIGHT_FLOOR = 1e-14

# Within this distance of s^2 = 1/2 the Legendre closed form is evaluated
# by its underlying binomial sum; prefactor and argument diverge in
# opposite directions and cancel analytically but not numerically.
_SINGULAR_WINDOW = 1e-6


class Bipartition(enum.Enum):
    """One oscillator split off against the remaining pair."""

    A_VS_BC = "A"
    B_VS_AC = "B"
    C_VS_AB = "C"

    @property
    def column(self) -> int:
        """Mixing-matrix column distinguished by this split."""
        return {"A": 0, "B": 1, "C": 2}[self.value]


@dataclass
class ModeSpectrum:
    """Eigenvalues of one reduced density matrix, indexed 0..N."""

    bipartition: Bipartition
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)


@dataclass
class SchmidtTerm:
    """One Schmidt index: weight and its normalized two-particle partner.

    ``partner`` lists ((i, j), amplitude) over the product basis of the
    two traced-out oscillators.
    """

    index: int
    weight: float
    partner: list[tuple[tuple[int, int], float]]


@dataclass
class BipartiteFactorization:
    """Schmidt decomposition for one bipartition: weights sum-square to one,
    partner states are mutually orthonormal by construction."""

    bipartition: Bipartition
    excitation: Excitation
    terms: list[SchmidtTerm]

    def reconstruct(self) -> np.ndarray:
        """Reassemble the amplitude table from weights and partners."""
        n = self.excitation.total
        amps = np.zeros((n + 1, n + 1))
        for term in self.terms:
            for (i, j), amplitude in term.partner:
                if self.bipartition is Bipartition.A_VS_BC:
                    amps[term.index, i] = term.weight * amplitude
                elif self.bipartition is Bipartition.B_VS_AC:
                    amps[i, term.index] = term.weight * amplitude
                else:
                    amps[i, n - i - term.index] = term.weight * amplitude
        return amps


def mode_spectrum(matrix: SchmidtMatrix, bipartition: Bipartition) -> ModeSpectrum:
    """Reduced-density-matrix eigenvalues for the chosen split.

    A|BC: alpha_k = sum_l A[k,l]^2; B|AC: beta_l = sum_k A[k,l]^2;
    C|AB: gamma_s = sum_k A[k, N-k-s]^2.  Each spectrum sums to one.
    """
    sq = matrix.amplitudes**2
    n = matrix.total
    if bipartition is Bipartition.A_VS_BC:
        values = sq.sum(axis=1)
    elif bipartition is Bipartition.B_VS_AC:
        values = sq.sum(axis=0)
    else:
        values = np.array(
            [sum(sq[k, n - k - s] for k in range(n - s + 1)) for s in range(n + 1)]
        )
    return ModeSpectrum(bipartition, values)


def purity(spectrum) -> float:
    """Trace of the squared reduced density matrix, sum of squared eigenvalues."""
    values = spectrum.values if isinstance(spectrum, ModeSpectrum) else np.asarray(spectrum)
    return float(np.sum(values**2))


def von_neumann_entropy(spectrum) -> float:
    """Entropy -sum v ln v of a mode spectrum, with 0 ln 0 = 0."""
    values = spectrum.values if isinstance(spectrum, ModeSpectrum) else np.asarray(spectrum)
    positive = values[values > 0.0]
    return float(-np.sum(positive * np.log(positive)))


def purity_direct(n, angles, bipartition: Bipartition) -> float:
    """Purity via the full amplitude table (any excitation)."""
    from .schmidt import coefficients_sum

    return purity(mode_spectrum(coefficients_sum(n, mixing_matrix(angles)), bipartition))


def _binomial_purity(u: float, n: int) -> float:
    # sum_k C(n,k)^2 u^(2k) (1-u)^(2(n-k)) -- exact rewrite of the
    # Legendre form, used inside the removable-singularity window.
    return sum(
        math.comb(n, k) ** 2 * u ** (2 * k) * (1.0 - u) ** (2 * (n - k))
        for k in range(n + 1)
    )


def closed_form_purity(axis: str, bipartition: Bipartition, n: int, angles) -> float:
    """Single-axis purity by the unified Legendre closed form.

    For an eigenstate with ``n`` quanta on one axis (``"n1"``, ``"n2"``
    or ``"n3"``) and zeros elsewhere, every bipartition purity is

        ((1-u)^2 - u^2)^n * P_n(((1-u)^2 + u^2) / ((1-u)^2 - u^2)),

    with u = s^2 and s the mixing-matrix entry at (axis row,
    bipartition column).  The removable point u = 1/2 is evaluated by
    the direct binomial sum.
    """
    rows = {"n1": 0, "n2": 1, "n3": 2}
    if axis not in rows:
        raise ValueError(f"axis must be one of 'n1', 'n2', 'n3', got {axis!r}")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(
            f"single-axis quantum number must be a positive integer, got {n!r}; "
            "use purity() of the trivial spectrum for the ground state"
        )
    if n > DEGREE_LIMIT:
        raise DegreeLimitError(f"excitation {n} exceeds the supported bound {DEGREE_LIMIT}")
    mix = mixing_matrix(angles)
    s = float(mix.matrix[rows[axis], bipartition.column])
    u = s * s
    if abs(u - 0.5) < _SINGULAR_WINDOW:
        return _binomial_purity(u, n)
    prefactor = (1.0 - 2.0 * u) ** n
    argument = ((1.0 - u) ** 2 + u * u) / (1.0 - 2.0 * u)
    return prefactor * legendre(n, argument)


def bipartite_factorization(
    matrix: SchmidtMatrix, bipartition: Bipartition
) -> BipartiteFactorization:
    """Weights and normalized partner states of one Schmidt decomposition.

    The partner of index k (split A|BC) carries amplitude A[k,l] /
    sqrt(alpha_k) on the product state (l, N-k-l); analogously for the
    other splits.  Indices with spectrum weight below 1e-14 are omitted.
    Partners for distinct indices occupy disjoint product states, so
    orthonormality is automatic.
    """
    n = matrix.total
    spectrum = mode_spectrum(matrix, bipartition)
    terms = []
    for index in range(n + 1):
        weight_sq = float(spectrum.values[index])
        if weight_sq < _WEIGHT_FLOOR:
            continue
        weight = math.sqrt(weight_sq)
        partner = []
        for k in range(n - index + 1):
            if bipartition is Bipartition.A_VS_BC:
                pair, amplitude = (k, n - index - k), matrix.amplitudes[index, k]
            elif bipartition is Bipartition.B_VS_AC:
                pair, amplitude = (k, n - index - k), matrix.amplitudes[k, index]
            else:
                pair, amplitude = (k, n - index - k), matrix.amplitudes[k, n - k - index]
            partner.append((pair, float(amplitude) / weight))
        terms.append(SchmidtTerm(index, weight, partner))
    return BipartiteFactorization(bipartition, matrix.excitation, terms)


def jacobi_coefficients(n1: int, n2: int, phi: float) -> np.ndarray:
    """Two-oscillator Schmidt amplitudes for a plane rotation by phi.

    A_k = sqrt(k! (n1+n2-k)! / (n1! n2!)) (-sin phi)^(n1-k)
          (cos phi)^(n2-k) P_k^(n1-k, n2-k)(cos 2phi),  k = 0..n1+n2.

    Evaluated through the expanded binomial form

        sum_s C(n1, k-s) C(n2, s) (-1)^(n1-k+s)
              sin(phi)^(n1-k+2s) cos(phi)^(n2+k-2s),

    which is identical term by term (the Jacobi factor supplies the
    compensating sine/cosine powers) but carries no negative exponents,
    so the multiples of pi/2 where the literal product degenerates to
    0^(-1) are evaluated exactly.
    """
    if n1 < 0 or n2 < 0:
        raise ValueError(f"quantum numbers must be non-negative, got {(n1, n2)}")
    if n1 + n2 > DEGREE_LIMIT:
        raise DegreeLimitError(
            f"total excitation {n1 + n2} exceeds the supported bound {DEGREE_LIMIT}"
        )
    sin_phi, cos_phi = math.sin(phi), math.cos(phi)
    out = np.zeros(n1 + n2 + 1)
    for k in range(n1 + n2 + 1):
        norm = math.sqrt(
            float(math.factorial(k) * math.factorial(n1 + n2 - k))
            / float(math.factorial(n1) * math.factorial(n2))
        )
        acc = 0.0
        for s in range(max(0, k - n1), min(k, n2) + 1):
            acc += (
                math.comb(n1, k - s)
                * math.comb(n2, s)
                * (-1.0) ** (n1 - k + s)
                * sin_phi ** (n1 - k + 2 * s)
                * cos_phi ** (n2 + k - 2 * s)
            )
        out[k] = norm * acc
    return out


def makarov_lambda(n1: int, n2: int, phi: float) -> np.ndarray:
    """Two-oscillator Schmidt-mode spectrum: squared amplitudes, summing to one."""
    return jacobi_coefficients(n1, n2, phi) ** 2
