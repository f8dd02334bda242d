"""Brute-force verification of Schmidt amplitudes by Gauss-Hermite quadrature.

Amplitudes are recomputed as 3D (and 2D, for the two-oscillator limit)
overlap integrals on tensor-product Gauss-Hermite grids.  This path
shares no code with the closed-form coefficient routes; it only reuses
the raw Hermite recurrence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .oscillator import MixingMatrix, as_excitation
from .specfun import hermite_phys

__all__ = [
    "QuadratureRule",
    "coefficient_overlap",
    "coefficient_overlap_2d",
    "default_rule_order",
    "gauss_hermite_rule",
]

_MAX_ORDER = 128


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights integrating f against e^(-x^2) over the real line."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray


def _hermite_function_pair(order: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal Gaussian-damped Hermite functions (h_order, h_{order-1}).

    h_0 = pi^(-1/4) e^(-x^2/2);  h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}.
    Staying in this normalization keeps every intermediate O(1), so the
    recurrence is stable through order 128 where raw Hermite values overflow.
    """
    h_prev = np.zeros_like(x)
    h_curr = math.pi**-0.25 * np.exp(-(x**2) / 2.0)
    for k in range(order):
        h_prev, h_curr = h_curr, x * math.sqrt(2.0 / (k + 1)) * h_curr - math.sqrt(
            k / (k + 1.0)
        ) * h_prev
    return h_curr, h_prev


def _christoffel_weights(order: int, x: np.ndarray) -> np.ndarray:
    """w_i = e^(-x_i^2) / sum_{k<order} p_k(x_i)^2 for orthonormal polynomials p_k."""
    h_prev = np.zeros_like(x)
    h_curr = math.pi**-0.25 * np.exp(-(x**2) / 2.0)
    sumsq = h_curr**2
    for k in range(order - 1):
        h_prev, h_curr = h_curr, x * math.sqrt(2.0 / (k + 1)) * h_curr - math.sqrt(
            k / (k + 1.0)
        ) * h_prev
        sumsq += h_curr**2
    return np.exp(-(x**2)) / sumsq


def gauss_hermite_rule(order: int) -> QuadratureRule:
    """Gauss-Hermite rule (weight e^(-x^2)) of the given order.

    Nodes are eigenvalues of the symmetric tridiagonal recurrence matrix
    (off-diagonal sqrt(i/2)), polished by two Newton steps on the
    order-th Hermite polynomial; weights follow from the Christoffel
    identity.  The rule integrates polynomials of degree 2*order - 1
    exactly.
    """
    if not isinstance(order, (int, np.integer)) or not 1 <= order <= _MAX_ORDER:
        raise ValueError(f"order must be an integer in [1, {_MAX_ORDER}], got {order!r}")
    off_diagonal = np.sqrt(np.arange(1, order) / 2.0)
    jacobi = np.diag(off_diagonal, 1)
    nodes = np.linalg.eigvalsh(jacobi + jacobi.T)

    for _ in range(2):
        h_n, h_nm1 = _hermite_function_pair(order, nodes)
        # Newton step for roots of H_order: H/H' = h_n / (sqrt(2 order) h_{n-1}).
        nodes = nodes - h_n / (math.sqrt(2.0 * order) * h_nm1)

    # Enforce the exact +/- symmetry of the node set.
    nodes = (nodes - nodes[::-1]) / 2.0
    if order % 2 == 1:
        nodes[order // 2] = 0.0

    weights = _christoffel_weights(order, nodes)
    weights = (weights + weights[::-1]) / 2.0
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(order, nodes, weights)


def default_rule_order(total_degree: int) -> int:
    """Default verification order: total degree + 10, clamped to [16, 64]."""
    return min(max(total_degree + 10, 16), 64)


def _require_orthogonal(mix: MixingMatrix) -> None:
    # |q| = |x| is what folds both Gaussians into the quadrature weight;
    # it holds only for an orthogonal mixing matrix.
    defect = np.abs(mix.matrix @ mix.matrix.T - np.eye(3)).max()
    if defect > 1e-10:
        raise ValueError(f"mixing matrix is not orthogonal (defect {defect:.3e})")


def coefficient_overlap(
    n, mix: MixingMatrix, k: int, l: int, m: int, rule: QuadratureRule
) -> float:
    """3D overlap of the eigenstate against the product state (k, l, m).

    Tensor-product Gauss-Hermite integration of

        pi^(-3/2) (2^(N+k+l+m) n1! n2! n3! k! l! m!)^(-1/2)
        H_n1(q1) H_n2(q2) H_n3(q3) H_k(x1) H_l(x2) H_m(x3)

    against e^(-|x|^2): the eigenstate and product-state Gaussians merge
    into the quadrature weight because |q| = |x|.  A selection-rule
    violating (k, l, m) is not an error; the integral must come out zero.
    """
    exc = as_excitation(n)
    if min(k, l, m) < 0:
        raise ValueError(f"product-state indices must be non-negative, got {(k, l, m)}")
    if rule.order < exc.total + 8:
        raise ValueError(
            f"rule order {rule.order} is below the exactness margin {exc.total + 8}"
        )
    _require_orthogonal(mix)

    x1 = rule.nodes[:, None, None]
    x2 = rule.nodes[None, :, None]
    x3 = rule.nodes[None, None, :]
    w = (
        rule.weights[:, None, None]
        * rule.weights[None, :, None]
        * rule.weights[None, None, :]
    )
    mm = mix.matrix
    q1 = mm[0, 0] * x1 + mm[0, 1] * x2 + mm[0, 2] * x3
    q2 = mm[1, 0] * x1 + mm[1, 1] * x2 + mm[1, 2] * x3
    q3 = mm[2, 0] * x1 + mm[2, 1] * x2 + mm[2, 2] * x3

    integrand = (
        hermite_phys(exc.n1, q1)
        * hermite_phys(exc.n2, q2)
        * hermite_phys(exc.n3, q3)
        * hermite_phys(k, np.broadcast_to(x1, q1.shape))
        * hermite_phys(l, np.broadcast_to(x2, q1.shape))
        * hermite_phys(m, np.broadcast_to(x3, q1.shape))
    )
    norm = math.pi**-1.5 / math.sqrt(
        float(
            2 ** (exc.total + k + l + m)
            * math.factorial(exc.n1)
            * math.factorial(exc.n2)
            * math.factorial(exc.n3)
            * math.factorial(k)
            * math.factorial(l)
            * math.factorial(m)
        )
    )
    return norm * float(np.sum(w * integrand))


def coefficient_overlap_2d(
    n1: int, n2: int, phi: float, k: int, rule: QuadratureRule
) -> float:
    """2D overlap of the plane-rotated two-oscillator eigenstate with (k, n1+n2-k).

    The rotation acts as q1 = cos(phi) x1 - sin(phi) x2,
    q2 = sin(phi) x1 + cos(phi) x2.
    """
    if min(n1, n2, k) < 0:
        raise ValueError(f"indices must be non-negative, got {(n1, n2, k)}")
    partner = n1 + n2 - k
    if partner < 0:
        raise ValueError(f"k = {k} exceeds the total excitation {n1 + n2}")
    if rule.order < n1 + n2 + 8:
        raise ValueError(
            f"rule order {rule.order} is below the exactness margin {n1 + n2 + 8}"
        )
    x1 = rule.nodes[:, None]
    x2 = rule.nodes[None, :]
    w = rule.weights[:, None] * rule.weights[None, :]
    q1 = math.cos(phi) * x1 - math.sin(phi) * x2
    q2 = math.sin(phi) * x1 + math.cos(phi) * x2
    integrand = (
        hermite_phys(n1, q1)
        * hermite_phys(n2, q2)
        * hermite_phys(k, np.broadcast_to(x1, q1.shape))
        * hermite_phys(partner, np.broadcast_to(x2, q1.shape))
    )
    norm = 1.0 / math.pi / math.sqrt(
        float(
            2 ** (2 * (n1 + n2))
            * math.factorial(n1)
            * math.factorial(n2)
            * math.factorial(k)
            * math.factorial(partner)
        )
    )
    return norm * float(np.sum(w * integrand))
