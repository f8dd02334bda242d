"""The two-oscillator limit: Jacobi-polynomial amplitudes and their spectrum.

With theta = vphi = 0 the third oscillator decouples and the tripartite
amplitude table collapses onto the classic plane-rotation coefficients.
This script prints the closed-form amplitudes, their Schmidt spectrum,
and confirms both against the tripartite table and an independent 2D
overlap integral.

Run:  python demos/03_two_oscillator_limit.py
"""

import math

import numpy as np

from trischmidt import (
    Bipartition,
    coefficient_overlap_2d,
    coefficients_sum,
    gauss_hermite_rule,
    jacobi_coefficients,
    makarov_lambda,
    mixing_matrix,
    mode_spectrum,
    von_neumann_entropy,
)

phi = math.pi / 6
print(f"rotation angle phi = pi/6 = {phi:.9f}")
print()

for (n1, n2) in ((1, 0), (2, 0), (2, 1)):
    coeffs = jacobi_coefficients(n1, n2, phi)
    lam = makarov_lambda(n1, n2, phi)
    print(f"(n1, n2) = ({n1}, {n2})")
    print("  amplitudes:", np.array_str(coeffs, precision=9))
    print("  spectrum:  ", np.array_str(lam, precision=9), f"(sum {lam.sum():.12f})")
    print(f"  entropy:    {von_neumann_entropy(lam):.9f}")

    # the same numbers sit inside the tripartite table at theta = vphi = 0
    table = coefficients_sum((n1, n2, 0), mixing_matrix((0.0, 0.0, phi)))
    spectrum = mode_spectrum(table, Bipartition.A_VS_BC).values[: len(lam)]
    print(f"  tripartite spectrum deviation: {np.abs(spectrum - lam).max():.3e}")
    print()

print("independent 2D overlap integrals (Gauss-Hermite, order 16):")
rule = gauss_hermite_rule(16)
for k in (0, 1):
    integral = coefficient_overlap_2d(1, 0, phi, k, rule)
    closed = jacobi_coefficients(1, 0, phi)[k]
    print(f"  k = {k}: integral {integral:+.12f} vs closed form {closed:+.12f}")
