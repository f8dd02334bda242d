"""Physical-parameter map, energies, and the brute-force oracle layer.

Shows the forward map from normal-mode squared frequencies to the
coupled stiffness matrix, the coupling ratios with their equal-spacing
limit, the energy spectrum, and a sample of 3D quadrature cross-checks
of the closed-form amplitudes.

Run:  python demos/04_model_and_oracles.py
"""

import numpy as np

from trischmidt import (
    coefficient_overlap,
    coefficients_sum,
    coupling_matrix,
    coupling_ratios,
    coupling_ratios_degenerate,
    default_rule_order,
    energy,
    frequency_geometry,
    gauss_hermite_rule,
    mixing_matrix,
)

sigma_sq = (1.0, 2.0, 3.0)
angles = (0.4, -0.25, 0.3)

print("=== stiffness matrix from the spectrum ===")
k = coupling_matrix(sigma_sq, angles)
print(np.array_str(k, precision=6))
print("eigenvalues:", np.sort(np.linalg.eigvalsh(k)), "(generating spectrum", sigma_sq, ")")
m = mixing_matrix(angles).matrix
print("congruence defect |M K M^T - diag|:",
      np.abs(m @ k @ m.T - np.diag(sigma_sq)).max())
print()

print("=== coupling ratios ===")
ratios = coupling_ratios(sigma_sq, angles)
print("2 J_ij / (w_i^2 - w_j^2) =", tuple(f"{r:+.6f}" for r in ratios))
eps = 1e-6
near = coupling_ratios((1 + 2 * eps, 1 + eps, 1.0), angles)
limit = coupling_ratios_degenerate(angles)
print("equal-spacing spectrum, eps = 1e-6:", tuple(f"{r:+.6f}" for r in near))
print("angle-only limit:                  ", tuple(f"{r:+.6f}" for r in limit))
print()

print("=== energies ===")
varpi, freq_ratios = frequency_geometry(sigma_sq)
print(f"geometric-mean frequency {varpi:.6f}, ratios {tuple(f'{r:.6f}' for r in freq_ratios)}")
for n in ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)):
    print(f"  E{n} = {energy(n, sigma_sq):.9f}")
print()

print("=== quadrature oracle spot checks ===")
mix = mixing_matrix(angles)
exc = (1, 0, 1)
rule = gauss_hermite_rule(default_rule_order(sum(exc)))
table = coefficients_sum(exc, mix)
print(f"n = {exc}, rule order {rule.order}")
worst = 0.0
for k_idx, l_idx, m_idx, value in table.items():
    integral = coefficient_overlap(exc, mix, k_idx, l_idx, m_idx, rule)
    worst = max(worst, abs(integral - value))
print(f"  worst |integral - closed form| over {sum(1 for _ in table.items())} entries: {worst:.3e}")
violating = coefficient_overlap(exc, mix, 1, 1, 1, rule)
print(f"  overlap violating the selection rule: {violating:.3e} (must vanish)")
print()
print("run `trischmidt verify` for the complete invariant suite")
