"""Purity landscapes over the mixing angles for one excited quantum.

Reproduces the three one-vs-two bipartition surfaces of the unit
third-axis excitation over (theta, phi) in [-pi, pi]^2, writes one CSV
per split into demo_output/, and renders heatmaps when matplotlib is
available.

Run:  python demos/02_purity_surfaces.py
"""

import math
import pathlib

from trischmidt import Bipartition, SurfaceRequest, render_csv, surface_grid

OUT = pathlib.Path("demo_output")
OUT.mkdir(exist_ok=True)

# split label, fixed vphi (the companion-split figures use pi/2 and pi/4)
CASES = [
    ("A", Bipartition.A_VS_BC, 0.0),
    ("B", Bipartition.B_VS_AC, math.pi / 2),
    ("C", Bipartition.C_VS_AB, math.pi / 4),
]

surfaces = {}
for label, split, vphi in CASES:
    request = SurfaceRequest(
        bipartition=split,
        excitation=(0, 0, 1),
        fixed_vphi=vphi,
        grid_points=81,  # spacing pi/40 keeps theta = pi/4 on the grid
    )
    thetas, phis, grid = surface_grid(request)
    surfaces[label] = (thetas, phis, grid)
    path = OUT / f"purity_001_{label}.csv"
    path.write_text(render_csv(thetas, phis, grid), encoding="utf-8")
    print(
        f"split {label} (vphi = {vphi:.6f}): min {grid.min():.9f}, "
        f"max {grid.max():.9f}  ->  {path}"
    )

print()
print("The single-quantum purity never drops below 1/2: one excited mode")
print("shared by two parties carries at most one unit of mixing.")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping heatmaps")
else:
    fig, axes = plt.subplots(1, 3, figsize=(14, 4), constrained_layout=True)
    for ax, (label, split, vphi) in zip(axes, CASES):
        thetas, phis, grid = surfaces[label]
        image = ax.pcolormesh(phis, thetas, grid, shading="auto", vmin=0.5, vmax=1.0)
        ax.set_title(f"split {label}, vphi = {vphi:.3f}")
        ax.set_xlabel("phi")
        ax.set_ylabel("theta")
        fig.colorbar(image, ax=ax, label="purity")
    target = OUT / "purity_001_surfaces.png"
    fig.savefig(target, dpi=130)
    print(f"heatmaps -> {target}")
