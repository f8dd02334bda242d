import math

import numpy as np
import pytest

from trischmidt.entanglement import Bipartition, purity_direct
from trischmidt.surface import SurfaceRequest, render_csv, surface_grid


def test_single_axis_grid_uses_closed_form():
    request = SurfaceRequest(
        bipartition=Bipartition.A_VS_BC,
        excitation=(0, 0, 1),
        fixed_vphi=0.3,
        grid_points=9,
    )
    thetas, phis, grid = surface_grid(request)
    assert grid.shape == (9, 9)
    # spot-check two points against the direct amplitude route
    for i, j in ((0, 0), (4, 6)):
        direct = purity_direct(
            (0, 0, 1), (thetas[i], 0.3, phis[j]), Bipartition.A_VS_BC
        )
        assert grid[i, j] == pytest.approx(direct, abs=1e-10)


def test_multi_axis_grid_falls_back_to_direct_route():
    request = SurfaceRequest(
        bipartition=Bipartition.B_VS_AC,
        excitation=(1, 1, 0),
        fixed_vphi=-0.2,
        grid_points=5,
        theta_range=(-1.0, 1.0),
        phi_range=(0.0, 2.0),
    )
    thetas, phis, grid = surface_grid(request)
    assert np.all(grid > 0) and np.all(grid <= 1 + 1e-12)
    direct = purity_direct((1, 1, 0), (thetas[2], -0.2, phis[3]), Bipartition.B_VS_AC)
    assert grid[2, 3] == pytest.approx(direct, abs=1e-12)


def test_ground_state_grid_is_flat():
    request = SurfaceRequest(
        bipartition=Bipartition.C_VS_AB,
        excitation=(0, 0, 0),
        fixed_vphi=0.0,
        grid_points=3,
    )
    _, _, grid = surface_grid(request)
    assert np.all(grid == 1.0)


def test_symmetric_range_forces_exact_negation_pairs():
    request = SurfaceRequest(
        bipartition=Bipartition.A_VS_BC,
        excitation=(0, 0, 1),
        fixed_vphi=0.0,
        grid_points=11,
    )
    thetas, phis, _ = surface_grid(request)
    assert np.array_equal(thetas, -thetas[::-1])
    assert np.array_equal(phis, -phis[::-1])
    assert thetas[5] == 0.0


def test_csv_shape_and_precision():
    request = SurfaceRequest(
        bipartition=Bipartition.A_VS_BC,
        excitation=(0, 0, 1),
        fixed_vphi=0.0,
        grid_points=3,
        theta_range=(0.0, 1.0),
        phi_range=(0.0, 1.0),
    )
    thetas, phis, grid = surface_grid(request)
    text = render_csv(thetas, phis, grid)
    lines = text.splitlines()
    assert lines[0] == "theta,phi,purity"
    assert len(lines) == 10
    # values round-trip through the emitted text
    theta, phi, value = (float(v) for v in lines[5].split(","))
    assert theta == thetas[1] and phi == phis[1]
    assert value == grid[1, 1]


def test_invalid_requests_rejected():
    with pytest.raises(ValueError):
        SurfaceRequest(
            bipartition=Bipartition.A_VS_BC,
            excitation=(0, 0, 1),
            fixed_vphi=0.0,
            grid_points=1,
        )
    with pytest.raises(ValueError):
        SurfaceRequest(
            bipartition=Bipartition.A_VS_BC,
            excitation=(0, 0, 1),
            fixed_vphi=0.0,
            theta_range=(2.0, 2.0),
        )
