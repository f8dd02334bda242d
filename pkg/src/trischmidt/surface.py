"""Purity-versus-angle surface grids (figure reproduction data)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entanglement import Bipartition, closed_form_purity, purity_direct
from .oscillator import Excitation, as_excitation

__all__ = ["SurfaceRequest", "render_csv", "surface_grid"]


@dataclass(frozen=True)
class SurfaceRequest:
    """A purity surface over (theta, phi) at fixed vphi."""

    bipartition: Bipartition
    excitation: Excitation
    fixed_vphi: float
    grid_points: int = 101
    theta_range: tuple[float, float] = (-math.pi, math.pi)
    phi_range: tuple[float, float] = (-math.pi, math.pi)

    def __post_init__(self):
        if self.grid_points < 2:
            raise ValueError(f"grid_points must be at least 2, got {self.grid_points}")
        for name, (lo, hi) in (("theta", self.theta_range), ("phi", self.phi_range)):
            if not lo < hi:
                raise ValueError(f"{name}_range must be non-degenerate, got ({lo}, {hi})")


def _single_axis(exc: Excitation) -> str | None:
    nonzero = [i for i, v in enumerate(exc) if v > 0]
    if len(nonzero) == 1:
        return ("n1", "n2", "n3")[nonzero[0]]
    return None


def _axis_values(rng: tuple[float, float], count: int) -> np.ndarray:
    values = np.linspace(rng[0], rng[1], count)
    if rng[0] == -rng[1]:
        # force exact +/- pairing so sign symmetries survive emission
        values = (values - values[::-1]) / 2.0
    return values


def surface_grid(req: SurfaceRequest) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Evaluate the purity grid; returns (thetas, phis, values[t, p]).

    Single-axis excitations go through the Legendre closed form; the
    general case falls back to the full amplitude table per point.
    """
    exc = as_excitation(req.excitation)
    thetas = _axis_values(req.theta_range, req.grid_points)
    phis = _axis_values(req.phi_range, req.grid_points)
    grid = np.empty((req.grid_points, req.grid_points))

    axis = _single_axis(exc)
    quanta = exc.total
    for i, theta in enumerate(thetas):
        for j, phi in enumerate(phis):
            angles = (theta, req.fixed_vphi, phi)
            if quanta == 0:
                grid[i, j] = 1.0
            elif axis is not None:
                grid[i, j] = closed_form_purity(axis, req.bipartition, quanta, angles)
            else:
                grid[i, j] = purity_direct(exc, angles, req.bipartition)
    return thetas, phis, grid


def render_csv(thetas: np.ndarray, phis: np.ndarray, grid: np.ndarray) -> str:
    """Theta-major CSV with header, LF line endings, full-precision values."""
    lines = ["theta,phi,purity"]
    for i, theta in enumerate(thetas):
        for j, phi in enumerate(phis):
            lines.append(
                f"{theta:.17g},{phi:.17g},{grid[i, j]:.17g}"
            )
    return "\n".join(lines) + "\n"
