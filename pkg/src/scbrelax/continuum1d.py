"""P0 finite-element Cauchy-Born and surface Cauchy-Born models on a 1D grid.

The deformation is piecewise affine on integer grid nodes, so the
displacement gradient is one constant U[j] per element.  The bulk model
integrates W elementwise; the surface model adds gamma(1 + U) at free
ends.  With ``surface="none"`` the same code is the plain Cauchy-Born
model.
"""

from dataclasses import dataclass

import numpy as np

from .potentials import W, dW, ddW, gamma, dgamma, ddgamma
from .solvers import newton_minimize
from .chain1d import BOND_GUARD

_SURFACE_MODES = ("none", "left", "both")


@dataclass(frozen=True)
class Grid1D:
    """Strictly increasing integer nodes X with X[0] = 0."""

    nodes: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes)
        if nodes.ndim != 1 or nodes.size < 2:
            raise ValueError("grid needs at least two nodes")
        if np.any(nodes != np.round(nodes)):
            raise ValueError("grid nodes must be integers")
        nodes = nodes.astype(int)
        if nodes[0] != 0:
            raise ValueError("grid must start at 0")
        if np.any(np.diff(nodes) < 1):
            raise ValueError("grid nodes must be strictly increasing")
        object.__setattr__(self, "nodes", nodes)

    @property
    def h(self):
        return np.diff(self.nodes)

    @property
    def n_elements(self):
        return self.nodes.size - 1

    @property
    def length(self):
        return int(self.nodes[-1])


def coarse_grid(length=30, h=5):
    """Uniform grid (0, h, 2h, ..., length)."""
    if length % h != 0:
        raise ValueError("h must divide the chain length")
    return Grid1D(np.arange(0, length + 1, h))


def boundary_layer_grid(length=30, h=5):
    """Uniform grid with one atom-sized element at each end.

    Nodes (0, 1, h, 2h, ..., length-h, length-1, length); the interior
    lines stay on multiples of h.
    """
    if length % h != 0:
        raise ValueError("h must divide the chain length")
    if h < 2 or length < 2 * h:
        raise ValueError("boundary layer grid needs h >= 2 and length >= 2h")
    nodes = np.concatenate(([0, 1], np.arange(h, length - h + 1, h),
                            [length - 1, length]))
    return Grid1D(nodes)


def _check_field(grid, U):
    U = np.asarray(U, dtype=float)
    if U.shape != (grid.n_elements,):
        raise ValueError(
            f"field has {U.size} values for {grid.n_elements} elements")
    if np.any(1.0 + U <= 0.0):
        raise ValueError("element strain inverted: 1 + U <= 0")
    return U


def _check_surface(surface):
    if surface not in _SURFACE_MODES:
        raise ValueError(f"surface must be one of {_SURFACE_MODES}")


def energy_cb(p, grid, U):
    """Bulk energy sum_j h_j W(1 + U_j)."""
    U = _check_field(grid, U)
    return float(np.sum(grid.h * W(p, 1.0 + U)))


def energy_scb(p, grid, U, surface="both"):
    """Bulk energy plus gamma(1 + U) at each requested free end."""
    _check_surface(surface)
    U = _check_field(grid, U)
    e = energy_cb(p, grid, U)
    if surface in ("left", "both"):
        e += float(gamma(p, 1.0 + U[0]))
    if surface == "both":
        e += float(gamma(p, 1.0 + U[-1]))
    return e


def gradient_scb(p, grid, U, surface="both"):
    _check_surface(surface)
    U = _check_field(grid, U)
    g = grid.h * dW(p, 1.0 + U)
    if surface in ("left", "both"):
        g[0] += dgamma(p, 1.0 + U[0])
    if surface == "both":
        g[-1] += dgamma(p, 1.0 + U[-1])
    return g


def hessian_diag_scb(p, grid, U, surface="both"):
    """Diagonal of the Hessian; P0 elements are mutually decoupled."""
    _check_surface(surface)
    U = _check_field(grid, U)
    d = grid.h * ddW(p, 1.0 + U)
    if surface in ("left", "both"):
        d[0] += ddgamma(p, 1.0 + U[0])
    if surface == "both":
        d[-1] += ddgamma(p, 1.0 + U[-1])
    return d


def _minimize(p, grid, U0, tol, max_iter, surface):
    if U0 is None:
        U0 = np.zeros(grid.n_elements)

    def hess_solve(U, g):
        d = hessian_diag_scb(p, grid, U, surface)
        if np.any(d <= 0.0):
            raise np.linalg.LinAlgError("indefinite diagonal Hessian")
        return g / d

    def guard(U):
        return bool(np.all(1.0 + U > BOND_GUARD))

    return newton_minimize(lambda U: energy_scb(p, grid, U, surface),
                           lambda U: gradient_scb(p, grid, U, surface),
                           hess_solve, U0, tol=tol, max_iter=max_iter,
                           guard=guard)


def minimize_scb(p, grid, U0=None, tol=1e-12, max_iter=100, surface="both"):
    """Newton solve of the surface model; scalar per-element problems."""
    _check_surface(surface)
    return _minimize(p, grid, U0, tol, max_iter, surface)


def minimize_cb(p, grid, U0=None, tol=1e-12, max_iter=100):
    """Newton solve of the bulk model (no surface terms)."""
    return _minimize(p, grid, U0, tol, max_iter, "none")
