"""Finite free-free chain with second-neighbour Morse interactions.

The chain of N+1 atoms is described by the N displacement gradients
u[l] = y[l+1] - y[l] - 1, one per nearest bond.  Energy, gradient and
(tridiagonal) Hessian are analytic; a direct solve of the linearization
about the bulk state doubles as a brute-force oracle for the closed-form
boundary-layer solution.
"""

import numpy as np
from scipy.linalg import solveh_banded

from .potentials import morse, dmorse, ddmorse
from .solvers import newton_minimize

# line-search guard: keep nearest bonds clear of the repulsive blow-up
BOND_GUARD = 0.1


def _check_strains(u):
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.size < 2:
        raise ValueError("strain field must be 1D with at least two bonds")
    bad = np.nonzero(1.0 + u <= 0.0)[0]
    if bad.size:
        raise ValueError(f"bond {bad[0]} inverted: 1 + u = {1.0 + u[bad[0]]:.3e}")
    bad = np.nonzero(2.0 + u[:-1] + u[1:] <= 0.0)[0]
    if bad.size:
        raise ValueError(f"second-neighbour bond {bad[0]} inverted")
    return u


def energy(p, u):
    """Chain energy sum(phi(1+u[l])) + sum(phi(2+u[l]+u[l+1])).

    Both chain ends are free: there are N nearest bonds and N-1
    second-neighbour bonds, no fictitious bonds beyond the ends.
    """
    u = _check_strains(u)
    return float(np.sum(morse(p, 1.0 + u)) + np.sum(morse(p, 2.0 + u[:-1] + u[1:])))


def gradient(p, u):
    u = _check_strains(u)
    g = dmorse(p, 1.0 + u).copy()
    d2 = dmorse(p, 2.0 + u[:-1] + u[1:])
    g[:-1] += d2
    g[1:] += d2
    return g


def hessian_banded(p, u):
    """Hessian in scipy upper-banded form, shape (2, N)."""
    u = _check_strains(u)
    n = u.size
    ab = np.zeros((2, n))
    h2 = ddmorse(p, 2.0 + u[:-1] + u[1:])
    diag = ddmorse(p, 1.0 + u).copy()
    diag[:-1] += h2
    diag[1:] += h2
    ab[1] = diag
    ab[0, 1:] = h2
    return ab


def hessian(p, u):
    """Dense symmetric tridiagonal Hessian, shape (N, N)."""
    ab = hessian_banded(p, u)
    return np.diag(ab[1]) + np.diag(ab[0, 1:], 1) + np.diag(ab[0, 1:], -1)


def solve_linearized(p, n):
    """Solve the linearization about the bulk state u = 0 on n bonds.

    Returns the strain field of delta2 E(0) u = -delta E(0).  The Hessian
    is positive definite for calibrated parameters; a Cholesky failure is
    reported as numpy.linalg.LinAlgError.
    """
    if n < 2:
        raise ValueError("need at least two bonds")
    zero = np.zeros(n)
    return solveh_banded(hessian_banded(p, zero), -gradient(p, zero))


def minimize(p, u0, tol=1e-12, max_iter=100):
    """Newton minimization of the chain energy from the start u0.

    Backtracking keeps 1 + u > 0.1 along the search; an indefinite
    Hessian triggers a steepest-descent fallback recorded in the trace.
    Returns u with sup-norm gradient below tol, or raises SolverError.
    """
    def hess_solve(u, g):
        return solveh_banded(hessian_banded(p, u), g)

    def guard(u):
        return bool(np.all(1.0 + u > BOND_GUARD))

    return newton_minimize(lambda u: energy(p, u), lambda u: gradient(p, u),
                           hess_solve, u0, tol=tol, max_iter=max_iter,
                           guard=guard)
