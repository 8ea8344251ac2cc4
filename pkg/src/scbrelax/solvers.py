"""Guarded Newton minimization shared by the 1D and 2D models.

The driver only needs callables for energy, gradient and a Hessian solve;
the model modules supply structure-exploiting solves (banded, diagonal or
dense with a gauge fix).  Steps are safeguarded by an Armijo backtracking
line search and an optional feasibility guard that keeps trial states away
from the repulsive blow-up of the pair potential.
"""

import numpy as np


class SolverError(RuntimeError):
    """Raised when the Newton iteration fails; carries the iteration trace."""

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace


def newton_minimize(energy, gradient, hess_solve, u0, *, tol, max_iter=100,
                    guard=None, project=None, armijo=1e-4, backtrack=0.5,
                    min_step=1e-14):
    """Minimize a smooth energy with Newton steps and backtracking.

    Parameters
    ----------
    energy, gradient : callables of the state vector
    hess_solve : callable(u, g) -> d solving H(u) d = g; raise
        numpy.linalg.LinAlgError to signal an indefinite Hessian, which
        makes the driver fall back to a steepest-descent step.
    u0 : initial state (returned unchanged if already converged)
    tol : sup-norm gradient tolerance
    guard : optional callable(u) -> bool; infeasible trial steps are
        shrunk until the guard holds
    project : optional callable(u) -> u applied after every accepted step
        (gauge fixing)

    Returns the minimizer.  Raises SolverError on non-convergence, with
    the per-iteration trace attached.
    """
    u = np.asarray(u0, dtype=float)
    if project is not None:
        u = project(u)
    trace = []
    for it in range(max_iter):
        g = gradient(u)
        gnorm = float(np.max(np.abs(g))) if g.size else 0.0
        if gnorm <= tol:
            return u
        mode = "newton"
        try:
            d = hess_solve(u, g)
        except np.linalg.LinAlgError:
            d, mode = None, "sd"
        if d is not None:
            slope = -float(np.vdot(g, d))
            if slope >= 0.0:  # not a descent direction, Hessian unreliable
                d, mode = None, "sd"
        if d is None:
            scale = float(np.max(np.abs(g)))
            d = g / max(scale, 1.0)
            slope = -float(np.vdot(g, d))

        e0 = energy(u)
        t = 1.0
        while True:
            trial = u - t * d
            if (guard is None or guard(trial)) and \
                    energy(trial) <= e0 + armijo * t * slope:
                break
            t *= backtrack
            if t < min_step:
                trace.append((it, gnorm, t, mode))
                raise SolverError(
                    f"line search failed at iteration {it} (|g|={gnorm:.3e})",
                    trace)
        u = trial
        if project is not None:
            u = project(u)
        trace.append((it, gnorm, t, mode))

    g = gradient(u)
    gnorm = float(np.max(np.abs(g)))
    if gnorm <= tol:
        return u
    raise SolverError(
        f"no convergence after {max_iter} iterations (|g|={gnorm:.3e})", trace)
