"""Closed-form solutions of the models linearized about the bulk state.

For the surface model the relaxation is confined to the first element;
for the atomistic chain it is a geometric boundary layer u0 * lam**l
whose decay factor lam is the (0, 1) root of the characteristic equation

    k2 lam^2 + (k1 + 2 k2) lam + k2 = 0

with nearest/second-neighbour stiffnesses k1, k2.  Large-stiffness
expansions of these quantities serve as independent oracles in tests.
"""

from dataclasses import dataclass

import numpy as np

from .potentials import dmorse, ddmorse, ddW, dgamma, ddgamma


@dataclass(frozen=True)
class LinearizedSolution:
    """Leading strain of a linearized boundary layer.

    kind is "atomistic" (geometric decay with factor lam) or "scb"
    (strain u0 on the first element of width h0, zero elsewhere).
    """

    u0: float
    kind: str
    lam: float | None = None
    h0: float | None = None

    def strain_field(self, n):
        """First n lattice strains of the layer."""
        if self.kind == "atomistic":
            return self.u0 * self.lam ** np.arange(n)
        u = np.zeros(n)
        u[: int(self.h0)] = self.u0
        return u


def characteristic_root(k1, k2):
    """Root in (0, 1) of k2 x^2 + (k1 + 2 k2) x + k2 = 0.

    Uses the conjugate form -2 b / (1 + 2 b + sqrt(1 + 4 b)) with
    b = k2 / k1, which is free of cancellation for small |b|.
    """
    b = k2 / k1
    if not -0.25 < b < 0.0:
        raise ValueError(f"stiffness ratio {b:.4g} outside (-1/4, 0)")
    lam = -2.0 * b / (1.0 + 2.0 * b + np.sqrt(1.0 + 4.0 * b))
    if not 0.0 < lam < 1.0:
        raise ValueError(f"characteristic root {lam:.4g} outside (0, 1)")
    return float(lam)


def decay_factor(p):
    """Boundary-layer decay factor of the atomistic chain."""
    return characteristic_root(float(ddmorse(p, 1.0)), float(ddmorse(p, 2.0)))


def surface_strain_scb(p, h0):
    """Linearized surface-model solution for first element width h0."""
    if h0 < 1:
        raise ValueError("h0 must be at least 1")
    den = float(h0 * ddW(p, 1.0) + ddgamma(p, 1.0))
    if den <= 0.0:
        raise ValueError("linearized surface operator not positive")
    return LinearizedSolution(u0=-float(dgamma(p, 1.0)) / den, kind="scb",
                              h0=float(h0))


def boundary_layer_atomistic(p, ell):
    """Closed-form layer strain dphi(2) lam^ell / (ddphi(1) + ddphi(2)(1 + lam)).

    ell may be an integer or an integer array.
    """
    lam = decay_factor(p)
    den = float(ddmorse(p, 1.0)) + float(ddmorse(p, 2.0)) * (1.0 + lam)
    u = float(dmorse(p, 2.0)) / den * lam ** np.asarray(ell, dtype=float)
    return u if np.ndim(ell) else float(u)


def atomistic_solution(p):
    """Leading strain and decay factor bundled as a LinearizedSolution."""
    return LinearizedSolution(u0=boundary_layer_atomistic(p, 0),
                              kind="atomistic", lam=decay_factor(p))


def asymptotic_predictions(alpha, h0):
    """Two-term large-stiffness truncations of the linearized quantities.

    Keys: u_scb0 and u_a0 (leading strains), lam (decay factor), mean_a
    and mean_scb (summed strains of layer and surface model).
    """
    if alpha < 4:
        raise ValueError("expansions are meaningful for alpha >= 4")
    a, h = float(alpha), float(h0)
    ea = np.exp(-a)
    return {
        "u_scb0": ea / (h * a) * (1.0 - (1.0 + 2.0 / h) * ea),
        "u_a0": ea / a * (1.0 - 4.0 * ea),
        "lam": ea - 4.0 * ea * ea,
        "mean_a": ea / a * (1.0 - 3.0 * ea),
        "mean_scb": ea / a * (1.0 - (1.0 + 2.0 / h) * ea),
    }
