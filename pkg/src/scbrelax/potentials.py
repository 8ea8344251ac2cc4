"""Shifted Morse pair potential and the energy densities derived from it.

A chain with second-neighbour Morse interactions has bulk stored energy
density W(r) = phi(r) + phi(2r) and, at a free end, the surface energy
gamma(F) = -phi(2F)/2 that corrects the half-counted second-neighbour
bond.  Two calibration modes are supported:

* ``MorseParams.calibrated(alpha)`` picks r0 so that W'(1) = 0, i.e. unit
  spacing is the bulk ground state, and phi0 so that W(1) = 0.
* ``MorseParams.unit(alpha)`` keeps r0 = 1 (the bare Morse minimum) and
  only shifts phi0 so that W(1) = 0.

All functions accept scalars or numpy arrays for the distance argument.
"""

from dataclasses import dataclass

import numpy as np

# stiffness threshold that keeps ddmorse(2) <= 0 in calibrated mode
ALPHA_CONCAVE_MIN = 1.0 + np.sqrt(3.0)


def calibrate_r0(alpha):
    """Equilibrium shift making unit spacing the minimum of W."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    a = float(alpha)
    return 1.0 + np.log((1.0 + 2.0 * np.exp(-a)) / (1.0 + 2.0 * np.exp(-2.0 * a))) / a


def calibrate_phi0(alpha, r0):
    """Energy shift making W(1) = 0 for the given (alpha, r0)."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")

    def raw(r):
        return np.exp(-2.0 * alpha * (r - r0)) - 2.0 * np.exp(-alpha * (r - r0))

    return 0.5 * (raw(1.0) + raw(2.0))


@dataclass(frozen=True)
class MorseParams:
    """Parameters of the shifted Morse potential.

    alpha : dimensionless stiffness (> 0)
    r0    : location of the bare Morse minimum (> 0)
    phi0  : additive energy shift
    """

    alpha: float
    r0: float
    phi0: float

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.r0 <= 0:
            raise ValueError("r0 must be positive")

    @classmethod
    def calibrated(cls, alpha):
        """Full calibration: W'(1) = 0 via r0 and W(1) = 0 via phi0.

        Requires alpha >= 1 + sqrt(3) so that ddmorse(2) <= 0, which keeps
        the linearized boundary-layer problem well posed.
        """
        if alpha < ALPHA_CONCAVE_MIN:
            raise ValueError(
                f"calibrated mode needs alpha >= 1 + sqrt(3) ~= {ALPHA_CONCAVE_MIN:.6f}, "
                f"got {alpha}"
            )
        r0 = calibrate_r0(alpha)
        return cls(float(alpha), r0, calibrate_phi0(alpha, r0))

    @classmethod
    def unit(cls, alpha):
        """Unit mode: r0 = 1, phi0 still chosen so that W(1) = 0."""
        return cls(float(alpha), 1.0, calibrate_phi0(alpha, 1.0))


def _check_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise ValueError("pair distance must be positive")
    return r


def morse(p, r):
    """phi(r) = exp(-2 a (r - r0)) - 2 exp(-a (r - r0)) - phi0."""
    r = _check_r(r)
    e = np.exp(-p.alpha * (r - p.r0))
    return e * e - 2.0 * e - p.phi0


def dmorse(p, r):
    r = _check_r(r)
    e = np.exp(-p.alpha * (r - p.r0))
    return -2.0 * p.alpha * (e * e - e)


def ddmorse(p, r):
    r = _check_r(r)
    e = np.exp(-p.alpha * (r - p.r0))
    return 2.0 * p.alpha**2 * (2.0 * e * e - e)


def W(p, r):
    """Bulk stored energy density W(r) = phi(r) + phi(2r)."""
    return morse(p, r) + morse(p, 2.0 * np.asarray(r, dtype=float))


def dW(p, r):
    return dmorse(p, r) + 2.0 * dmorse(p, 2.0 * np.asarray(r, dtype=float))


def ddW(p, r):
    return ddmorse(p, r) + 4.0 * ddmorse(p, 2.0 * np.asarray(r, dtype=float))


def gamma(p, F):
    """Free-end surface energy gamma(F) = -phi(2F)/2.

    Chosen so that bulk density plus one surface term per free end
    reproduces the chain energy exactly under homogeneous stretch.
    """
    return -0.5 * morse(p, 2.0 * np.asarray(F, dtype=float))


def dgamma(p, F):
    return -dmorse(p, 2.0 * np.asarray(F, dtype=float))


def ddgamma(p, F):
    return -2.0 * ddmorse(p, 2.0 * np.asarray(F, dtype=float))


def stiffness_expansions(alpha):
    """Two-term large-alpha expansions of the calibrated stiffness coefficients.

    Returns the truncations
        ddphi1 ~ 2 a^2 + 12 a^2 e^-a        (error O(a^2 e^-2a))
        dphi2  ~ 2 a e^-a + 2 a e^-2a       (error O(a e^-3a))
        ddphi2 ~ -2 a^2 e^-a                (error O(a^2 e^-3a))
    used as oracles for the asymptotic tests.
    """
    a = float(alpha)
    ea = np.exp(-a)
    return {
        "ddphi1": 2.0 * a**2 + 12.0 * a**2 * ea,
        "dphi2": 2.0 * a * ea + 2.0 * a * ea * ea,
        "ddphi2": -2.0 * a**2 * ea,
    }
