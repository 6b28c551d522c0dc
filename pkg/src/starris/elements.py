"""STAR surface element coefficients and their equivalent-circuit impedances.

Each element splits the incident signal into a transmitted part T = sqrt(beta_t)
* exp(j*theta_t) and a reflected part R = sqrt(beta_r) * exp(j*theta_r).  A
passive lossless surface forces beta_t + beta_r = 1 and couples the two phases:
sqrt(beta_t * beta_r) * cos(theta_t - theta_r) = 0, i.e. |theta_t - theta_r|
must be pi/2 or 3*pi/2 whenever both amplitudes are nonzero.  Equivalently,
the element's electric and magnetic impedances are purely imaginary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

FREE_SPACE_IMPEDANCE = 376.73  # ohms

ENERGY_TOL = 1e-9
PHASE_COUPLING_TOL = 1e-6
# denominators in the impedance maps are treated as singular below this
# fraction of the wave impedance
SINGULARITY_TOL = 1e-12
DEGENERATE_TOL = 1e-9


class SingularImpedanceError(ValueError):
    """An impedance-to-coefficient denominator is numerically zero."""


class DegenerateCoefficientError(ValueError):
    """The requested (T, R) pair has no finite impedance realization."""


@dataclass(frozen=True)
class StarCoefficients:
    """Per-element transmission/reflection energy fractions and phases.

    beta_t, beta_r are the energy fractions (amplitudes squared); theta_t,
    theta_r are phases in radians.  All four arrays have length N.
    """

    beta_t: np.ndarray
    beta_r: np.ndarray
    theta_t: np.ndarray
    theta_r: np.ndarray

    def __post_init__(self):
        for name in ("beta_t", "beta_r", "theta_t", "theta_r"):
            arr = np.atleast_1d(np.asarray(getattr(self, name), dtype=float)).copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        n = len(self.beta_t)
        if any(len(getattr(self, name)) != n for name in ("beta_r", "theta_t", "theta_r")):
            raise ValueError("coefficient arrays must share one length")

    @property
    def n_elements(self) -> int:
        return len(self.beta_t)

    @classmethod
    def coupled(cls, beta_t, theta_r, sign) -> "StarCoefficients":
        """Build coefficients obeying the coupled phase law theta_t = theta_r + sign*pi/2."""
        beta_t = np.atleast_1d(np.asarray(beta_t, dtype=float))
        theta_r = np.mod(np.atleast_1d(np.asarray(theta_r, dtype=float)), 2.0 * np.pi)
        sign = np.atleast_1d(np.asarray(sign, dtype=float))
        theta_t = np.mod(theta_r + sign * (np.pi / 2.0), 2.0 * np.pi)
        return cls(beta_t=beta_t, beta_r=1.0 - beta_t, theta_t=theta_t, theta_r=theta_r)


@dataclass(frozen=True)
class ElementImpedances:
    """Equivalent electric/magnetic circuit impedances of one STAR element."""

    z_e: complex
    z_m: complex
    eta: float = FREE_SPACE_IMPEDANCE

    def is_passive_lossless(self, tol: float = 1e-9) -> bool:
        """Purely imaginary impedances realize a passive lossless element."""
        return abs(self.z_e.real) <= tol * self.eta and abs(self.z_m.real) <= tol * self.eta


@dataclass(frozen=True)
class ConstraintViolation:
    element: int
    constraint: str  # "energy" or "phase-coupling"
    residual: float


def coefficients_from_impedances(z: ElementImpedances) -> tuple[complex, complex]:
    """Map element impedances to the (T, R) coefficient pair.

    T = 2*z_e/(2*z_e + eta) - z_m/(z_m + 2*eta)
    R = -eta/(2*z_e + eta) + z_m/(z_m + 2*eta)
    """
    den_e = 2.0 * z.z_e + z.eta
    den_m = z.z_m + 2.0 * z.eta
    if abs(den_e) < SINGULARITY_TOL * z.eta or abs(den_m) < SINGULARITY_TOL * z.eta:
        raise SingularImpedanceError(
            f"impedance denominators too small: |2*z_e+eta|={abs(den_e):.3e}, "
            f"|z_m+2*eta|={abs(den_m):.3e}"
        )
    t = 2.0 * z.z_e / den_e - z.z_m / den_m
    r = -z.eta / den_e + z.z_m / den_m
    return t, r


def impedances_from_coefficients(t: complex, r: complex,
                                 eta: float = FREE_SPACE_IMPEDANCE) -> ElementImpedances:
    """Invert the coefficient map: find impedances realizing a given (T, R).

    z_e = eta*(1 + (R+T)) / (2*(1 - (R+T)))
    z_m = 2*eta*(1 + (R-T)) / (1 - (R-T))

    Pure transmission and pure reflection (T+R on the unit circle at 1) are
    limits of infinite impedance and must be special-cased by the caller.
    """
    s = r + t
    d = r - t
    if abs(1.0 - s) <= DEGENERATE_TOL or abs(1.0 - d) <= DEGENERATE_TOL:
        raise DegenerateCoefficientError(
            f"(T, R)=({t}, {r}) has no finite impedance realization"
        )
    z_e = eta * (1.0 + s) / (2.0 * (1.0 - s))
    z_m = 2.0 * eta * (1.0 + d) / (1.0 - d)
    return ElementImpedances(z_e=z_e, z_m=z_m, eta=eta)


def validate_passive_lossless(c: StarCoefficients) -> list[ConstraintViolation]:
    """Check every element against the energy and phase-coupling constraints.

    Returns one violation per failed (element, constraint) combination; an
    empty list means the coefficients describe a valid passive lossless
    surface.
    """
    violations = []
    for n in range(c.n_elements):
        bt, br = c.beta_t[n], c.beta_r[n]
        range_excess = max(0.0, -bt, -br, bt - 1.0, br - 1.0)
        energy_residual = max(abs(bt + br - 1.0), range_excess)
        if energy_residual > ENERGY_TOL:
            violations.append(ConstraintViolation(n, "energy", energy_residual))
        delta = np.mod(abs(c.theta_t[n] - c.theta_r[n]), 2.0 * np.pi)
        phase_residual = min(abs(delta - np.pi / 2.0), abs(delta - 3.0 * np.pi / 2.0))
        if phase_residual > PHASE_COUPLING_TOL:
            violations.append(ConstraintViolation(n, "phase-coupling", phase_residual))
    return violations


def coefficient_matrices(c: StarCoefficients) -> tuple[np.ndarray, np.ndarray]:
    """Diagonals of the transmission/reflection coefficient matrices.

    Only the diagonals are ever used, so the N complex coefficients are
    returned as vectors: T[n] = sqrt(beta_t[n])*exp(j*theta_t[n]), R likewise.
    """
    t = np.sqrt(c.beta_t) * np.exp(1j * c.theta_t)
    r = np.sqrt(c.beta_r) * np.exp(1j * c.theta_r)
    return t, r
