"""Baryon-antibaryon spin correlation states.

Builds the 4x4 correlation matrix C_{mu,nu} of a spin-1/2 pair produced
in e+e- annihilation through a vector charmonium resonance, in two
variants (massless lepton limit and the finite-lepton-mass correction),
reduces it to X-state coefficients by the y/z axis swap plus block
diagonalization, and assembles the physical density matrix in the
sigma_z product basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ArgumentError, SingularityError, ValidationError
from .linalg import hermitian_eigen, kron, pauli

# Tolerances specific to state objects.
ATOL_STATE_HERM = 1e-12
ATOL_STATE_TRACE = 1e-12
ATOL_STATE_PSD = 1e-9
ATOL_XSHAPE = 1e-14
ATOL_COEFF = 1e-9        # slack on |coefficient| <= 1
_DENOM_FLOOR = 1e-12     # angular prefactor guard


class MassMode(Enum):
    """Which correlation-matrix variant to build."""

    MASSLESS = "massless"
    MASS_CORRECTED = "mass_corrected"


@dataclass(frozen=True)
class DecayParameters:
    """Decay asymmetry alpha_psi with the derived (beta_psi, gamma_psi) pair.

    beta_psi = sqrt(1-alpha^2) sin(delta_phi) and
    gamma_psi = sqrt(1-alpha^2) cos(delta_phi), so the triple always
    sits on the unit sphere: alpha^2 + beta^2 + gamma^2 = 1.
    """

    alpha_psi: float
    delta_phi: float
    beta_psi: float
    gamma_psi: float

    def __post_init__(self) -> None:
        if not abs(self.alpha_psi) <= 1.0:
            raise ValidationError(f"alpha_psi out of [-1,1]: {self.alpha_psi}")
        if not abs(self.delta_phi) <= math.pi:
            raise ValidationError(f"delta_phi out of [-pi,pi]: {self.delta_phi}")
        closure = (
            self.alpha_psi**2 + self.beta_psi**2 + self.gamma_psi**2
        )
        if abs(closure - 1.0) > 1e-12:
            raise ValidationError(
                f"alpha^2+beta^2+gamma^2 = {closure!r}, expected 1"
            )


@dataclass(frozen=True)
class XStateCoefficients:
    """Reduced description (a, b1, b2, b3) of the X-state.

    a is the joint z-polarization coefficient; b1 >= b2 and b3 are the
    diagonal spin-correlation coefficients after the axis swap.
    """

    a: float
    b1: float
    b2: float
    b3: float

    def __post_init__(self) -> None:
        if self.b1 < self.b2 - 1e-12:
            raise ValidationError(f"b1 < b2: ({self.b1}, {self.b2})")
        if abs(self.a) > 1.0 + ATOL_COEFF:
            raise ValidationError(f"|a| > 1: {self.a}")
        for name, b in (("b1", self.b1), ("b2", self.b2), ("b3", self.b3)):
            if abs(b) > 1.0 + ATOL_COEFF:
                raise ValidationError(f"|{name}| > 1: {b}")


def wrap_angle(x: float) -> float:
    """Reduce an angle to the principal interval [-pi, pi]."""
    return math.remainder(x, 2.0 * math.pi)


def derive_form_params(alpha: float, delta_phi: float) -> DecayParameters:
    """Build DecayParameters from the asymmetry and form-factor phase.

    Requires |alpha| <= 1 and |delta_phi| <= pi (wrap_angle reduces
    out-of-range phases beforehand if needed).
    """
    if not abs(alpha) <= 1.0:
        raise ArgumentError(f"alpha must lie in [-1,1], got {alpha}")
    if not abs(delta_phi) <= math.pi:
        raise ArgumentError(
            f"delta_phi must lie in [-pi,pi], got {delta_phi}; "
            "use wrap_angle first"
        )
    root = math.sqrt(max(0.0, 1.0 - alpha * alpha))
    return DecayParameters(
        alpha_psi=alpha,
        delta_phi=delta_phi,
        beta_psi=root * math.sin(delta_phi),
        gamma_psi=root * math.cos(delta_phi),
    )


def cmatrix(params: DecayParameters, phi: float, mode: MassMode) -> np.ndarray:
    """Correlation matrix C_{mu,nu} at production angle phi in [0, pi].

    Rows index the baryon, columns the antibaryon, with mu,nu in
    (0, x, y, z).  Only eight entries are nonzero.
    """
    if not 0.0 <= phi <= math.pi:
        raise ArgumentError(f"phi must lie in [0, pi], got {phi}")
    alpha, beta, gamma = params.alpha_psi, params.beta_psi, params.gamma_psi
    c = np.zeros((4, 4))
    c[0, 0] = 1.0
    if mode is MassMode.MASSLESS:
        d = 1.0 - alpha * math.cos(phi) ** 2
        if d <= _DENOM_FLOOR:
            raise SingularityError(f"vanishing denominator 1-a*cos^2(phi)={d}")
        sc = math.sin(phi) * math.cos(phi)
        c[0, 2] = c[2, 0] = gamma * sc / d
        c[1, 1] = math.sin(phi) ** 2 / d
        c[1, 3] = c[3, 1] = beta * sc / d
        c[2, 2] = alpha * math.sin(phi) ** 2 / d
        c[3, 3] = (-alpha + math.cos(phi) ** 2) / d
    elif mode is MassMode.MASS_CORRECTED:
        cos2 = math.cos(2.0 * phi)
        sin2 = math.sin(2.0 * phi)
        d = 1.0 + alpha * cos2
        if d <= _DENOM_FLOOR:
            raise SingularityError(f"vanishing denominator 1+a*cos(2phi)={d}")
        c[0, 2] = c[2, 0] = gamma * sin2 / d
        c[1, 1] = (alpha + cos2) / d
        c[1, 3] = c[3, 1] = beta * sin2 / d
        c[2, 2] = 1.0
        c[3, 3] = -(alpha + cos2) / d
    else:
        raise ArgumentError(f"unknown mass mode {mode!r}")
    return c


# 0-based (mu, nu) slots that may be populated in a correlation matrix.
_C_SPARSITY = {(0, 0), (0, 2), (2, 0), (1, 1), (1, 3), (3, 1), (2, 2), (3, 3)}


def xstate_from_cmatrix(c: np.ndarray) -> XStateCoefficients:
    """Reduce a correlation matrix to X-state coefficients.

    The y and z axes are swapped, so a = C_{0y} and b3 = C_{yy}; the
    remaining (x, z) block is diagonalized and its eigenvalues become
    (b1, b2) with b1 >= b2.
    """
    c = np.asarray(c, dtype=float)
    if c.shape != (4, 4):
        raise ValidationError(f"correlation matrix must be 4x4, got {c.shape}")
    for i in range(4):
        for j in range(4):
            if (i, j) not in _C_SPARSITY and abs(c[i, j]) > ATOL_XSHAPE:
                raise ValidationError(
                    f"unexpected nonzero correlation entry at ({i},{j})"
                )
    if abs(c[0, 0] - 1.0) > 1e-12:
        raise ValidationError(f"C[0,0] must be 1, got {c[0, 0]}")
    if abs(c[0, 2] - c[2, 0]) > 1e-12 or abs(c[1, 3] - c[3, 1]) > 1e-12:
        raise ValidationError("off-diagonal correlation pairs not symmetric")

    a = c[0, 2]
    b3 = c[2, 2]
    # symmetric 2x2 block over the (x, z) axes
    mean = 0.5 * (c[1, 1] + c[3, 3])
    half_diff = 0.5 * (c[1, 1] - c[3, 3])
    radius = math.hypot(half_diff, c[1, 3])
    return XStateCoefficients(a=a, b1=mean + radius, b2=mean - radius, b3=b3)


def density_from_xstate(x: XStateCoefficients) -> np.ndarray:
    """Assemble the 4x4 X-state density matrix in the sigma_z basis."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = (1.0 + 2.0 * x.a + x.b3) / 4.0
    rho[3, 3] = (1.0 - 2.0 * x.a + x.b3) / 4.0
    rho[1, 1] = rho[2, 2] = (1.0 - x.b3) / 4.0
    rho[0, 3] = rho[3, 0] = (x.b1 - x.b2) / 4.0
    rho[1, 2] = rho[2, 1] = (x.b1 + x.b2) / 4.0
    validate_state(rho, require_x=True)
    return rho


def build_state(
    params: DecayParameters, phi: float, mode: MassMode
) -> np.ndarray:
    """Correlation matrix -> X coefficients -> density matrix, composed."""
    return density_from_xstate(xstate_from_cmatrix(cmatrix(params, phi, mode)))


_X_SLOTS = {(0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (3, 0), (1, 2), (2, 1)}


def is_x_state(rho: np.ndarray, atol: float = ATOL_XSHAPE) -> bool:
    """True when every entry off the diagonal/anti-diagonal is ~0."""
    rho = np.asarray(rho)
    return all(
        abs(rho[i, j]) <= atol
        for i in range(4)
        for j in range(4)
        if (i, j) not in _X_SLOTS
    )


def validate_state(rho: np.ndarray, *, require_x: bool = False) -> None:
    """Check Hermiticity, unit trace and positivity of a two-qubit state.

    Raises ValidationError on any failure.  With require_x=True the
    X sparsity pattern is enforced as well.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValidationError(f"state must be 4x4, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > ATOL_STATE_HERM:
        raise ValidationError("state is not Hermitian")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > ATOL_STATE_TRACE:
        raise ValidationError(f"state trace is {tr}, expected 1")
    evals, _ = hermitian_eigen(rho)
    if evals[0] < -ATOL_STATE_PSD:
        raise ValidationError(f"state has negative eigenvalue {evals[0]}")
    if require_x and not is_x_state(rho):
        raise ValidationError("state does not have the X sparsity pattern")


def expand_correlation_state(c: np.ndarray) -> np.ndarray:
    """Full Pauli expansion rho = (1/4) sum_{mu,nu} C_{mu,nu} s_mu x s_nu.

    General-purpose reference construction; used to confirm that the
    swap-and-diagonalize reduction leaves every measured quantity
    unchanged (the two states differ only by local rotations).
    """
    c = np.asarray(c, dtype=float)
    rho = np.zeros((4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            if c[mu, nu] != 0.0:
                rho += c[mu, nu] * kron(pauli(mu), pauli(nu))
    return rho / 4.0
