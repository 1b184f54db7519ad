"""Dephasing dynamics with classically correlated channel uses.

The pair is subject to two uses of a phase-flip channel whose joint
flip probabilities carry a classical memory parameter mu.  The
visibility V(t) comes from a colored-noise (random telegraph) model
with reservoir time-scale tau: oscillatory with sign changes for
tau > 1/4 (non-Markovian), hyperbolic decay for tau < 1/4 (Markovian).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ArgumentError, ValidationError
from .linalg import kron, pauli
from .spinstate import is_x_state, validate_state

_BOUNDARY_EPS = 1e-6  # |lambda - 4| window treated as the degenerate limit


@dataclass(frozen=True)
class ChannelConfig:
    """Reservoir time-scale tau and memory parameter mu (both dimensionless)."""

    tau: float
    mu: float

    def __post_init__(self) -> None:
        if not self.tau > 0.0:
            raise ArgumentError(f"tau must be positive, got {self.tau}")
        if not 0.0 <= self.mu <= 1.0:
            raise ArgumentError(f"mu must lie in [0,1], got {self.mu}")

    @property
    def lam(self) -> float:
        """Noise rate lambda = 1/tau."""
        return 1.0 / self.tau

    @property
    def is_markovian(self) -> bool:
        """True below the regime boundary tau = 1/4."""
        return self.tau < 0.25


class DecoherenceFactors(NamedTuple):
    """Visibility v, off-diagonal multiplier w, and flip probability p."""

    v: float
    w: float
    p: float


def decoherence_V(tau: float, t: float) -> float:
    """Visibility V(t) of the colored-noise dephasing model.

    With lambda = 1/tau and omega = sqrt(|lambda^2 - 16|):

        lambda < 4:  e^(-lambda t/2) [cos(omega t/2) + (lambda/omega) sin(omega t/2)]
        lambda > 4:  same with cosh/sinh
        lambda ~ 4:  limit form e^(-2t) (1 + 2t)

    V solves u'' + lambda u' + 4 u = 0 with u(0) = 1, u'(0) = 0.
    """
    if not tau > 0.0:
        raise ArgumentError(f"tau must be positive, got {tau}")
    if t < 0.0:
        raise ArgumentError(f"t must be nonnegative, got {t}")
    lam = 1.0 / tau
    if abs(lam - 4.0) <= _BOUNDARY_EPS:
        return math.exp(-2.0 * t) * (1.0 + 2.0 * t)
    if lam < 4.0:
        omega = math.sqrt(16.0 - lam * lam)
        half = 0.5 * omega * t
        return math.exp(-0.5 * lam * t) * (
            math.cos(half) + (lam / omega) * math.sin(half)
        )
    omega = math.sqrt(lam * lam - 16.0)
    # cosh/sinh form rewritten as a sum of decaying exponentials so large
    # lambda*t cannot overflow: both lambda-omega and lambda+omega are > 0
    co_plus = 0.5 * (1.0 + lam / omega)
    co_minus = 0.5 * (1.0 - lam / omega)
    return co_plus * math.exp(-0.5 * (lam - omega) * t) + co_minus * math.exp(
        -0.5 * (lam + omega) * t
    )


def memory_factor_W(v: float, mu: float) -> float:
    """Off-diagonal survival factor w = v^2 + (1 - v^2) mu."""
    if abs(v) > 1.0 + 1e-12:
        raise ArgumentError(f"|v| must not exceed 1, got {v}")
    if not 0.0 <= mu <= 1.0:
        raise ArgumentError(f"mu must lie in [0,1], got {mu}")
    v2 = min(1.0, v * v)
    return v2 + (1.0 - v2) * mu


def decoherence_factors(config: ChannelConfig, t: float) -> DecoherenceFactors:
    """Evaluate (v, w, p) for one channel configuration at time t."""
    v = decoherence_V(config.tau, t)
    return DecoherenceFactors(
        v=v, w=memory_factor_W(v, config.mu), p=0.5 * (1.0 - v)
    )


def evolve_closed_form(rho: np.ndarray, w: float) -> np.ndarray:
    """Scale the X-state coherences rho_14 and rho_23 by w."""
    if not 0.0 <= w <= 1.0:
        raise ArgumentError(f"w must lie in [0,1], got {w}")
    rho = np.asarray(rho, dtype=complex)
    if not is_x_state(rho):
        raise ValidationError("closed-form evolution requires an X-state")
    out = rho.copy()
    for i, j in ((0, 3), (3, 0), (1, 2), (2, 1)):
        out[i, j] *= w
    validate_state(out, require_x=True)
    return out


def correlated_pauli_map(
    rho: np.ndarray, marginal: np.ndarray, mu: float
) -> np.ndarray:
    """Two consecutive Pauli-channel uses with classical memory mu.

    marginal is the single-use distribution (p_0, p_1, p_2, p_3); the
    joint probabilities are p_ij = (1-mu) p_i p_j + mu p_i delta_ij and
    the map is rho' = sum_ij p_ij (sigma_i x sigma_j) rho (sigma_i x sigma_j).
    """
    marginal = np.asarray(marginal, dtype=float)
    if marginal.shape != (4,):
        raise ArgumentError("marginal must hold four probabilities")
    if np.any(marginal < -1e-14) or abs(marginal.sum() - 1.0) > 1e-14:
        raise ArgumentError("marginal must be a probability distribution")
    if not 0.0 <= mu <= 1.0:
        raise ArgumentError(f"mu must lie in [0,1], got {mu}")

    joint = (1.0 - mu) * np.outer(marginal, marginal) + mu * np.diag(marginal)
    out = np.zeros((4, 4), dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    for i in range(4):
        for j in range(4):
            if joint[i, j] == 0.0:
                continue
            k = kron(pauli(i), pauli(j))
            out += joint[i, j] * (k @ rho @ k.conj().T)
    return out


def kraus_map_correlated(rho: np.ndarray, p: float, mu: float) -> np.ndarray:
    """Correlated dephasing: marginal (1-p, 0, 0, p) over {I, sigma_z}."""
    if not 0.0 <= p <= 1.0:
        raise ArgumentError(f"p must lie in [0,1], got {p}")
    return correlated_pauli_map(rho, np.array([1.0 - p, 0.0, 0.0, p]), mu)
