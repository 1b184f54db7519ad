"""Closed-form correlation quantifiers for two-qubit X-states.

Implements the Bell-CHSH maximum (correlation-block eigenvalue route
plus the X-state element form), the three-setting steering bound,
concurrence (X closed form and the general auxiliary-matrix route),
quantum discord with its one-parameter measurement optimization, and
purity.  Normalized variants rescale the classical thresholds to 0
and the quantum maxima to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, ValidationError
from .linalg import hermitian_eigen, kron, pauli
from .spinstate import XStateCoefficients, is_x_state, validate_state

BELL_MAX = 2.0 * math.sqrt(2.0)          # Tsirelson bound
STEERING_MAX = math.sqrt(3.0)
_LOG_FLOOR = 1e-300                       # clamp for log arguments
_EPS_GRID = 101                           # measurement-parameter grid

# Conventions for the coefficient entering the discord radicand; the
# printed source uses max{|b1|,|b2|} linearly, dimensional consistency
# wants its square.  Both are available; validation arbitrates.
B_CONVENTIONS = ("squared", "linear")


@dataclass(frozen=True)
class MeasureSet:
    """All scalar quantifiers evaluated on one state."""

    bell_raw: float
    bell_norm: float
    steering_raw: float
    steering_norm: float
    concurrence: float
    discord: float
    purity: float


def correlation_block(rho: np.ndarray) -> np.ndarray:
    """3x3 spin-correlation block T_ij = Tr(rho sigma_i x sigma_j)."""
    rho = np.asarray(rho, dtype=complex)
    t = np.empty((3, 3))
    for i in range(3):
        si = pauli(i + 1)
        for j in range(3):
            t[i, j] = np.trace(rho @ kron(si, pauli(j + 1))).real
    return t


def _bell_from_block(t: np.ndarray) -> tuple[float, float]:
    evals, _ = hermitian_eigen(t.T @ t)
    m = float(evals[-1] + evals[-2])
    raw = 2.0 * math.sqrt(max(0.0, m))
    return raw, max(0.0, (raw - 2.0) / (BELL_MAX - 2.0))


def bell_chsh(rho: np.ndarray) -> tuple[float, float]:
    """Maximal CHSH value 2*sqrt(M), M the two largest eigenvalues of T^T T.

    Returns (raw, normalized); normalized is 0 at the classical bound 2
    and 1 at the Tsirelson bound.
    """
    validate_state(rho)
    return _bell_from_block(correlation_block(rho))


def bell_chsh_xform(rho: np.ndarray) -> tuple[float, float]:
    """CHSH maximum from the X-state element form.

    M1 = 8(|rho_14|^2 + |rho_23|^2) and
    M2 = 4(|rho_14| + |rho_23|)^2 + (rho_11 + rho_44 - 2 rho_22)^2;
    raw = 2 sqrt(max{M1, M2}).  Independent of the eigenvalue route.
    """
    validate_state(rho)
    if not is_x_state(rho):
        raise ValidationError("element form requires an X-state")
    r14 = abs(rho[0, 3])
    r23 = abs(rho[1, 2])
    m1 = 8.0 * (r14 * r14 + r23 * r23)
    m2 = 4.0 * (r14 + r23) ** 2 + (rho[0, 0] + rho[3, 3] - 2.0 * rho[1, 1]).real ** 2
    raw = 2.0 * math.sqrt(max(m1, m2))
    return raw, max(0.0, (raw - 2.0) / (BELL_MAX - 2.0))


def _steering_from_block(t: np.ndarray) -> tuple[float, float]:
    raw = math.sqrt(float(np.trace(t.T @ t)))
    return raw, max(0.0, (raw - 1.0) / (STEERING_MAX - 1.0))


def steering_F3(rho: np.ndarray) -> tuple[float, float]:
    """Three-setting steering functional sqrt(Tr(T^T T)).

    Returns (raw, normalized); normalized is 0 at the steering
    threshold 1 and 1 at the two-qubit maximum sqrt(3).
    """
    validate_state(rho)
    return _steering_from_block(correlation_block(rho))


def _concurrence_elements(rho: np.ndarray) -> float:
    inner = abs(rho[1, 2]) - math.sqrt(max(0.0, (rho[0, 0] * rho[3, 3]).real))
    outer = abs(rho[0, 3]) - math.sqrt(max(0.0, (rho[1, 1] * rho[2, 2]).real))
    return 2.0 * max(inner, outer, 0.0)


def concurrence_xstate(rho: np.ndarray) -> float:
    """Closed-form concurrence of an X-state."""
    validate_state(rho)
    if not is_x_state(rho):
        raise ValidationError("closed form requires an X-state")
    return _concurrence_elements(rho)


def concurrence_wootters(rho: np.ndarray) -> float:
    """General two-qubit concurrence via the spin-flip construction.

    The flip eigenvalues come from the Hermitian equivalent form
    sqrt(rho) R sqrt(rho) with R = (sy x sy) rho* (sy x sy), so the
    shared eigensolver applies.  For real density matrices that form
    is the exact square of the real symmetric Q = sqrt(rho) S sqrt(rho)
    (S the spin-flip matrix), and |eig(Q)| gives the flip spectrum
    without squaring, which keeps zero eigenvalues at machine noise.
    """
    validate_state(rho)
    rho = np.asarray(rho, dtype=complex)
    yy = kron(pauli(2), pauli(2)).real  # antidiag(-1, 1, 1, -1)
    evals, vecs = hermitian_eigen(rho)
    # exact-zero clip: keeps the null directions of sqrt(rho) noiseless
    clipped = np.where(evals > 1e-12, evals, 0.0)
    sqrt_rho = vecs @ np.diag(np.sqrt(clipped)) @ vecs.conj().T
    if np.max(np.abs(rho.imag)) < 1e-15:
        q = (sqrt_rho @ yy @ sqrt_rho).real
        nu, _ = hermitian_eigen(0.5 * (q + q.T))
        lam = np.sort(np.abs(nu))[::-1]
    else:
        flipped = yy @ rho.conj() @ yy
        herm = sqrt_rho @ flipped @ sqrt_rho
        mu, _ = hermitian_eigen(0.5 * (herm + herm.conj().T))
        lam = np.sqrt(np.clip(mu, 0.0, None))[::-1]
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def binary_entropy(x: float) -> float:
    """Shannon binary entropy h(x) in bits, with 0 log 0 = 0."""
    if x < -1e-12 or x > 1.0 + 1e-12:
        raise ArgumentError(f"binary_entropy argument out of [0,1]: {x}")
    x = min(1.0, max(0.0, x))
    out = 0.0
    if x > 0.0:
        out -= x * math.log2(x)
    if x < 1.0:
        out -= (1.0 - x) * math.log2(1.0 - x)
    return out


def _b_effective(x: XStateCoefficients, b_convention: str) -> float:
    if b_convention not in B_CONVENTIONS:
        raise ArgumentError(f"unknown b convention {b_convention!r}")
    b = max(abs(x.b1), abs(x.b2))
    return b * b if b_convention == "squared" else b


def discord_F(
    eps: float, x: XStateCoefficients, b_convention: str = "squared"
) -> float:
    """Measurement-parameter objective F(eps) for the discord optimum.

    Delta_pm = sqrt(beff (1 - eps^2) + (a +- b3 eps)^2) where beff is
    max{|b1|,|b2|} either squared (default) or linear, per convention.
    """
    if not -1e-12 <= eps <= 1.0 + 1e-12:
        raise ArgumentError(f"eps must lie in [0,1], got {eps}")
    eps = min(1.0, max(0.0, eps))
    beff = _b_effective(x, b_convention)
    spread = beff * (1.0 - eps * eps)
    total = 0.0
    for sign in (1.0, -1.0):
        delta = math.sqrt(max(0.0, spread + (x.a + sign * x.b3 * eps) ** 2))
        for inner in (1.0, -1.0):
            q = 0.25 * (1.0 + sign * x.a * eps + inner * delta)
            total += q * math.log2(max(q, _LOG_FLOOR))
    return total


def _max_discord_F(x: XStateCoefficients, b_convention: str) -> float:
    candidates = list(np.linspace(0.0, 1.0, _EPS_GRID))
    best_eps = max(candidates, key=lambda e: discord_F(e, x, b_convention))
    # golden-section refinement in the bracket around the incumbent
    step = 1.0 / (_EPS_GRID - 1)
    lo = max(0.0, best_eps - step)
    hi = min(1.0, best_eps + step)
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc = discord_F(c, x, b_convention)
    fd = discord_F(d, x, b_convention)
    for _ in range(80):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = discord_F(c, x, b_convention)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = discord_F(d, x, b_convention)
    refined = max(fc, fd)
    endpoints = max(discord_F(0.0, x, b_convention), discord_F(1.0, x, b_convention))
    return max(refined, endpoints)


def _xstate_eigenvalues(x: XStateCoefficients) -> list[float]:
    r11 = (1.0 + 2.0 * x.a + x.b3) / 4.0
    r44 = (1.0 - 2.0 * x.a + x.b3) / 4.0
    r22 = (1.0 - x.b3) / 4.0
    r14 = (x.b1 - x.b2) / 4.0
    r23 = (x.b1 + x.b2) / 4.0
    root = math.sqrt((r11 - r44) ** 2 + 4.0 * r14 * r14)
    return [
        0.5 * (r11 + r44 + root),
        0.5 * (r11 + r44 - root),
        r22 + abs(r23),
        r22 - abs(r23),
    ]


def discord(x: XStateCoefficients, b_convention: str = "squared") -> float:
    """Quantum discord of the X-state, analytic fast path.

    QD = 1 - h((1+a)/2) + sum_i g_i log2 g_i - max_eps F(eps), with g_i
    the state eigenvalues.  The eps maximum is scanned on a 101-point
    grid plus the interval endpoints and polished by golden section.
    Result clamped to [0, 1 + 1e-9].
    """
    spectral = sum(
        g * math.log2(max(g, _LOG_FLOOR)) for g in _xstate_eigenvalues(x) if g > 0.0
    )
    qd = (
        1.0
        - binary_entropy(0.5 * (1.0 + x.a))
        + spectral
        - _max_discord_F(x, b_convention)
    )
    return min(max(qd, 0.0), 1.0 + 1e-9)


def discord_closed(x: XStateCoefficients) -> float | None:
    """Short closed form of the discord; None when out of its domain.

    Evaluates h((1+a)/2) - h((1+b3)/2) + h((1+r)/2) with
    r = sqrt(b1^2 + b3^2 - b1 b3).  The last entropy argument must lie
    in [0,1], i.e. r <= 1; otherwise the expression is inapplicable
    and None is returned (a value, not an error).
    """
    r = math.sqrt(max(0.0, x.b1**2 + x.b3**2 - x.b1 * x.b3))
    if r > 1.0 + 1e-12:
        return None
    return (
        binary_entropy(0.5 * (1.0 + x.a))
        - binary_entropy(0.5 * (1.0 + x.b3))
        + binary_entropy(0.5 * (1.0 + min(r, 1.0)))
    )


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2)."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.trace(rho @ rho).real)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy in bits from the shared eigensolver."""
    evals, _ = hermitian_eigen(rho)
    return -sum(
        float(g) * math.log2(float(g)) for g in evals if g > 1e-15
    )


def xstate_from_density(rho: np.ndarray) -> XStateCoefficients:
    """Recover (a, b1, b2, b3) from an X-state density matrix.

    Inverse of the assembly map; assumes real coherences with
    rho_14 >= 0 so that b1 >= b2 (the family produced here).
    """
    rho = np.asarray(rho, dtype=complex)
    if not is_x_state(rho):
        raise ValidationError("coefficient extraction requires an X-state")
    a = (rho[0, 0] - rho[3, 3]).real
    b3 = 2.0 * (rho[0, 0] + rho[3, 3]).real - 1.0
    r14 = rho[0, 3].real
    r23 = rho[1, 2].real
    return XStateCoefficients(
        a=a, b1=2.0 * (r23 + r14), b2=2.0 * (r23 - r14), b3=b3
    )


def measure_set(
    rho: np.ndarray, b_convention: str = "squared"
) -> MeasureSet:
    """Evaluate every quantifier on one X-state with a single validation."""
    validate_state(rho, require_x=True)
    t = correlation_block(rho)
    bell_raw, bell_norm = _bell_from_block(t)
    steer_raw, steer_norm = _steering_from_block(t)
    x = xstate_from_density(rho)
    return MeasureSet(
        bell_raw=bell_raw,
        bell_norm=bell_norm,
        steering_raw=steer_raw,
        steering_norm=steer_norm,
        concurrence=_concurrence_elements(rho),
        discord=discord(x, b_convention),
        purity=purity(rho),
    )
