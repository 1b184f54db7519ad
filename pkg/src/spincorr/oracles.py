"""Brute-force reference implementations of every closed-form quantifier.

Nothing here reuses the closed forms under test: the CHSH maximum is
found by see-saw ascent over measurement directions, discord by direct
minimization over projective measurements, and steering by sampling
measurement triads.  All randomness is seeded for reproducibility.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ArgumentError
from .linalg import hermitian_eigen, pauli
from .measures import correlation_block, von_neumann_entropy
from .spinstate import validate_state

DEFAULT_SEED = 0xBE5111

_REFINE_ROUNDS = 3       # local grid-shrink rounds, factor 10 each
_SEESAW_ITERS = 300
_SEESAW_TOL = 1e-14


def _rng(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def _unit(v: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    # Measurement directions must stay unit vectors; degenerate inputs
    # are replaced by a random draw rather than dividing by ~0.
    n = np.linalg.norm(v)
    if n < 1e-14:
        v = rng.standard_normal(3)
        n = np.linalg.norm(v)
    return v / n


def chsh_bruteforce(
    rho: np.ndarray, restarts: int = 8, seed: int | None = None
) -> float:
    """Maximal CHSH value by alternating ascent over four unit vectors.

    For fixed (b, b') the optimal a, a' align with T(b+b') and T(b-b'),
    and symmetrically for fixed (a, a'); iterating this see-saw from
    random starts converges to the global maximum for 3x3 blocks.
    """
    if restarts < 8:
        raise ArgumentError(f"restarts must be at least 8, got {restarts}")
    validate_state(rho)
    t = correlation_block(rho)
    rng = _rng(seed)

    def ascend(b: np.ndarray, bp: np.ndarray) -> float:
        value = 0.0
        for _ in range(_SEESAW_ITERS):
            a = _unit(t @ (b + bp), rng)
            ap = _unit(t @ (b - bp), rng)
            b = _unit(t.T @ (a + ap), rng)
            bp = _unit(t.T @ (a - ap), rng)
            new_value = float(
                a @ t @ b + a @ t @ bp + ap @ t @ b - ap @ t @ bp
            )
            if abs(new_value - value) < _SEESAW_TOL:
                return new_value
            value = new_value
        return value

    # One start sits in the top-2 singular subspace of the block, where
    # the global optimum lives; random restarts cover everything else.
    # Random starts alone can stall near a saddle when the two leading
    # singular values are close.
    _, vecs = np.linalg.eigh(t.T @ t)
    best = ascend(
        _unit(vecs[:, 2] + vecs[:, 1], rng),
        _unit(vecs[:, 2] - vecs[:, 1], rng),
    )
    for _ in range(restarts):
        best = max(
            best,
            ascend(
                _unit(rng.standard_normal(3), rng),
                _unit(rng.standard_normal(3), rng),
            ),
        )
    return best


def _partial_trace_ops(rho: np.ndarray) -> list[np.ndarray]:
    """K_i = Tr_A[(sigma_i x I) rho] for i = 0..3 (each 2x2 Hermitian)."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    ops = []
    for i in range(4):
        k = np.einsum("ac,cbad->bd", pauli(i), r)
        ops.append(0.5 * (k + k.conj().T))
    return ops


def _xlog2x(x: np.ndarray) -> np.ndarray:
    safe = np.where(x > 1e-15, x, 1.0)
    return np.where(x > 1e-15, x * np.log2(safe), 0.0)


def _conditional_entropies(
    dirs: np.ndarray, ops: list[np.ndarray]
) -> np.ndarray:
    """Post-measurement conditional entropy for a batch of directions.

    dirs has shape (N, 3).  For each direction n the unnormalized
    conditional operators are M_pm = (K_0 pm n.K)/2; the entropy is
    sum_pm [-sum_k lam_k log2 lam_k + p_pm log2 p_pm] with lam_k the
    eigenvalues of M_pm and p_pm its trace.
    """
    kvec = np.stack(ops[1:4])                       # (3, 2, 2)
    proj = np.einsum("ni,ijk->njk", dirs, kvec)     # (N, 2, 2)
    total = np.zeros(len(dirs))
    for sign in (1.0, -1.0):
        m = 0.5 * (ops[0][None, :, :] + sign * proj)
        mean = 0.5 * (m[:, 0, 0] + m[:, 1, 1]).real
        half_diff = 0.5 * (m[:, 0, 0] - m[:, 1, 1]).real
        radius = np.sqrt(half_diff**2 + np.abs(m[:, 0, 1]) ** 2)
        lam_hi = np.clip(mean + radius, 0.0, None)
        lam_lo = np.clip(mean - radius, 0.0, None)
        p = np.clip(mean * 2.0, 0.0, None)
        total += -_xlog2x(lam_hi) - _xlog2x(lam_lo) + _xlog2x(p)
    return total


def _direction_grid(
    theta_lo: float, theta_hi: float, phi_lo: float, phi_hi: float, n: int
) -> np.ndarray:
    theta = np.linspace(theta_lo, theta_hi, n)
    phi = np.linspace(phi_lo, phi_hi, n, endpoint=False)
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    st = np.sin(tt)
    return np.column_stack(
        [
            (st * np.cos(pp)).ravel(),
            (st * np.sin(pp)).ravel(),
            np.cos(tt).ravel(),
        ]
    )


def discord_bruteforce(rho: np.ndarray, grid: int = 64) -> float:
    """Discord by direct minimization over projective measurements.

    Scans measurement directions on a theta x phi grid (grid points per
    angle), then shrinks the window around the incumbent by a factor of
    10 for three refinement rounds.  The reported minimum is recomputed
    with the package eigensolver at the winning direction.
    """
    if grid < 64:
        raise ArgumentError(f"grid must be at least 64, got {grid}")
    validate_state(rho)
    ops = _partial_trace_ops(rho)

    theta_lo, theta_hi = 0.0, math.pi
    phi_lo, phi_hi = 0.0, 2.0 * math.pi
    best_dir = np.array([0.0, 0.0, 1.0])
    best = np.inf
    for round_idx in range(_REFINE_ROUNDS + 1):
        n = grid if round_idx == 0 else 33
        dirs = _direction_grid(theta_lo, theta_hi, phi_lo, phi_hi, n)
        values = _conditional_entropies(dirs, ops)
        k = int(np.argmin(values))
        if values[k] < best:
            best = float(values[k])
            best_dir = dirs[k]
        theta_c = math.acos(min(1.0, max(-1.0, best_dir[2])))
        phi_c = math.atan2(best_dir[1], best_dir[0])
        span_t = math.pi / 10.0 ** (round_idx + 1)
        span_p = 2.0 * math.pi / 10.0 ** (round_idx + 1)
        theta_lo = max(0.0, theta_c - span_t)
        theta_hi = min(math.pi, theta_c + span_t)
        phi_lo, phi_hi = phi_c - span_p, phi_c + span_p

    # recompute the winning point with the shared eigensolver
    kvec = np.stack(ops[1:4])
    proj = np.einsum("i,ijk->jk", best_dir, kvec)
    cond = 0.0
    for sign in (1.0, -1.0):
        m = 0.5 * (ops[0] + sign * proj)
        p = float(np.trace(m).real)
        if p > 1e-15:
            evals, _ = hermitian_eigen(m)
            lam = np.clip(evals, 0.0, None)
            cond += sum(
                -float(g) * math.log2(float(g)) for g in lam if g > 1e-15
            ) + p * math.log2(p)
    cond = min(cond, best)

    s_rho = von_neumann_entropy(rho)
    s_b = von_neumann_entropy(ops[0])
    return s_b - s_rho + cond


def _random_triad(rng: np.random.Generator) -> np.ndarray:
    q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
    return q


def steering_bruteforce(
    rho: np.ndarray, samples: int = 1000, seed: int | None = None
) -> float:
    """Best steering value over sampled orthonormal measurement triads.

    For a triad {v_i} the optimal conjugate directions are u_i parallel
    to C v_i, giving (1/sqrt(3)) sum_i ||C v_i||.  Random triads are
    followed by shrinking local perturbations of the incumbent; the
    result is a lower bound on sqrt(Tr(C C^T)).
    """
    if samples < 1000:
        raise ArgumentError(f"samples must be at least 1000, got {samples}")
    validate_state(rho)
    c = correlation_block(rho)
    rng = _rng(seed)

    def value(triad: np.ndarray) -> float:
        return sum(
            float(np.linalg.norm(c @ triad[:, i])) for i in range(3)
        ) / math.sqrt(3.0)

    best_q = np.eye(3)
    best = value(best_q)
    for _ in range(samples):
        q = _random_triad(rng)
        v = value(q)
        if v > best:
            best, best_q = v, q
    # polish: orthogonal-group neighborhood search with shrinking radius
    for scale in (0.3, 0.03, 0.003):
        for _ in range(200):
            q, _ = np.linalg.qr(best_q + scale * rng.standard_normal((3, 3)))
            v = value(q)
            if v > best:
                best, best_q = v, q
    return best


def random_x_state(rng: np.random.Generator) -> np.ndarray:
    """Random physical X-state with rho_22 = rho_33 and real coherences.

    The coherence magnitudes are drawn inside their positivity bounds
    |rho_14| <= sqrt(rho_11 rho_44), |rho_23| <= rho_22, so the result
    is PSD by construction; rho_14 >= 0 fixes the b1 >= b2 ordering.
    """
    p = rng.dirichlet(np.ones(4))
    inner = 0.5 * (p[1] + p[2])
    r14 = rng.uniform(0.0, 1.0) * math.sqrt(p[0] * p[3])
    r23 = rng.uniform(-1.0, 1.0) * inner
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = p[0]
    rho[1, 1] = rho[2, 2] = inner
    rho[3, 3] = p[3]
    rho[0, 3] = rho[3, 0] = r14
    rho[1, 2] = rho[2, 1] = r23
    return rho
