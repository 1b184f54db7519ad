"""Pauli algebra and a self-contained Hermitian eigensolver.

The eigensolver is a cyclic Jacobi iteration with complex rotations.
It is deliberately written out here rather than delegated, so the
rest of the package has a single auditable spectral routine; tests
cross-check it against an independent implementation.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import ArgumentError, NumericError, ValidationError

# Shared numerical tolerances.  Modules import these instead of
# scattering magic numbers.
ATOL_HERM = 1e-10      # allowed |A - A^dag| when checking hermiticity
ATOL_TRACE = 1e-10     # allowed |tr(rho) - 1|
ATOL_PSD = 1e-9        # most negative eigenvalue tolerated in a state
JACOBI_TOL = 1e-13     # off-diagonal Frobenius norm at convergence
JACOBI_MAX_SWEEPS = 100

_SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


def pauli(i: int) -> np.ndarray:
    """Return a copy of sigma_i, with sigma_0 the 2x2 identity."""
    if i not in (0, 1, 2, 3):
        raise ArgumentError(f"pauli index must be 0..3, got {i!r}")
    return _SIGMA[i].copy()


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, first factor acting on the first qubit."""
    return np.kron(np.asarray(a), np.asarray(b))


def dag(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


class EigenResult(NamedTuple):
    """Spectral decomposition A = V diag(values) V^dag.

    values are real and ascending; vectors holds the eigenvectors
    as columns of a unitary matrix, ordered to match.
    """

    values: np.ndarray
    vectors: np.ndarray


def hermitian_eigen(
    h: np.ndarray,
    *,
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> EigenResult:
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation annihilates one off-diagonal pair (p, q) using the
    complex plane rotation with phase phi = arg(A[p,q]) and angle
    theta = arctan2(2|A[p,q]|, A[p,p] - A[q,q]) / 2.  Sweeps repeat
    until the off-diagonal Frobenius norm drops below ``tol`` (scaled
    by the matrix norm) or ``max_sweeps`` is hit.

    Raises ValidationError if the input is not Hermitian within
    ATOL_HERM, NumericError if the sweep cap is exhausted.
    """
    a = np.array(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ArgumentError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.conj().T)) > ATOL_HERM:
        raise ValidationError("matrix is not Hermitian within tolerance")
    a = 0.5 * (a + a.conj().T)

    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)))

    def off_norm(m: np.ndarray) -> float:
        off = m - np.diag(np.diag(m))
        return float(np.linalg.norm(off))

    converged = off_norm(a) <= tol * scale
    for _ in range(max_sweeps):
        if converged:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = a[p, q]
                if abs(beta) == 0.0:
                    continue
                phi = math.atan2(beta.imag, beta.real)
                theta = 0.5 * math.atan2(
                    2.0 * abs(beta), a[p, p].real - a[q, q].real
                )
                c = math.cos(theta)
                s = math.sin(theta)
                e = complex(math.cos(phi), math.sin(phi))

                # A <- J^dag A J with J[p,p]=J[q,q]=c,
                # J[p,q] = -s e^{i phi}, J[q,p] = s e^{-i phi}
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + s * np.conj(e) * col_q
                a[:, q] = -s * e * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + s * e * row_q
                a[q, :] = -s * np.conj(e) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p + s * np.conj(e) * vcol_q
                v[:, q] = -s * e * vcol_p + c * vcol_q
        converged = off_norm(a) <= tol * scale
    if not converged:
        raise NumericError(
            f"Jacobi eigensolver did not converge in {max_sweeps} sweeps"
        )

    values = np.diag(a).real.copy()
    order = np.argsort(values, kind="stable")
    return EigenResult(values[order], v[:, order])
