"""Pauli algebra and the cyclic Jacobi eigensolver against numpy."""

import numpy as np
import pytest

from spincorr.errors import ArgumentError, ValidationError
from spincorr.linalg import EigenResult, dag, hermitian_eigen, kron, pauli


def test_pauli_identities():
    ident = pauli(0)
    assert np.array_equal(ident, np.eye(2))
    for i in (1, 2, 3):
        s = pauli(i)
        assert np.allclose(s @ s, np.eye(2))
        assert abs(np.trace(s)) == 0.0
        assert np.allclose(s, dag(s))
    # cyclic products: sx sy = i sz and permutations
    assert np.allclose(pauli(1) @ pauli(2), 1j * pauli(3))
    assert np.allclose(pauli(2) @ pauli(3), 1j * pauli(1))
    assert np.allclose(pauli(3) @ pauli(1), 1j * pauli(2))


@pytest.mark.parametrize("bad", [-1, 4, 7])
def test_pauli_index_range(bad):
    with pytest.raises(ArgumentError):
        pauli(bad)


def test_kron_matches_numpy():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    assert np.allclose(kron(a, b), np.kron(a, b))


def test_dag_is_conjugate_transpose():
    m = np.array([[1.0, 2.0 + 1j], [0.5j, -3.0]])
    assert np.allclose(dag(m), m.conj().T)


def test_known_two_by_two_spectra():
    vals, _ = hermitian_eigen(pauli(1))
    assert np.allclose(vals, [-1.0, 1.0])
    vals, vecs = hermitian_eigen(pauli(3))
    assert np.allclose(vals, [-1.0, 1.0])
    # ascending order puts the -1 eigenvector (|1>) first
    assert abs(vecs[1, 0]) == pytest.approx(1.0, abs=1e-14)


def test_eigen_result_named_fields():
    res = hermitian_eigen(np.eye(3))
    assert isinstance(res, EigenResult)
    assert np.allclose(res.values, 1.0)
    assert res.vectors.shape == (3, 3)


def _random_hermitian(rng, n):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (m + m.conj().T)


def test_jacobi_matches_numpy_on_random_matrices():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(2, 9))
        h = _random_hermitian(rng, n)
        vals, _ = hermitian_eigen(h)
        ref = np.linalg.eigvalsh(h)
        worst = max(worst, float(np.max(np.abs(vals - ref))))
    assert worst <= 1e-10


def test_jacobi_reconstruction_and_unitarity():
    rng = np.random.default_rng(12)
    for _ in range(50):
        n = int(rng.integers(2, 9))
        h = _random_hermitian(rng, n)
        vals, vecs = hermitian_eigen(h)
        assert np.all(np.diff(vals) >= -1e-14)  # ascending
        assert np.allclose(vecs @ np.diag(vals) @ dag(vecs), h, atol=1e-10)
        assert np.allclose(dag(vecs) @ vecs, np.eye(n), atol=1e-10)


def test_jacobi_real_symmetric_input():
    rng = np.random.default_rng(13)
    m = rng.standard_normal((6, 6))
    h = 0.5 * (m + m.T)
    vals, _ = hermitian_eigen(h)
    assert np.allclose(vals, np.linalg.eigvalsh(h), atol=1e-11)


def test_jacobi_degenerate_spectrum():
    h = np.diag([2.0, 2.0, 2.0, -1.0])
    vals, vecs = hermitian_eigen(h)
    assert np.allclose(vals, [-1.0, 2.0, 2.0, 2.0])
    assert np.allclose(vecs @ np.diag(vals) @ dag(vecs), h, atol=1e-12)


def test_non_hermitian_rejected():
    with pytest.raises(ValidationError):
        hermitian_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_non_square_rejected():
    with pytest.raises(ArgumentError):
        hermitian_eigen(np.zeros((2, 3)))
