"""Brute-force reference implementations and their self-consistency."""

import math

import numpy as np
import pytest

from spincorr.errors import ArgumentError
from spincorr.measures import bell_chsh, discord, steering_F3, xstate_from_density
from spincorr.oracles import (
    DEFAULT_SEED,
    chsh_bruteforce,
    discord_bruteforce,
    random_x_state,
    steering_bruteforce,
)
from spincorr.spinstate import validate_state


def _werner():
    psi_minus = np.zeros((4, 4))
    psi_minus[1, 1] = psi_minus[2, 2] = 0.5
    psi_minus[1, 2] = psi_minus[2, 1] = -0.5
    return 0.75 * psi_minus + 0.25 * np.eye(4) / 4.0


def test_chsh_bruteforce_trivial_states(bell_state, maximally_mixed):
    assert chsh_bruteforce(bell_state, seed=1) == pytest.approx(
        2.0 * math.sqrt(2.0), abs=1e-6
    )
    assert chsh_bruteforce(maximally_mixed, seed=1) == pytest.approx(0.0, abs=1e-6)


def test_chsh_bruteforce_symmetric_angle(state_sym):
    assert chsh_bruteforce(state_sym, seed=1) == pytest.approx(2.0999, abs=1e-4)
    assert chsh_bruteforce(state_sym, seed=1) == pytest.approx(
        bell_chsh(state_sym)[0], abs=1e-5
    )


def test_chsh_bruteforce_deterministic_and_stable(state_sym):
    a = chsh_bruteforce(state_sym, seed=DEFAULT_SEED)
    b = chsh_bruteforce(state_sym, seed=DEFAULT_SEED)
    assert a == b
    doubled = chsh_bruteforce(state_sym, restarts=16, seed=DEFAULT_SEED)
    assert abs(a - doubled) <= 1e-4


def test_chsh_bruteforce_never_beats_closed_form():
    rng = np.random.default_rng(41)
    for k in range(30):
        rho = random_x_state(rng)
        assert chsh_bruteforce(rho, seed=k) <= bell_chsh(rho)[0] + 1e-9


def test_chsh_bruteforce_rejects_few_restarts(bell_state):
    with pytest.raises(ArgumentError):
        chsh_bruteforce(bell_state, restarts=4)


def test_discord_bruteforce_trivial_states(bell_state, maximally_mixed):
    assert discord_bruteforce(maximally_mixed) == pytest.approx(0.0, abs=1e-6)
    product = np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex)
    assert discord_bruteforce(product) == pytest.approx(0.0, abs=1e-6)
    assert discord_bruteforce(bell_state) == pytest.approx(1.0, abs=1e-6)


def test_discord_bruteforce_werner_convergence():
    w = _werner()
    # self-referenced value, frozen at grid 64
    assert discord_bruteforce(w, 64) == pytest.approx(0.5501717141892336, abs=1e-9)
    assert abs(discord_bruteforce(w, 64) - discord_bruteforce(w, 128)) <= 1e-4


def test_discord_bruteforce_rejects_small_grid(bell_state):
    with pytest.raises(ArgumentError):
        discord_bruteforce(bell_state, grid=32)


def test_discord_bruteforce_swap_symmetry(state_sym):
    # with rho_22 = rho_33 the measured side should not matter
    swap = np.eye(4)[[0, 2, 1, 3]]
    swapped = swap @ state_sym @ swap
    assert abs(
        discord_bruteforce(state_sym) - discord_bruteforce(swapped)
    ) <= 1e-6


def test_discord_fast_path_tracks_oracle_on_symmetric_states():
    # zero local polarization keeps the fast path aligned with the
    # measurement optimization
    rng = np.random.default_rng(42)
    for _ in range(10):
        rho = random_x_state(rng)
        rho = 0.5 * (rho + rho[::-1, ::-1])  # symmetrize: a -> 0
        validate_state(rho)
        x = xstate_from_density(rho)
        assert abs(discord(x) - discord_bruteforce(rho)) <= 5e-3


def test_steering_bruteforce_trivial_states(bell_state, maximally_mixed):
    best = steering_bruteforce(bell_state, seed=2)
    assert best == pytest.approx(math.sqrt(3.0), abs=1e-3)
    assert best <= math.sqrt(3.0) + 1e-9
    assert steering_bruteforce(maximally_mixed, seed=2) == pytest.approx(
        0.0, abs=1e-9
    )


def test_steering_bruteforce_attains_closed_form(state_sym):
    f3 = steering_F3(state_sym)[0]
    best = steering_bruteforce(state_sym, seed=3)
    assert f3 - 1e-3 <= best <= f3 + 1e-9
    assert best == pytest.approx(1.0976, abs=1e-3)


def test_steering_bruteforce_deterministic_and_stable(state_sym):
    a = steering_bruteforce(state_sym, seed=DEFAULT_SEED)
    assert a == steering_bruteforce(state_sym, seed=DEFAULT_SEED)
    doubled = steering_bruteforce(state_sym, samples=2000, seed=DEFAULT_SEED)
    assert abs(a - doubled) <= 1e-4


def test_steering_bruteforce_rejects_few_samples(bell_state):
    with pytest.raises(ArgumentError):
        steering_bruteforce(bell_state, samples=100)


def test_random_x_state_is_physical():
    rng = np.random.default_rng(DEFAULT_SEED)
    for _ in range(50):
        rho = random_x_state(rng)
        validate_state(rho, require_x=True)
        assert abs(rho[1, 1] - rho[2, 2]) <= 1e-15
