"""Shared fixtures: reference decay parameters and canonical states."""

import math

import numpy as np
import pytest

from spincorr import MassMode, build_state, derive_form_params, wrap_angle

ALPHA = -0.32
DELTA_PHI = -4.26  # radians, wrapped into [-pi, pi] on use


@pytest.fixture(scope="session")
def params():
    return derive_form_params(ALPHA, wrap_angle(DELTA_PHI))


@pytest.fixture(scope="session")
def state_sym(params):
    # massless state at the symmetric angle pi/2, the point of maximal
    # correlation for the reference parameters
    return build_state(params, math.pi / 2.0, MassMode.MASSLESS)


@pytest.fixture()
def bell_state():
    rho = np.zeros((4, 4))
    rho[0, 0] = rho[3, 3] = rho[0, 3] = rho[3, 0] = 0.5
    return rho


@pytest.fixture()
def maximally_mixed():
    return np.eye(4) / 4.0
