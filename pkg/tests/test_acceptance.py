"""Acceptance gate: one test per agreed deliverable criterion.

Each test checks a single headline requirement at its stated tolerance,
so the pass/fail line of this file is the acceptance summary.  Shared
heavyweight artifacts (the oracle cross-validation report and the full
angle sweeps) are computed once per session.
"""

import math

import numpy as np
import pytest

from spincorr.channels import ChannelConfig
from spincorr.spinstate import MassMode
from spincorr.sweep import (
    SweepGrid,
    besiii_defaults,
    hierarchy_report,
    sweep_angle,
    sweep_dynamics,
    validation_report,
)

PI = math.pi

NORM_FIELDS = ("bell_norm", "steering_norm", "concurrence", "discord")
ALL_FIELDS = NORM_FIELDS + ("bell_raw", "steering_raw", "purity")


@pytest.fixture(scope="module")
def report():
    return validation_report()


@pytest.fixture(scope="module")
def besiii_params():
    return besiii_defaults()


@pytest.fixture(scope="module")
def angle_records(besiii_params):
    grids = {
        mode: SweepGrid(phi_points=181, mass_mode=mode) for mode in MassMode
    }
    return {
        mode: sweep_angle(besiii_params, grid) for mode, grid in grids.items()
    }


def _peaks(series):
    return sum(
        1
        for i in range(1, len(series) - 1)
        if series[i] > series[i - 1] and series[i] > series[i + 1]
    )


def test_measured_parameter_consistency(besiii_params):
    assert besiii_params.alpha_psi == -0.32
    assert abs(besiii_params.beta_psi - 0.85) <= 0.01
    assert abs(besiii_params.gamma_psi - (-0.41)) <= 0.01
    print(
        f"derived beta={besiii_params.beta_psi:.4f}, "
        f"gamma={besiii_params.gamma_psi:.4f} vs reported 0.85/-0.41"
    )


def test_massless_endpoints_vanish(angle_records):
    worst = 0.0
    for rec in (angle_records[MassMode.MASSLESS][0], angle_records[MassMode.MASSLESS][-1]):
        for field in NORM_FIELDS:
            worst = max(worst, getattr(rec.measures, field))
    assert worst <= 1e-9
    print(f"largest normalized measure at phi in {{0, pi}}: {worst:.3e}")


def test_mass_corrected_maxima_and_unit_purity(angle_records):
    records = angle_records[MassMode.MASS_CORRECTED]
    worst_measure = 0.0
    for idx in (0, 90, 180):  # phi = 0, pi/2, pi on the 181-point grid
        for field in NORM_FIELDS:
            worst_measure = max(
                worst_measure, abs(getattr(records[idx].measures, field) - 1.0)
            )
    assert worst_measure <= 1e-9
    worst_purity = max(abs(rec.measures.purity - 1.0) for rec in records)
    assert worst_purity <= 1e-10
    print(
        f"max |measure-1| at maxima: {worst_measure:.3e}; "
        f"max |purity-1| on grid: {worst_purity:.3e}"
    )


def test_symmetric_angle_closed_form_values(angle_records):
    m = angle_records[MassMode.MASSLESS][90].measures  # phi = pi/2
    assert m.bell_raw == pytest.approx(2.09990, abs=1e-4)
    assert m.steering_raw == pytest.approx(1.09764, abs=1e-4)
    assert m.concurrence == pytest.approx(0.32000, abs=1e-4)
    print(
        f"bell={m.bell_raw:.6f}, steering={m.steering_raw:.6f}, "
        f"concurrence={m.concurrence:.6f}"
    )


def test_oracle_equivalences(report):
    assert report["chsh_oracle_max_gap"] <= 1e-5
    assert report["wootters_max_gap"] <= 1e-10
    assert report["steering_oracle_max_shortfall"] <= 1e-3
    assert report["steering_oracle_max_excess"] <= 1e-9
    print(
        "oracle gaps: chsh={chsh_oracle_max_gap:.2e}, "
        "wootters={wootters_max_gap:.2e}, "
        "steering -{steering_oracle_max_shortfall:.2e}"
        "/+{steering_oracle_max_excess:.2e}".format(**report)
    )


def test_discord_arbitration(report):
    assert report["discord_grid_doubling_change"] <= 1e-4
    gap = report["discord_oracle_max_gap"]
    if gap > 5e-3:
        # fast path deviates from the reference where the state carries
        # local polarization; the report must then document every point
        # and name the winning radicand convention
        points = report["discord_gap_points"]
        assert points, "per-point discrepancy record missing"
        for entry in points:
            assert {"phi", "mode", "oracle", "fast_squared", "fast_linear"} <= set(entry)
        assert report["b_convention"] in ("squared", "linear")
    census = report["eq23_applicability"]
    massless = census["massless"]
    assert massless["n_applicable"] < massless["n_points"]
    assert any(
        abs(phi - PI / 2.0) <= 1e-9 for phi in massless["inapplicable_phi"]
    )
    print(
        f"doubling change={report['discord_grid_doubling_change']:.2e}, "
        f"fast-vs-oracle gap={gap:.3f} "
        f"(convention: {report['b_convention']}), "
        f"short-form applicable {massless['n_applicable']}/{massless['n_points']} massless points"
    )


def test_channel_equivalence(report):
    assert report["kraus_equiv_max_err"] <= 1e-12
    assert report["kraus_prob_sum_err"] <= 1e-14
    print(
        f"kraus-vs-closed-form max err={report['kraus_equiv_max_err']:.2e}, "
        f"probability sum err={report['kraus_prob_sum_err']:.2e}"
    )


def test_regime_phenomenology(besiii_params):
    grid = SweepGrid(t_points=201)

    markovian = sweep_dynamics(
        besiii_params, grid, ChannelConfig(tau=0.2, mu=0.8), phi_override=PI / 2.0
    )
    for field in NORM_FIELDS:
        series = [getattr(rec.measures, field) for rec in markovian]
        assert all(
            b <= a + 1e-12 for a, b in zip(series, series[1:])
        ), f"{field} not monotone for tau=0.2"

    revival_c = sweep_dynamics(
        besiii_params, grid, ChannelConfig(tau=5.0, mu=0.8), phi_override=PI / 2.0
    )
    conc_peaks = _peaks([rec.measures.concurrence for rec in revival_c])
    assert conc_peaks >= 2

    # low memory leaves the discord oscillation visible at this angle
    revival_d = sweep_dynamics(
        besiii_params, grid, ChannelConfig(tau=5.0, mu=0.1), phi_override=PI / 2.0
    )
    discord_peaks = _peaks([rec.measures.discord for rec in revival_d])
    assert discord_peaks >= 2

    frozen = sweep_dynamics(
        besiii_params, grid, ChannelConfig(tau=5.0, mu=1.0), phi_override=PI / 2.0
    )
    first = frozen[0].measures
    worst = max(
        abs(getattr(rec.measures, field) - getattr(first, field))
        for rec in frozen
        for field in ALL_FIELDS
    )
    assert worst <= 1e-12
    print(
        f"tau=0.2 monotone; tau=5 peaks: concurrence={conc_peaks}, "
        f"discord={discord_peaks}; mu=1 drift={worst:.2e}"
    )


def test_hierarchy_holds_everywhere(angle_records):
    for mode, records in angle_records.items():
        result = hierarchy_report(records)
        assert result.passed, (mode, result.violations[:3])
    print("bell <= steering <= concurrence <= discord-support on both sweeps")


def test_symmetry_about_midpoint(besiii_params):
    worst = 0.0
    for mode in MassMode:
        static = sweep_angle(
            besiii_params, SweepGrid(phi_points=61, mass_mode=mode)
        )
        sheets = [static]
        for t in (0.7, 2.5):
            sheets.append(
                sweep_dynamics(
                    besiii_params,
                    SweepGrid(phi_points=61, t_points=2, t_max=t, mass_mode=mode),
                    ChannelConfig(tau=5.0, mu=0.8),
                )[1::2]  # keep the t = t_max record of each phi
            )
        for records in sheets:
            for left, right in zip(records, reversed(records)):
                for field in ALL_FIELDS:
                    worst = max(
                        worst,
                        abs(
                            getattr(left.measures, field)
                            - getattr(right.measures, field)
                        ),
                    )
    assert worst <= 1e-10
    print(f"max asymmetry across modes and sampled times: {worst:.3e}")
