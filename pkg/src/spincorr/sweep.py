"""Parameter-grid evaluation, hierarchy checks, and validation reporting.

Produces one MeasureRecord per grid point, writes the public CSV/JSON
schema, verifies the bell <= steering <= concurrence ordering with
discord support inclusion, and runs the full oracle-vs-closed-form
cross-validation to a machine-readable report.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .channels import (
    ChannelConfig,
    decoherence_factors,
    evolve_closed_form,
    kraus_map_correlated,
)
from .errors import ArgumentError
from .measures import (
    MeasureSet,
    concurrence_wootters,
    concurrence_xstate,
    bell_chsh,
    discord,
    discord_closed,
    measure_set,
    steering_F3,
    xstate_from_density,
)
from .oracles import (
    DEFAULT_SEED,
    chsh_bruteforce,
    discord_bruteforce,
    random_x_state,
    steering_bruteforce,
)
from .spinstate import DecayParameters, MassMode, build_state, derive_form_params, wrap_angle

CSV_HEADER = (
    "phi,t,mu,tau,mass_mode,bell_raw,bell_norm,steering_raw,steering_norm,"
    "concurrence,discord,purity,discord_closed,discord_closed_applicable"
)

# Reported central values for the J/psi -> Lambda anti-Lambda channel.
BESIII_ALPHA = -0.32
BESIII_DELTA_PHI = -4.26  # radians, outside [-pi,pi]; wrapped on use

_DEFAULT_MU = tuple(round(0.1 * i, 1) for i in range(11))
_DEFAULT_TAU = (0.2, 5.0, 20.0)


@dataclass(frozen=True)
class SweepGrid:
    """Evaluation grid: phi axis, time axis, channel parameter lists."""

    phi_points: int = 181
    phi_range: tuple[float, float] = (0.0, math.pi)
    t_points: int = 201
    t_max: float = 10.0
    mu_list: tuple[float, ...] = _DEFAULT_MU
    tau_list: tuple[float, ...] = _DEFAULT_TAU
    mass_mode: MassMode = MassMode.MASSLESS

    def __post_init__(self) -> None:
        if self.phi_points < 2 or self.t_points < 2:
            raise ArgumentError("grid axes need at least 2 points")
        lo, hi = self.phi_range
        if not (0.0 <= lo < hi <= math.pi):
            raise ArgumentError(f"phi range must be ordered within [0,pi]: {self.phi_range}")
        if not self.t_max > 0.0:
            raise ArgumentError(f"t_max must be positive, got {self.t_max}")
        if any(not 0.0 <= m <= 1.0 for m in self.mu_list):
            raise ArgumentError("mu values must lie in [0,1]")
        if any(not tau > 0.0 for tau in self.tau_list):
            raise ArgumentError("tau values must be positive")

    def phi_values(self) -> np.ndarray:
        return np.linspace(self.phi_range[0], self.phi_range[1], self.phi_points)

    def t_values(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.t_points)


@dataclass(frozen=True)
class MeasureRecord:
    """One evaluated grid point; t = mu = tau = 0 for static sweeps."""

    phi: float
    t: float
    mu: float
    tau: float
    mass_mode: MassMode
    measures: MeasureSet
    discord_closed: float | None

    @property
    def discord_closed_applicable(self) -> bool:
        return self.discord_closed is not None


@dataclass(frozen=True)
class HierarchyReport:
    """Pointwise ordering checks with any violations and their size."""

    bell_le_steering: tuple[bool, ...]
    steering_le_concurrence: tuple[bool, ...]
    discord_support_ok: tuple[bool, ...]
    violations: tuple[tuple[int, str, float], ...]
    max_violation: float

    @property
    def passed(self) -> bool:
        return not self.violations


def besiii_defaults() -> DecayParameters:
    """Central measured decay parameters of the reference channel."""
    return derive_form_params(BESIII_ALPHA, wrap_angle(BESIII_DELTA_PHI))


def _record(
    params: DecayParameters,
    phi: float,
    mode: MassMode,
    t: float = 0.0,
    mu: float = 0.0,
    tau: float = 0.0,
    w: float | None = None,
) -> MeasureRecord:
    rho = build_state(params, phi, mode)
    if w is not None:
        rho = evolve_closed_form(rho, w)
    return MeasureRecord(
        phi=phi,
        t=t,
        mu=mu,
        tau=tau,
        mass_mode=mode,
        measures=measure_set(rho),
        discord_closed=discord_closed(xstate_from_density(rho)),
    )


def sweep_angle(
    params: DecayParameters, grid: SweepGrid, mode: MassMode | None = None
) -> list[MeasureRecord]:
    """One record per phi at t = 0, no channel applied."""
    mode = grid.mass_mode if mode is None else mode
    return [_record(params, float(phi), mode) for phi in grid.phi_values()]


def sweep_dynamics(
    params: DecayParameters,
    grid: SweepGrid,
    channel_config: ChannelConfig | None = None,
    mode: MassMode | None = None,
    phi_override: float | None = None,
) -> list[MeasureRecord]:
    """Records over the (channel, phi, t) grid, closed-form evolution.

    With channel_config given only that (tau, mu) pair is used,
    otherwise the grid's tau_list x mu_list is enumerated.  With
    phi_override the phi axis collapses to that single angle.
    """
    mode = grid.mass_mode if mode is None else mode
    if channel_config is None:
        configs = [
            ChannelConfig(tau=tau, mu=mu)
            for tau in grid.tau_list
            for mu in grid.mu_list
        ]
    else:
        configs = [channel_config]
    phis = (
        [phi_override] if phi_override is not None else list(grid.phi_values())
    )
    records = []
    for config in configs:
        for phi in phis:
            for t in grid.t_values():
                w = decoherence_factors(config, float(t)).w
                records.append(
                    _record(
                        params,
                        float(phi),
                        mode,
                        t=float(t),
                        mu=config.mu,
                        tau=config.tau,
                        w=w,
                    )
                )
    return records


def hierarchy_report(
    records: list[MeasureRecord], tol: float = 1e-9
) -> HierarchyReport:
    """Check bell_norm <= steering_norm <= concurrence and discord support."""
    if not records:
        raise ArgumentError("hierarchy check needs at least one record")
    b_le_s = []
    s_le_c = []
    d_sup = []
    violations = []
    worst = 0.0
    for idx, rec in enumerate(records):
        m = rec.measures
        gap_bs = m.bell_norm - m.steering_norm
        gap_sc = m.steering_norm - m.concurrence
        ok_bs = gap_bs <= tol
        ok_sc = gap_sc <= tol
        ok_d = not (m.concurrence > tol and m.discord <= tol)
        b_le_s.append(ok_bs)
        s_le_c.append(ok_sc)
        d_sup.append(ok_d)
        if not ok_bs:
            violations.append((idx, "bell>steering", gap_bs))
            worst = max(worst, gap_bs)
        if not ok_sc:
            violations.append((idx, "steering>concurrence", gap_sc))
            worst = max(worst, gap_sc)
        if not ok_d:
            violations.append((idx, "concurrence without discord", m.concurrence))
            worst = max(worst, m.concurrence)
    return HierarchyReport(
        bell_le_steering=tuple(b_le_s),
        steering_le_concurrence=tuple(s_le_c),
        discord_support_ok=tuple(d_sup),
        violations=tuple(violations),
        max_violation=worst,
    )


def _format_float(x: float) -> str:
    return "%.12g" % x


def record_rows(records: list[MeasureRecord]) -> list[dict[str, object]]:
    """Flatten records into ordered dicts matching the CSV schema."""
    rows = []
    for rec in records:
        m = rec.measures
        rows.append(
            {
                "phi": rec.phi,
                "t": rec.t,
                "mu": rec.mu,
                "tau": rec.tau,
                "mass_mode": rec.mass_mode.value,
                "bell_raw": m.bell_raw,
                "bell_norm": m.bell_norm,
                "steering_raw": m.steering_raw,
                "steering_norm": m.steering_norm,
                "concurrence": m.concurrence,
                "discord": m.discord,
                "purity": m.purity,
                "discord_closed": (
                    float("nan") if rec.discord_closed is None else rec.discord_closed
                ),
                "discord_closed_applicable": int(rec.discord_closed_applicable),
            }
        )
    return rows


def write_csv(records: list[MeasureRecord], stream: io.TextIOBase) -> None:
    """Write records in the public CSV schema (12 significant digits)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for row in record_rows(records):
        writer.writerow(
            [
                _format_float(v) if isinstance(v, float) else str(v)
                for v in row.values()
            ]
        )


def write_json(records: list[MeasureRecord], stream: io.TextIOBase) -> None:
    rows = record_rows(records)
    for row in rows:
        dc = row["discord_closed"]
        if isinstance(dc, float) and math.isnan(dc):
            row["discord_closed"] = None
    json.dump(rows, stream, indent=2)
    stream.write("\n")


def _model_states(params: DecayParameters, n_phi: int = 31) -> list[np.ndarray]:
    phis = np.linspace(0.0, math.pi, n_phi)
    states = []
    for mode in MassMode:
        for phi in phis:
            states.append(build_state(params, float(phi), mode))
    return states


def validation_report(
    params: DecayParameters | None = None, seed: int | None = None
) -> dict:
    """Cross-validate every closed form against its brute-force oracle.

    Covers: CHSH (Horodecki route), Wootters vs X concurrence, steering
    bound attainment, discord fast path under both radicand conventions
    with per-point gaps on the angle sweep, the short-closed-form
    applicability census, and Kraus vs closed-form channel equivalence.
    """
    params = besiii_defaults() if params is None else params
    seed = DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)

    random_states = [random_x_state(rng) for _ in range(200)]
    states = random_states + _model_states(params)

    chsh_gap = 0.0
    wootters_gap = 0.0
    steer_short = 0.0   # how far below F3 the oracle stays
    steer_excess = 0.0  # how far above F3 (should be ~0)
    for k, rho in enumerate(states):
        raw, _ = bell_chsh(rho)
        chsh_gap = max(chsh_gap, abs(raw - chsh_bruteforce(rho, seed=seed + k)))
        wootters_gap = max(
            wootters_gap, abs(concurrence_wootters(rho) - concurrence_xstate(rho))
        )
        f3, _ = steering_F3(rho)
        found = steering_bruteforce(rho, seed=seed + k)
        steer_short = max(steer_short, f3 - found)
        steer_excess = max(steer_excess, found - f3)

    # discord on the angle sweep: oracle vs both radicand conventions
    grid = SweepGrid(phi_points=61)
    gap_points = []
    gaps = {"squared": 0.0, "linear": 0.0}
    applicability = {}
    for mode in MassMode:
        census = []
        for phi in grid.phi_values():
            rho = build_state(params, float(phi), mode)
            x = xstate_from_density(rho)
            reference = discord_bruteforce(rho)
            entry = {"phi": float(phi), "mode": mode.value, "oracle": reference}
            for convention in ("squared", "linear"):
                fast = discord(x, convention)
                entry[f"fast_{convention}"] = fast
                gaps[convention] = max(gaps[convention], abs(fast - reference))
            gap_points.append(entry)
            census.append(discord_closed(x) is not None)
        applicability[mode.value] = {
            "n_points": len(census),
            "n_applicable": int(sum(census)),
            "inapplicable_phi": [
                float(p) for p, ok in zip(grid.phi_values(), census) if not ok
            ],
        }
    b_convention = "squared" if gaps["squared"] <= gaps["linear"] else "linear"

    # oracle self-convergence under grid doubling
    mid = build_state(params, math.pi / 2.0, MassMode.MASSLESS)
    doubling = abs(discord_bruteforce(mid, 64) - discord_bruteforce(mid, 128))

    # dynamics spot check, 1% of a (phi, t) sheet
    dyn_grid = SweepGrid(phi_points=21, t_points=21)
    dyn = sweep_dynamics(params, dyn_grid, ChannelConfig(tau=5.0, mu=0.8))
    picks = rng.choice(len(dyn), size=max(1, len(dyn) // 100), replace=False)
    spot_gap = 0.0
    for idx in picks:
        rec = dyn[int(idx)]
        rho = evolve_closed_form(
            build_state(params, rec.phi, rec.mass_mode),
            decoherence_factors(ChannelConfig(tau=rec.tau, mu=rec.mu), rec.t).w,
        )
        spot_gap = max(spot_gap, abs(rec.measures.discord - discord_bruteforce(rho)))

    # Kraus map vs closed-form W scaling over both regimes
    kraus_err = 0.0
    prob_err = 0.0
    test_states = [mid, random_x_state(rng)]
    for tau in np.geomspace(0.05, 20.0, 10):
        config_mu = np.linspace(0.0, 1.0, 10)
        for mu in config_mu:
            for t in np.linspace(0.0, 10.0, 10):
                factors = decoherence_factors(ChannelConfig(tau=float(tau), mu=float(mu)), float(t))
                marginal = np.array([1.0 - factors.p, 0.0, 0.0, factors.p])
                joint = (1.0 - mu) * np.outer(marginal, marginal) + mu * np.diag(marginal)
                prob_err = max(prob_err, abs(float(joint.sum()) - 1.0))
                for rho in test_states:
                    via_kraus = kraus_map_correlated(rho, factors.p, float(mu))
                    via_w = evolve_closed_form(rho, factors.w)
                    kraus_err = max(kraus_err, float(np.max(np.abs(via_kraus - via_w))))

    passed = (
        kraus_err <= 1e-12
        and chsh_gap <= 1e-5
        and wootters_gap <= 1e-10
        and steer_excess <= 1e-9
        and steer_short <= 1e-3
    )
    return {
        "seed": seed,
        "kraus_equiv_max_err": kraus_err,
        "kraus_prob_sum_err": prob_err,
        "chsh_oracle_max_gap": chsh_gap,
        "wootters_max_gap": wootters_gap,
        "steering_oracle_max_shortfall": steer_short,
        "steering_oracle_max_excess": steer_excess,
        "discord_oracle_max_gap": gaps[b_convention],
        "discord_oracle_max_gap_squared": gaps["squared"],
        "discord_oracle_max_gap_linear": gaps["linear"],
        "discord_gap_points": gap_points,
        "discord_grid_doubling_change": doubling,
        "discord_dynamics_spot_gap": spot_gap,
        "eq23_applicability": applicability,
        "b_convention": b_convention,
        "passed": passed,
    }
