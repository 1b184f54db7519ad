"""Command-line front end.

Subcommands:
  angle-sweep   measures vs production angle at t = 0
  dynamics      measures vs time under the correlated dephasing channel
  validate      oracle cross-validation report (JSON)

Configuration may come from flags or a JSON file (--config); flags win
on conflict.  The default oracle seed can be set via the SPINCORR_SEED
environment variable.  Exit codes: 0 ok, 2 usage, 3 input validation,
4 cross-validation failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from .channels import ChannelConfig
from .errors import SpinCorrError
from .oracles import DEFAULT_SEED
from .spinstate import DecayParameters, MassMode, derive_form_params, wrap_angle
from .sweep import (
    SweepGrid,
    sweep_angle,
    sweep_dynamics,
    validation_report,
    write_csv,
    write_json,
)

SEED_ENV_VAR = "SPINCORR_SEED"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_ACCEPTANCE = 4


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved invocation parameters."""

    params: DecayParameters
    mode: MassMode
    out: str | None
    fmt: str
    seed: int
    phi_points: int
    tau: float
    mu: float
    phi: float | None
    t_max: float
    t_points: int


def _env_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise SpinCorrError(
            f"{SEED_ENV_VAR} must be an integer, got {raw!r}"
        ) from None


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, default=None,
                        help="decay asymmetry alpha in [-1,1] (default -0.32)")
    parser.add_argument("--delta-phi", type=float, default=None,
                        help="form-factor phase in radians (default -4.26)")
    parser.add_argument("--mass-corrected", action="store_true", default=None,
                        help="use the finite-lepton-mass correlation matrix")
    parser.add_argument("--out", default=None,
                        help="output path (default: stdout)")
    parser.add_argument("--format", dest="fmt", choices=("csv", "json"),
                        default=None, help="output format (default csv)")
    parser.add_argument("--seed", type=int, default=None,
                        help=f"oracle seed (default {SEED_ENV_VAR} or built-in)")
    parser.add_argument("--config", default=None,
                        help="JSON config file; explicit flags take precedence")


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpinCorrError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise SpinCorrError("config file must hold a JSON object")
    return data


def _pick(flag, config: dict, key: str, default):
    if flag is not None:
        return flag
    if key in config:
        return config[key]
    return default


def _resolve(args: argparse.Namespace) -> RunConfig:
    config = _load_config(args.config)
    alpha = float(_pick(args.alpha, config, "alpha", -0.32))
    delta_phi = float(_pick(args.delta_phi, config, "delta_phi", -4.26))
    if "beta" in config or "gamma" in config:
        params = _params_from_beta_gamma(alpha, config)
    else:
        params = derive_form_params(alpha, wrap_angle(delta_phi))
    mass_corrected = bool(_pick(args.mass_corrected, config, "mass_corrected", False))
    mode = MassMode.MASS_CORRECTED if mass_corrected else MassMode.MASSLESS
    return RunConfig(
        params=params,
        mode=mode,
        out=_pick(args.out, config, "out", None),
        fmt=str(_pick(args.fmt, config, "format", "csv")),
        seed=int(_pick(args.seed, config, "seed", _env_seed())),
        phi_points=int(_pick(getattr(args, "phi_points", None), config, "phi_points", 181)),
        tau=float(_pick(getattr(args, "tau", None), config, "tau", 5.0)),
        mu=float(_pick(getattr(args, "mu", None), config, "mu", 0.8)),
        phi=_pick(getattr(args, "phi", None), config, "phi", None),
        t_max=float(_pick(getattr(args, "t_max", None), config, "t_max", 10.0)),
        t_points=int(_pick(getattr(args, "t_points", None), config, "t_points", 201)),
    )


def _params_from_beta_gamma(alpha: float, config: dict) -> DecayParameters:
    # Explicit (beta, gamma) must sit on the sphere with alpha; the phase
    # is reconstructed and the magnitudes re-derived so rounding in the
    # config cannot break the closure invariant.
    if "beta" not in config or "gamma" not in config:
        raise SpinCorrError("config must give both beta and gamma or neither")
    beta = float(config["beta"])
    gamma = float(config["gamma"])
    want = math.sqrt(max(0.0, 1.0 - alpha * alpha))
    have = math.hypot(beta, gamma)
    if abs(have - want) > 1e-6:
        raise SpinCorrError(
            f"beta^2+gamma^2 = {have**2:.8f} incompatible with alpha={alpha}"
        )
    return derive_form_params(alpha, math.atan2(beta, gamma))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _write_records(records, cfg: RunConfig) -> None:
    buf = io.StringIO()
    if cfg.fmt == "json":
        write_json(records, buf)
    else:
        write_csv(records, buf)
    _emit(buf.getvalue(), cfg.out)


def cmd_angle_sweep(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="spincorr angle-sweep",
        description="Correlation measures versus production angle.",
    )
    _add_common_flags(parser)
    parser.add_argument("--phi-points", dest="phi_points", type=int, default=None,
                        help="number of angle grid points (default 181)")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _resolve(args)
        grid = SweepGrid(phi_points=cfg.phi_points, mass_mode=cfg.mode)
        records = sweep_angle(cfg.params, grid)
        _write_records(records, cfg)
    except SpinCorrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_dynamics(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="spincorr dynamics",
        description="Correlation measures versus time under dephasing.",
    )
    _add_common_flags(parser)
    parser.add_argument("--tau", type=float, default=None,
                        help="reservoir time-scale (default 5.0)")
    parser.add_argument("--mu", type=float, default=None,
                        help="channel memory parameter in [0,1] (default 0.8)")
    parser.add_argument("--phi", type=float, default=None,
                        help="fixed production angle; omit for a full phi grid")
    parser.add_argument("--phi-points", dest="phi_points", type=int, default=None,
                        help="phi grid size when --phi is omitted (default 181)")
    parser.add_argument("--t-max", dest="t_max", type=float, default=None,
                        help="end of the time axis (default 10)")
    parser.add_argument("--t-points", dest="t_points", type=int, default=None,
                        help="number of time samples (default 201)")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _resolve(args)
        grid = SweepGrid(
            phi_points=max(2, cfg.phi_points),
            t_points=cfg.t_points,
            t_max=cfg.t_max,
            mass_mode=cfg.mode,
        )
        channel = ChannelConfig(tau=cfg.tau, mu=cfg.mu)
        phi = None if cfg.phi is None else float(cfg.phi)
        if phi is not None and not 0.0 <= phi <= math.pi:
            raise SpinCorrError(f"phi must lie in [0, pi], got {phi}")
        records = sweep_dynamics(cfg.params, grid, channel, phi_override=phi)
        _write_records(records, cfg)
    except SpinCorrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_validate(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(
        prog="spincorr validate",
        description="Run oracle cross-validation and emit a JSON report.",
    )
    _add_common_flags(parser)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _resolve(args)
        report = validation_report(cfg.params, seed=cfg.seed)
        _emit(json.dumps(report, indent=2) + "\n", cfg.out)
    except SpinCorrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK if report["passed"] else EXIT_ACCEPTANCE


_COMMANDS = {
    "angle-sweep": cmd_angle_sweep,
    "dynamics": cmd_dynamics,
    "validate": cmd_validate,
}

_USAGE = """usage: spincorr <command> [options]

commands:
  angle-sweep   measures vs production angle (CSV/JSON)
  dynamics      measures vs time under correlated dephasing (CSV/JSON)
  validate      oracle cross-validation report (JSON)

run `spincorr <command> --help` for command options
"""


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        print(_USAGE, end="", file=sys.stderr)
        return EXIT_USAGE
    if argv[0] in ("-h", "--help"):
        print(_USAGE, end="")
        return EXIT_OK
    command = _COMMANDS.get(argv[0])
    if command is None:
        print(_USAGE, end="", file=sys.stderr)
        print(f"error: unknown command {argv[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    return command(argv[1:])


if __name__ == "__main__":
    sys.exit(main())
