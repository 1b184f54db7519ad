"""Spin-correlation toolkit for baryon-antibaryon pairs.

Builds the two-qubit spin density matrix of a hyperon pair produced
through a vector charmonium resonance, evolves it under a dephasing
channel with classical memory, and evaluates Bell nonlocality,
steering, concurrence, quantum discord and purity, each backed by an
independent brute-force oracle.
"""

from .channels import (
    ChannelConfig,
    DecoherenceFactors,
    decoherence_V,
    decoherence_factors,
    evolve_closed_form,
    kraus_map_correlated,
    memory_factor_W,
)
from .errors import (
    ArgumentError,
    NumericError,
    SingularityError,
    SpinCorrError,
    ValidationError,
)
from .linalg import EigenResult, hermitian_eigen, kron, pauli
from .measures import (
    MeasureSet,
    bell_chsh,
    bell_chsh_xform,
    binary_entropy,
    concurrence_wootters,
    concurrence_xstate,
    discord,
    discord_F,
    discord_closed,
    measure_set,
    purity,
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
from .spinstate import (
    DecayParameters,
    MassMode,
    XStateCoefficients,
    build_state,
    cmatrix,
    density_from_xstate,
    derive_form_params,
    validate_state,
    wrap_angle,
    xstate_from_cmatrix,
)
from .sweep import (
    CSV_HEADER,
    HierarchyReport,
    MeasureRecord,
    SweepGrid,
    besiii_defaults,
    hierarchy_report,
    sweep_angle,
    sweep_dynamics,
    validation_report,
    write_csv,
    write_json,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "ChannelConfig",
    "CSV_HEADER",
    "DEFAULT_SEED",
    "DecayParameters",
    "DecoherenceFactors",
    "EigenResult",
    "HierarchyReport",
    "MassMode",
    "MeasureRecord",
    "MeasureSet",
    "NumericError",
    "SingularityError",
    "SpinCorrError",
    "SweepGrid",
    "ValidationError",
    "XStateCoefficients",
    "bell_chsh",
    "bell_chsh_xform",
    "besiii_defaults",
    "binary_entropy",
    "build_state",
    "chsh_bruteforce",
    "cmatrix",
    "concurrence_wootters",
    "concurrence_xstate",
    "decoherence_V",
    "decoherence_factors",
    "density_from_xstate",
    "derive_form_params",
    "discord",
    "discord_F",
    "discord_bruteforce",
    "discord_closed",
    "evolve_closed_form",
    "hermitian_eigen",
    "hierarchy_report",
    "kraus_map_correlated",
    "kron",
    "measure_set",
    "memory_factor_W",
    "pauli",
    "purity",
    "random_x_state",
    "steering_F3",
    "steering_bruteforce",
    "sweep_angle",
    "sweep_dynamics",
    "validate_state",
    "validation_report",
    "wrap_angle",
    "write_csv",
    "write_json",
    "xstate_from_cmatrix",
    "xstate_from_density",
]
