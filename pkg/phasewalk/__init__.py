"""
phasewalk - the discrete-time walk on the line with the coin C = H T H
"""

from .version import __version__
from .errors import PhasewalkError, DomainError, DegenerateCoinError, QuadratureError, ConfigError
from .params import PhaseParams, CoinMatrix, make_params, coin_matrix

# Exact simulation
from .exactsim import (
    WalkState,
    initial_state,
    step,
    evolve,
    evolve_history,
    probability,
    moments,
    peak_positions,
    variance_exponent,
)

# Momentum space
from .spectral import (
    MomentumOperator,
    MomentumSpectrum,
    momentum_operator,
    spectrum,
    initial_overlap,
    reconstruct_amplitudes,
    reconstruct_state,
    group_velocity,
    spectrum_grid,
)

# Stationary phase
from .asymptotics import (
    SaddleData,
    AsymptoticAmplitudes,
    saddle_point,
    asymptotic_amplitudes,
    asymptotic_probability,
    asymptotic_curve,
    middle_region_error,
)

# Limit law
from .weaklimit import (
    LimitLaw,
    VelocitySample,
    velocity_map,
    support_interval,
    limit_density,
    limit_cdf,
    limit_cdf_closed_form,
    measure_cdf,
    in_support,
    density_mass,
    ks_distance,
    pushforward_sample,
    is_symmetric_initial,
    symmetric_initial_state,
)

# CLI plumbing
from .config import RunConfig
from .registry import command, get_command, discover_commands

__all__ = [
    # Core
    "__version__",
    "PhasewalkError",
    "DomainError",
    "DegenerateCoinError",
    "QuadratureError",
    "ConfigError",
    "PhaseParams",
    "CoinMatrix",
    "make_params",
    "coin_matrix",
    # Exact simulation
    "WalkState",
    "initial_state",
    "step",
    "evolve",
    "evolve_history",
    "probability",
    "moments",
    "peak_positions",
    "variance_exponent",
    # Momentum space
    "MomentumOperator",
    "MomentumSpectrum",
    "momentum_operator",
    "spectrum",
    "initial_overlap",
    "reconstruct_amplitudes",
    "reconstruct_state",
    "group_velocity",
    "spectrum_grid",
    # Stationary phase
    "SaddleData",
    "AsymptoticAmplitudes",
    "saddle_point",
    "asymptotic_amplitudes",
    "asymptotic_probability",
    "asymptotic_curve",
    "middle_region_error",
    # Limit law
    "LimitLaw",
    "VelocitySample",
    "velocity_map",
    "support_interval",
    "limit_density",
    "limit_cdf",
    "limit_cdf_closed_form",
    "measure_cdf",
    "in_support",
    "density_mass",
    "ks_distance",
    "pushforward_sample",
    "is_symmetric_initial",
    "symmetric_initial_state",
    # CLI plumbing
    "RunConfig",
    "command",
    "get_command",
    "discover_commands",
]
