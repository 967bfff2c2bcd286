"""Configuration loading and named tolerance profiles."""

from .settings import (
    DEFAULT_CONFIG_PATH,
    CliSettings,
    RealAutoConfig,
    SeriesSettings,
    SolverSettings,
    ToleranceProfile,
    get_tolerance_profile,
    load_config,
)

__all__ = [
    "DEFAULT_CONFIG_PATH",
    "RealAutoConfig",
    "ToleranceProfile",
    "SolverSettings",
    "SeriesSettings",
    "CliSettings",
    "load_config",
    "get_tolerance_profile",
]
