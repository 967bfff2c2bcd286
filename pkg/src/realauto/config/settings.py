"""
Configuration for realauto.

Defaults are mirrored in config/realauto_config.yaml. The YAML file may
override any subset; missing keys fall back to the built-in values below.
"""

from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any

import yaml

from ..errors import ConfigError
from ..utils.constants import (
    DEFAULT_EPS,
    DEFAULT_GRID,
    DEFAULT_MAX_ITER,
    DEFAULT_SOLVER_TOL,
    DEFAULT_VERIFY_GRID,
    SERIES_ORDERS,
    TAN_BRACKET_MARGIN,
)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[3] / "config" / "realauto_config.yaml"


@dataclass(frozen=True)
class ToleranceProfile:
    """Named tolerances consumed by the verifier."""

    name: str = "default"
    endpoint: float = 1e-9  # |f(+-1) -+ 1|
    derivative: float = 1e-10  # |f'(0) - a_claimed|
    fd_relative: float = 1e-6  # analytic vs finite-difference derivative
    oddness: float = 1e-13  # max |f(-x) + f(x)|
    origin: float = 0.0  # |f(0)|
    fd_step: float = 1e-5
    fd_points: int = 101

    @classmethod
    def from_dict(cls, name: str, data: dict[str, Any]) -> "ToleranceProfile":
        """Create a profile from a YAML mapping."""
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        unknown = set(data) - set(known)
        if unknown:
            raise ConfigError(
                f"Unknown keys in tolerance profile {name!r}: {sorted(unknown)}"
            )
        values: dict[str, Any] = {}
        try:
            for key, raw in known.items():
                if key == "name":
                    continue
                values[key] = int(raw) if key == "fd_points" else float(raw)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid tolerance profile {name!r}: {e}") from e
        profile = cls(name=name, **values)
        profile.validate()
        return profile

    def validate(self) -> None:
        """Check every tolerance is nonnegative and the FD setup is usable."""
        for key in ("endpoint", "derivative", "fd_relative", "oddness", "origin"):
            value = float(getattr(self, key))
            if not value >= 0.0:
                raise ConfigError(f"Tolerance {key} must be >= 0, got {value}")
        if not 0.0 < float(self.fd_step) < 0.25:
            raise ConfigError(f"fd_step must lie in (0, 0.25), got {self.fd_step}")
        if int(self.fd_points) < 1:
            raise ConfigError(f"fd_points must be >= 1, got {self.fd_points}")

    def with_overrides(
        self,
        endpoint: float | None = None,
        derivative: float | None = None,
    ) -> "ToleranceProfile":
        """Copy with CLI overrides applied."""
        updates: dict[str, float] = {}
        if endpoint is not None:
            updates["endpoint"] = endpoint
        if derivative is not None:
            updates["derivative"] = derivative
        if not updates:
            return self
        profile = replace(self, **updates)
        profile.validate()
        return profile

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


@dataclass(frozen=True)
class SolverSettings:
    """Parameter solver settings."""

    tol: float = DEFAULT_SOLVER_TOL
    max_iter: int = DEFAULT_MAX_ITER
    tan_bracket_margin: float = TAN_BRACKET_MARGIN

    @classmethod
    def from_dict(cls, config: dict[str, Any]) -> "SolverSettings":
        """Create settings from dictionary."""
        return cls(
            tol=float(config.get("tol", DEFAULT_SOLVER_TOL)),
            max_iter=int(config.get("max_iter", DEFAULT_MAX_ITER)),
            tan_bracket_margin=float(
                config.get("tan_bracket_margin", TAN_BRACKET_MARGIN)
            ),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


@dataclass(frozen=True)
class SeriesSettings:
    """Per-family truncation orders."""

    orders: dict[str, int] = field(default_factory=lambda: dict(SERIES_ORDERS))

    @classmethod
    def from_dict(cls, config: dict[str, Any]) -> "SeriesSettings":
        """Create settings from dictionary."""
        orders = dict(SERIES_ORDERS)
        for family, order in (config.get("orders", {}) or {}).items():
            if family not in orders:
                raise ConfigError(f"Unknown series family {family!r}")
            orders[family] = int(order)
        return cls(orders=orders)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {"orders": dict(self.orders)}


@dataclass(frozen=True)
class CliSettings:
    """Defaults for the command-line front end."""

    grid: int = DEFAULT_GRID
    eps: float = DEFAULT_EPS
    verify_grid: int = DEFAULT_VERIFY_GRID
    convergence_rows: int = 10

    @classmethod
    def from_dict(cls, config: dict[str, Any]) -> "CliSettings":
        """Create settings from dictionary."""
        return cls(
            grid=int(config.get("grid", DEFAULT_GRID)),
            eps=float(config.get("eps", DEFAULT_EPS)),
            verify_grid=int(config.get("verify_grid", DEFAULT_VERIFY_GRID)),
            convergence_rows=int(config.get("convergence_rows", 10)),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


@dataclass(frozen=True)
class RealAutoConfig:
    """Complete configuration."""

    profiles: dict[str, ToleranceProfile] = field(
        default_factory=lambda: {"default": ToleranceProfile()}
    )
    solver: SolverSettings = field(default_factory=SolverSettings)
    series: SeriesSettings = field(default_factory=SeriesSettings)
    cli: CliSettings = field(default_factory=CliSettings)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RealAutoConfig":
        """Create configuration from a parsed YAML document."""
        profiles = {"default": ToleranceProfile()}
        for name, values in (data.get("tolerance_profiles", {}) or {}).items():
            if not isinstance(values, dict):
                raise ConfigError(f"Tolerance profile {name!r} must be a mapping")
            profiles[name] = ToleranceProfile.from_dict(name, values)

        return cls(
            profiles=profiles,
            solver=SolverSettings.from_dict(data.get("solver", {}) or {}),
            series=SeriesSettings.from_dict(data.get("series", {}) or {}),
            cli=CliSettings.from_dict(data.get("cli", {}) or {}),
        )

    def get_profile(self, name: str = "default") -> ToleranceProfile:
        """
        Look up a tolerance profile by name.

        Raises:
            ConfigError: if no profile has that name
        """
        try:
            return self.profiles[name]
        except KeyError as e:
            raise ConfigError(
                f"Unknown tolerance profile {name!r}; known: {sorted(self.profiles)}"
            ) from e

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "tolerance_profiles": {
                name: {k: v for k, v in p.to_dict().items() if k != "name"}
                for name, p in self.profiles.items()
            },
            "solver": self.solver.to_dict(),
            "series": self.series.to_dict(),
            "cli": self.cli.to_dict(),
        }


def load_config(path: str | Path | None = None) -> RealAutoConfig:
    """
    Load configuration from YAML.

    Args:
        path: Config file (defaults to config/realauto_config.yaml)

    Returns:
        RealAutoConfig; built-in defaults when the default file is absent

    Raises:
        ConfigError: if the file is unreadable, not a mapping, or invalid
    """
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not config_path.exists():
        if path is not None:
            raise ConfigError(f"Config file not found: {config_path}")
        return RealAutoConfig()

    try:
        with open(config_path) as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Malformed YAML in {config_path}: {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"Config root must be a mapping in {config_path}")
    try:
        return RealAutoConfig.from_dict(data)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Invalid configuration in {config_path}: {e}") from e


def get_tolerance_profile(
    name: str = "default", path: str | Path | None = None
) -> ToleranceProfile:
    """Load configuration and return one tolerance profile."""
    return load_config(path).get_profile(name)
