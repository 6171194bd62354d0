from __future__ import annotations

import math
from functools import lru_cache
from pathlib import Path

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings

from stablevoigt.core.errors import InvalidParameterError


class Settings(BaseSettings):
    # Stable densities
    pdf_tol: float = 1e-10
    closed_form_eps: float = 1e-12
    tail_switch: float = 1e6
    cf_cutoff: float = -math.log(1e-16)

    # Grids and discrete inversion
    profile_tol: float = 1e-6
    boundary_tol: float = 1e-8
    grid_n: int = 4096
    grid_extent_factor: float = 40.0
    display_extent: float = 10.0

    # Riesz operator
    decay_threshold: float = 1e-12
    riesz_tol: float = 1e-6
    riesz_split: float = 1e-2
    riesz_fd_step: float = 1e-2
    unity_band: float = 1e-6

    # Evolution
    fd_tau_step: float = 1e-4
    small_tau: float = 1e-3

    # Moments
    moment_rel_tol: float = 1e-8
    series_tol: float = 1e-12
    series_max_terms: int = 200
    series_growth_limit: int = 3
    series_switch: float = 0.1

    # Paths
    output_dir: Path = Field(default_factory=lambda: Path("data"))
    config_path: Path | None = None

    model_config = {"env_prefix": "STABLEVOIGT_"}

    @property
    def fig1_dir(self) -> Path:
        return self.output_dir / "fig1"

    @property
    def fig2_dir(self) -> Path:
        return self.output_dir / "fig2"


def load_settings_from_yaml(path: Path) -> Settings:
    try:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise InvalidParameterError(f"could not read config {path}: {e}") from e
    return Settings(**data, config_path=path)


_active: Settings | None = None


@lru_cache
def _default_settings() -> Settings:
    default_config = Path("configs/default.yaml")
    if default_config.exists():
        return load_settings_from_yaml(default_config)
    return Settings()


def get_settings() -> Settings:
    return _active if _active is not None else _default_settings()


def use_settings(settings: Settings | None) -> Settings | None:
    """
    Make `settings` the process-wide configuration; None restores the default.

    Returns the previously active settings so callers can put them back.
    """
    global _active
    previous, _active = _active, settings
    return previous
