from __future__ import annotations

from pathlib import Path

import pytest

from stablevoigt.core.config import Settings, get_settings, load_settings_from_yaml, use_settings
from stablevoigt.core.errors import InvalidParameterError


def test_yaml_overrides(temp_dir: Path) -> None:
    path = temp_dir / "config.yaml"
    path.write_text("profile_tol: 1.0e-8\noutput_dir: results\n")
    settings = load_settings_from_yaml(path)
    assert settings.profile_tol == 1e-8
    assert settings.fig2_dir == Path("results/fig2")
    assert settings.config_path == path


def test_empty_yaml(temp_dir: Path) -> None:
    path = temp_dir / "empty.yaml"
    path.write_text("")
    assert load_settings_from_yaml(path).series_tol == Settings().series_tol


def test_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("STABLEVOIGT_GRID_N", "128")
    assert Settings().grid_n == 128


def test_active_settings(settings: Settings) -> None:
    assert get_settings() is settings
    use_settings(None)
    assert get_settings() is not settings


def test_use_settings_returns_previous(settings: Settings) -> None:
    other = Settings(grid_n=64)
    assert use_settings(other) is settings
    assert get_settings() is other
    assert use_settings(settings) is other


def test_missing_file(temp_dir: Path) -> None:
    with pytest.raises(InvalidParameterError, match="could not read config"):
        load_settings_from_yaml(temp_dir / "missing.yaml")
