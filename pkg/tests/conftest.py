from __future__ import annotations

import math
import tempfile
from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest

from stablevoigt.core.config import Settings, use_settings
from stablevoigt.core.models import Grid1D, ProfileSamples


@pytest.fixture
def temp_dir() -> Iterator[Path]:
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def settings(temp_dir: Path) -> Iterator[Settings]:
    """Default settings writing into a temporary directory, active for the test."""
    active = Settings(output_dir=temp_dir)
    use_settings(active)
    yield active
    use_settings(None)


def gaussian(x: np.ndarray | float) -> np.ndarray:
    """Density with characteristic function exp(-k^2): exp(-x^2/4) / (2 sqrt(pi))."""
    x = np.asarray(x, dtype=float)
    return np.exp(-(x**2) / 4.0) / (2.0 * math.sqrt(math.pi))


def gaussian_second_derivative(x: np.ndarray | float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return (x**2 / 4.0 - 0.5) * gaussian(x)


def cauchy(x: np.ndarray | float, width: float = 1.0) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return width / (math.pi * (x**2 + width**2))


@pytest.fixture
def gaussian_grid() -> Grid1D:
    return Grid1D(extent=40.0, n=801)


@pytest.fixture
def gaussian_samples(gaussian_grid: Grid1D) -> ProfileSamples:
    return ProfileSamples(grid=gaussian_grid, values=gaussian(gaussian_grid.points))
