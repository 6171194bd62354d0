from __future__ import annotations

import numpy as np
import pytest

from stablevoigt.core.errors import ProfileInvariantError
from stablevoigt.core.models import Grid1D, ProfileSamples
from stablevoigt.eval.invariants import (
    InvariantTolerances,
    assert_profile,
    check_profile,
    max_rise_from_peak,
    symmetry_error,
)


def test_gaussian_passes(gaussian_samples: ProfileSamples) -> None:
    report = check_profile(gaussian_samples)
    assert report.ok
    assert report.mass == pytest.approx(1.0, abs=1e-10)
    assert report.symmetry_error == 0.0


def test_symmetry_error() -> None:
    assert symmetry_error(np.array([1.0, 2.0, 1.5])) == 0.5


def test_max_rise() -> None:
    assert max_rise_from_peak(np.array([0.1, 0.3, 1.0, 0.5, 0.2])) <= 0.0
    assert max_rise_from_peak(np.array([0.1, 0.3, 1.0, 0.5, 0.6])) == pytest.approx(0.1)


def test_failures_are_listed(gaussian_grid: Grid1D, gaussian_samples: ProfileSamples) -> None:
    bad = ProfileSamples(grid=gaussian_grid, values=gaussian_samples.values * 2.0)
    bad.values[0] = -1e-3
    report = check_profile(bad)
    assert not report.ok
    assert any("negative" in f for f in report.failures)
    assert any("mass" in f for f in report.failures)
    assert any("asymmetric" in f for f in report.failures)


def test_mass_check_can_be_skipped(gaussian_grid: Grid1D, gaussian_samples: ProfileSamples) -> None:
    scaled = ProfileSamples(grid=gaussian_grid, values=gaussian_samples.values * 3.0)
    assert check_profile(scaled, check_mass=False).ok
    assert check_profile(scaled, InvariantTolerances(mass=5.0)).ok


def test_assert_profile_raises(gaussian_grid: Grid1D) -> None:
    values = np.zeros(len(gaussian_grid))
    values[len(values) // 2] = 1.0
    values[10] = 0.5
    with pytest.raises(ProfileInvariantError, match="spike"):
        assert_profile(ProfileSamples(grid=gaussian_grid, values=values), label="spike")


def test_reported_outside_mass_completes_normalization(
    gaussian_grid: Grid1D, gaussian_samples: ProfileSamples
) -> None:
    clipped = ProfileSamples(
        grid=gaussian_grid, values=gaussian_samples.values * 0.75, meta={"outside_mass": 0.25}
    )
    report = check_profile(clipped)
    assert report.ok
    assert report.outside_mass == 0.25
    assert not check_profile(ProfileSamples(grid=gaussian_grid, values=clipped.values)).ok
