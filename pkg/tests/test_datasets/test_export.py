from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from stablevoigt.core.errors import OutputError
from stablevoigt.core.models import Grid1D, MomentResult, ProfileSamples
from stablevoigt.datasets.export import (
    MOMENT_COLUMNS,
    read_profile_csv,
    window_indices,
    write_moments_csv,
    write_profile_csv,
)


def test_profile_csv_with_header(temp_dir: Path, gaussian_samples: ProfileSamples) -> None:
    path = temp_dir / "out" / "profile.csv"
    header = {"alpha1": 1.0, "alpha2": 2.0, "tau": 0.5, "n": 801}
    write_profile_csv(gaussian_samples, path, header=header)

    lines = path.read_text().splitlines()
    assert lines[0] == "# alpha1=1.0 alpha2=2.0 tau=0.5 n=801"
    assert lines[1] == "x,value"

    frame = read_profile_csv(path)
    assert list(frame.columns) == ["x", "value"]
    np.testing.assert_array_equal(frame["x"].to_numpy(), gaussian_samples.x)
    np.testing.assert_array_equal(frame["value"].to_numpy(), gaussian_samples.values)


def test_window(temp_dir: Path, gaussian_samples: ProfileSamples) -> None:
    index = window_indices(gaussian_samples.x, 1.0)
    path = write_profile_csv(gaussian_samples, temp_dir / "window.csv", index=index)
    frame = read_profile_csv(path)
    assert len(frame) == 21
    assert frame["x"].abs().max() == pytest.approx(1.0)


def test_identical_inputs_identical_bytes(
    temp_dir: Path, gaussian_samples: ProfileSamples
) -> None:
    a = write_profile_csv(gaussian_samples, temp_dir / "a.csv", header={"tau": 1})
    b = write_profile_csv(gaussian_samples, temp_dir / "b.csv", header={"tau": 1})
    assert a.read_bytes() == b.read_bytes()
    assert not (temp_dir / "a.csv.tmp").exists()


def test_unwritable_path(temp_dir: Path, gaussian_samples: ProfileSamples) -> None:
    blocker = temp_dir / "file"
    blocker.write_text("")
    with pytest.raises(OutputError):
        write_profile_csv(gaussian_samples, blocker / "profile.csv")


def test_missing_file(temp_dir: Path) -> None:
    with pytest.raises(OutputError):
        read_profile_csv(temp_dir / "missing.csv")


def test_moments_csv(temp_dir: Path) -> None:
    results = [
        MomentResult(
            value=1.5, method="quadrature", terms_used=12, error_estimate=1e-9, tau=1.0, q=0.5
        ),
        MomentResult(value=0.1, method="series_small_tau", terms_used=4, tau=0.01, q=0.5),
    ]
    path = write_moments_csv(results, temp_dir / "moments.csv")
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(MOMENT_COLUMNS)
    assert lines[2] == "0.01,0.5,0.10000000000000001,series_small_tau,0"


class TestWindowIndices:
    def test_stride_keeps_origin(self) -> None:
        x = Grid1D.from_spacing(0.01, 2000).points
        index = window_indices(x, 10.0, stride=5)
        assert len(index) == 401
        assert 0.0 in x[index]
        np.testing.assert_allclose(np.diff(x[index]), 0.05)

    def test_whole_grid(self) -> None:
        x = Grid1D(5.0, 11).points
        np.testing.assert_array_equal(window_indices(x, 5.0), np.arange(11))
