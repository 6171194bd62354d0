from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import pytest

from stablevoigt.datasets.export import read_profile_csv
from stablevoigt.datasets.figures import (
    FIG1_WEIGHTS,
    FIG2_PAIRS,
    FIG2_TAUS,
    Fig1Config,
    Fig1Pipeline,
    Fig2Config,
    Fig2Pipeline,
)


class TestFig1:
    def test_curves(self) -> None:
        curves = Fig1Pipeline().curves(0.5)
        assert curves["voigt"].omega_l == 1.0
        assert curves["gauss"].tau == 1.0
        assert curves["lorentz"].tau == 1.0

    def test_single_weight(self, temp_dir: Path) -> None:
        config = Fig1Config(output_dir=temp_dir / "fig1", weights=(0.01,), spacing=0.05)
        stats = Fig1Pipeline(config).run()

        names = sorted(p.name for p in stats.files)
        assert names == ["gauss_a0.01.csv", "lorentz_a0.01.csv", "voigt_a0.01.csv"]
        for path in stats.files:
            frame = read_profile_csv(path)
            assert len(frame) == 401
            assert frame["x"].iloc[200] == 0.0

        assert stats.peaks["lorentz_a0.01"] == pytest.approx(1.0 / (0.02 * math.pi), rel=1e-6)
        assert stats.peaks["gauss_a0.01"] == pytest.approx(1.0 / (2.0 * math.sqrt(math.pi)))
        assert stats.peaks["voigt_a0.01"] < stats.peaks["gauss_a0.01"]

        manifest = json.loads((temp_dir / "fig1" / "manifest.json").read_text())
        assert manifest["figure"] == "fig1"
        assert sorted(manifest["files"]) == names

    def test_weight_limits(self, temp_dir: Path) -> None:
        config = Fig1Config(output_dir=temp_dir, weights=(0.01, 2.0), spacing=0.05)
        Fig1Pipeline(config).run()

        def curve(name: str) -> np.ndarray:
            return read_profile_csv(temp_dir / f"{name}.csv")["value"].to_numpy()

        # the Lorentzian shifts the peak by about erfc(a) - 1, i.e. 1% of it at a = 0.01
        assert np.max(np.abs(curve("voigt_a0.01") - curve("gauss_a0.01"))) < 5e-3
        to_lorentz = np.max(np.abs(curve("voigt_a2") - curve("lorentz_a2")))
        to_gauss = np.max(np.abs(curve("voigt_a2") - curve("gauss_a2")))
        assert to_lorentz < to_gauss

    def test_peak_falls_with_weight(self, temp_dir: Path) -> None:
        config = Fig1Config(output_dir=temp_dir, weights=FIG1_WEIGHTS, spacing=0.05)
        stats = Fig1Pipeline(config).run()
        peaks = [stats.peaks[f"voigt_a{w:g}"] for w in FIG1_WEIGHTS]
        assert all(a > b for a, b in zip(peaks, peaks[1:]))
        # any Lorentzian share lowers the center below the pure Gaussian
        assert peaks[0] < stats.peaks["gauss_a0.01"]

    def test_deterministic(self, temp_dir: Path) -> None:
        for name in ("a", "b"):
            config = Fig1Config(output_dir=temp_dir / name, weights=(1.0,), spacing=0.05)
            Fig1Pipeline(config).run()
        for path in (temp_dir / "a").glob("*.csv"):
            assert path.read_bytes() == (temp_dir / "b" / path.name).read_bytes()

    @pytest.mark.slow
    def test_all_weights(self, temp_dir: Path) -> None:
        stats = Fig1Pipeline(Fig1Config(output_dir=temp_dir)).run()
        assert len(stats.files) == 3 * len(FIG1_WEIGHTS)


class TestFig2:
    def test_single_pair(self, temp_dir: Path) -> None:
        config = Fig2Config(output_dir=temp_dir, pairs=((1.0, 1.5),))
        stats = Fig2Pipeline(config).run()

        assert [p.name for p in stats.files] == [
            "voigt_1_1.5_tau0.1.csv",
            "voigt_1_1.5_tau1.csv",
            "voigt_1_1.5_tau10.csv",
        ]
        first_line = stats.files[0].read_text().splitlines()[0]
        assert first_line.startswith("# alpha1=1.0 alpha2=1.5 tau=0.1 extent=")

        frame = read_profile_csv(stats.files[1])
        assert frame["x"].abs().max() <= 10.0 + 1e-9
        peaks = [stats.peaks[f"voigt_1_1.5_tau{t:g}"] for t in FIG2_TAUS]
        assert peaks == sorted(peaks, reverse=True)

    @pytest.mark.slow
    def test_all_pairs(self, temp_dir: Path) -> None:
        stats = Fig2Pipeline(Fig2Config(output_dir=temp_dir)).run()
        assert len(stats.files) == len(FIG2_PAIRS) * len(FIG2_TAUS)
