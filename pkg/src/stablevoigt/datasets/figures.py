"""
Curve datasets written by the fig1 and fig2 commands.

fig1: classic Voigt, Gaussian and Lorentzian profiles for several
weight-parameters a = omega_l / omega_g at fixed omega_g.
fig2: generalized Voigt profiles from the double-order diffusion solver for
four exponent pairs at three scale-factors.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path

from stablevoigt.core.config import get_settings
from stablevoigt.core.errors import ProfileInvariantError
from stablevoigt.core.models import ClassicVoigtSpec, EvolutionProblem, StableParams
from stablevoigt.datasets.export import (
    atomic_write,
    ensure_dir,
    window_indices,
    write_profile_csv,
)
from stablevoigt.eval.invariants import assert_profile
from stablevoigt.operators.evolution import auto_grid, solve_exact_spectral
from stablevoigt.profiles.voigt import ProfileSpec, certified_grid, profile_on_grid

logger = logging.getLogger(__name__)

FIG1_WEIGHTS = (0.01, 0.1, 1.0, 2.0)
FIG2_PAIRS = ((0.5, 2.0), (1.5, 2.0), (0.5, 1.5), (1.0, 1.5))
FIG2_TAUS = (0.1, 1.0, 10.0)


@dataclass
class Fig1Config:
    output_dir: Path = Path("data/fig1")
    weights: tuple[float, ...] = FIG1_WEIGHTS
    omega_g: float = 2.0
    display_extent: float = 10.0
    spacing: float = 0.01
    tol: float = 1e-6


@dataclass
class Fig2Config:
    output_dir: Path = Path("data/fig2")
    pairs: tuple[tuple[float, float], ...] = FIG2_PAIRS
    taus: tuple[float, ...] = FIG2_TAUS
    display_extent: float = 10.0


@dataclass
class FigureStats:
    output_dir: Path
    files: list[Path] = field(default_factory=list)
    peaks: dict[str, float] = field(default_factory=dict)


def _write_manifest(
    output_dir: Path, figure: str, params: dict[str, object], files: list[Path]
) -> None:
    # no timestamp: identical runs give identical directories
    manifest = {"figure": figure, "params": params, "files": [p.name for p in files]}
    atomic_write(
        output_dir / "manifest.json",
        lambda f: json.dump(manifest, f, indent=2, default=str),
    )


class Fig1Pipeline:
    def __init__(self, config: Fig1Config | None = None) -> None:
        self.config = config or Fig1Config()

    def curves(self, weight: float) -> dict[str, ProfileSpec]:
        omega_g = self.config.omega_g
        omega_l = weight * omega_g
        return {
            "voigt": ClassicVoigtSpec(omega_g=omega_g, omega_l=omega_l),
            # cf exp(-tau k^2) is the Gaussian of width 2 sqrt(tau)
            "gauss": StableParams(alpha=2.0, tau=omega_g**2 / 4.0),
            "lorentz": StableParams(alpha=1.0, tau=omega_l),
        }

    def run(self) -> FigureStats:
        cfg = self.config
        ensure_dir(cfg.output_dir)
        stats = FigureStats(output_dir=cfg.output_dir)

        for i, weight in enumerate(cfg.weights):
            print(f"[{i + 1}/{len(cfg.weights)}] a = {weight:g}")
            for kind, spec in self.curves(weight).items():
                grid, stride = certified_grid(spec, cfg.spacing, tol=cfg.tol)
                samples = profile_on_grid(spec, grid, method="fft", tol=cfg.tol)
                name = f"{kind}_a{weight:g}"
                assert_profile(samples, label=name)

                index = window_indices(samples.x, cfg.display_extent, stride)
                path = write_profile_csv(samples, cfg.output_dir / f"{name}.csv", index=index)
                stats.files.append(path)
                stats.peaks[name] = samples.peak()
                logger.debug("%s: n=%d, stride=%d", name, len(grid), stride)

        _write_manifest(cfg.output_dir, "fig1", asdict(cfg), stats.files)
        return stats


class Fig2Pipeline:
    def __init__(self, config: Fig2Config | None = None) -> None:
        self.config = config or Fig2Config()

    def run(self) -> FigureStats:
        cfg = self.config
        settings = get_settings()
        ensure_dir(cfg.output_dir)
        stats = FigureStats(output_dir=cfg.output_dir)

        for i, (alpha1, alpha2) in enumerate(cfg.pairs):
            print(f"[{i + 1}/{len(cfg.pairs)}] (alpha1, alpha2) = ({alpha1:g}, {alpha2:g})")
            previous_peak = float("inf")
            for tau in sorted(cfg.taus):
                grid = auto_grid(alpha1, alpha2, tau)
                solution = solve_exact_spectral(EvolutionProblem(alpha1, alpha2, tau, grid))
                name = f"voigt_{alpha1:g}_{alpha2:g}_tau{tau:g}"
                assert_profile(solution, label=name)

                edge = max(abs(solution.values[0]), abs(solution.values[-1]))
                if edge >= settings.boundary_tol:
                    raise ProfileInvariantError(f"{name}: boundary value {edge:.3g} not negligible")
                peak = solution.peak()
                if not peak < previous_peak:
                    raise ProfileInvariantError(
                        f"{name}: peak {peak:.6g} did not decrease with tau"
                    )
                previous_peak = peak

                header = {
                    "alpha1": alpha1,
                    "alpha2": alpha2,
                    "tau": tau,
                    "extent": f"{grid.extent:.17g}",
                    "n": grid.n,
                }
                index = window_indices(solution.x, cfg.display_extent)
                path = write_profile_csv(
                    solution, cfg.output_dir / f"{name}.csv", header=header, index=index
                )
                stats.files.append(path)
                stats.peaks[name] = peak

        _write_manifest(cfg.output_dir, "fig2", asdict(cfg), stats.files)
        return stats
