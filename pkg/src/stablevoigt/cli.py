from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, ValidationError, model_validator

from stablevoigt.analysis.moments import fit_scaling_exponent, moment
from stablevoigt.core.config import Settings, get_settings, load_settings_from_yaml, use_settings
from stablevoigt.core.errors import StableVoigtError
from stablevoigt.core.models import (
    ClassicVoigtSpec,
    EvolutionProblem,
    Grid1D,
    MomentMethod,
    MomentQuery,
    VoigtSpec,
)
from stablevoigt.datasets.export import window_indices, write_moments_csv, write_profile_csv
from stablevoigt.datasets.figures import Fig1Config, Fig1Pipeline, Fig2Config, Fig2Pipeline
from stablevoigt.eval.invariants import assert_profile
from stablevoigt.operators.evolution import (
    auto_grid,
    auto_spacing,
    residual_check,
    solve_exact_spectral,
    solve_stepping,
)
from stablevoigt.profiles.voigt import ProfileSpec, certified_grid, profile_on_grid

logger = logging.getLogger(__name__)

Command = Literal["profile", "classic", "evolve", "moments", "scaling", "fig1", "fig2"]


class RunConfig(BaseModel):
    """Validated command parameters; anything out of range exits with code 2."""

    command: Command
    alpha1: float | None = Field(default=None, gt=0.0, le=2.0)
    alpha2: float | None = Field(default=None, gt=0.0, le=2.0)
    tau: float | None = Field(default=None, gt=0.0)
    q: float | None = Field(default=None, gt=0.0)
    omega_g: float | None = Field(default=None, gt=0.0)
    omega_l: float | None = Field(default=None, gt=0.0)
    grid_extent: float | None = Field(default=None, gt=0.0)
    grid_n: int | None = Field(default=None, ge=3)
    tol: float | None = Field(default=None, gt=0.0)
    steps: int = Field(default=1, ge=1)
    out: Path | None = None

    @model_validator(mode="after")
    def _moment_order(self) -> RunConfig:
        if self.q is not None and self.alpha1 is not None and self.alpha2 is not None:
            if self.q >= min(self.alpha1, self.alpha2):
                raise ValueError(f"q={self.q} must be below min(alpha1, alpha2)")
        return self


def _run_config(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.model_fields and v is not None}
    return RunConfig(**fields)


def _display_grid(cfg: RunConfig) -> tuple[float, float]:
    settings = get_settings()
    extent = cfg.grid_extent or settings.display_extent
    n = cfg.grid_n or 1001
    return extent, 2.0 * extent / (n - 1)


def _emit_profile(spec: ProfileSpec, cfg: RunConfig, label: str) -> int:
    extent, spacing = _display_grid(cfg)
    grid, stride = certified_grid(spec, spacing, tol=cfg.tol)
    samples = profile_on_grid(spec, grid, method="fft", tol=cfg.tol)
    report = assert_profile(samples, label=label)
    index = window_indices(samples.x, extent, stride)

    print(f"{label}: peak {samples.peak():.12g}, mass {report.mass:.10f} (n={len(grid)})")
    if cfg.out:
        write_profile_csv(samples, cfg.out, index=index)
        print(f"Output: {cfg.out}")
    else:
        for i in index[:: max(1, len(index) // 10)]:
            print(f"  {samples.x[i]:10.4f}  {samples.values[i]:.12g}")
    return 0


def cmd_profile(cfg: RunConfig) -> int:
    spec = VoigtSpec(cfg.alpha1 or 1.0, cfg.alpha2 or 2.0, cfg.tau or 1.0)
    return _emit_profile(spec, cfg, f"V({spec.alpha1:g}, {spec.alpha2:g}; tau={spec.tau:g})")


def cmd_classic(cfg: RunConfig) -> int:
    spec = ClassicVoigtSpec(omega_g=cfg.omega_g or 2.0, omega_l=cfg.omega_l or 1.0)
    return _emit_profile(spec, cfg, f"Voigt(omega_g={spec.omega_g:g}, omega_l={spec.omega_l:g})")


def _evolve_grid(cfg: RunConfig, alpha1: float, alpha2: float, tau: float) -> Grid1D:
    """User extent and size as given; an extent alone keeps the automatic spacing."""
    if cfg.grid_extent and cfg.grid_n:
        return Grid1D(cfg.grid_extent, cfg.grid_n)
    if cfg.grid_extent:
        spacing = auto_spacing(alpha1, alpha2, tau)
        return Grid1D.from_spacing(spacing, max(1, math.ceil(cfg.grid_extent / spacing)))
    return auto_grid(alpha1, alpha2, tau, min_n=cfg.grid_n)


def cmd_evolve(cfg: RunConfig) -> int:
    settings = get_settings()
    alpha1, alpha2, tau = cfg.alpha1 or 1.0, cfg.alpha2 or 2.0, cfg.tau or 1.0
    grid = _evolve_grid(cfg, alpha1, alpha2, tau)

    problem = EvolutionProblem(alpha1, alpha2, tau, grid, n_steps=cfg.steps)
    solution = solve_stepping(problem) if cfg.steps > 1 else solve_exact_spectral(problem)
    label = f"evolution ({alpha1:g}, {alpha2:g}) to tau={tau:g}"
    report = assert_profile(solution, label=label)
    residual = residual_check(problem, solution, tau)

    print(f"{label}: extent {grid.extent:.6g}, n={grid.n}, steps={cfg.steps}")
    print(f"  peak     {solution.peak():.12g}")
    print(f"  mass     {report.mass:.12f}")
    print(f"  residual {residual:.3g}")
    if cfg.out:
        header = {
            "alpha1": alpha1,
            "alpha2": alpha2,
            "tau": tau,
            "extent": f"{grid.extent:.17g}",
            "n": grid.n,
        }
        index = window_indices(solution.x, settings.display_extent)
        write_profile_csv(solution, cfg.out, header=header, index=index)
        print(f"Output: {cfg.out}")
    return 0


def cmd_moments(cfg: RunConfig, taus: list[float], method: MomentMethod | None) -> int:
    spec = VoigtSpec(cfg.alpha1 or 1.0, cfg.alpha2 or 2.0)
    q = cfg.q or 0.5
    results = [moment(MomentQuery(spec.with_tau(t), q), method) for t in taus]

    print(f"<|x|^{q:g}> for ({spec.alpha1:g}, {spec.alpha2:g})")
    for r in results:
        print(
            f"  tau={r.tau:<10.4g} {r.value:.12g}  "
            f"[{r.method}, terms={r.terms_used}, err={r.error_estimate:.2g}]"
        )
    if cfg.out:
        write_moments_csv(results, cfg.out)
        print(f"Output: {cfg.out}")
    return 0


def cmd_scaling(
    cfg: RunConfig,
    low: tuple[float, float],
    high: tuple[float, float],
    points: int,
) -> int:
    alpha1, alpha2 = cfg.alpha1 or 1.0, cfg.alpha2 or 2.0
    spec = VoigtSpec(alpha1, alpha2)
    q = cfg.q or 0.5
    rows = [
        ("low", low, 1.0 / spec.alpha2),
        ("high", high, 1.0 / spec.alpha1),
    ]
    print(f"Scaling of <|x|^{q:g}>^(1/{q:g}) for ({spec.alpha1:g}, {spec.alpha2:g})")
    for name, tau_range, expected in rows:
        slope = fit_scaling_exponent(spec.alpha1, spec.alpha2, q, tau_range, points)
        deviation = abs(slope - expected) / expected
        print(
            f"  {name:<4} tau in [{tau_range[0]:g}, {tau_range[1]:g}]: "
            f"fitted {slope:.6f}, expected {expected:.6f}, deviation {deviation:.2%}"
        )
    return 0


def cmd_fig1(cfg: RunConfig) -> int:
    out = cfg.out or get_settings().fig1_dir
    config = Fig1Config(output_dir=out, tol=cfg.tol or get_settings().profile_tol)
    print(f"Writing fig1 curves to {out}...")
    stats = Fig1Pipeline(config).run()
    print(f"Done! Wrote {len(stats.files)} curves")
    return 0


def cmd_fig2(cfg: RunConfig) -> int:
    out = cfg.out or get_settings().fig2_dir
    print(f"Writing fig2 curves to {out}...")
    stats = Fig2Pipeline(Fig2Config(output_dir=out)).run()
    print(f"Done! Wrote {len(stats.files)} curves")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", "-c", help="Path to config YAML file")
    common.add_argument("--log-level", default="WARNING", help="Logging level (default: WARNING)")
    common.add_argument("--tol", type=float, help="Absolute tolerance for profile samples")
    common.add_argument("--out", "-o", type=Path, help="Output file or directory")

    shape = argparse.ArgumentParser(add_help=False)
    shape.add_argument("--alpha1", type=float, help="Smaller exponent (default: 1)")
    shape.add_argument("--alpha2", type=float, help="Larger exponent (default: 2)")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--grid-extent", type=float, help="Half width of the output grid")
    grid.add_argument("--grid-n", type=int, help="Number of grid points")

    parser = argparse.ArgumentParser(
        prog="stablevoigt",
        description="Stable densities, generalized Voigt profiles and fractional diffusion",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    profile_parser = subparsers.add_parser(
        "profile", parents=[common, shape, grid], help="Sample a generalized Voigt profile"
    )
    profile_parser.add_argument("--tau", type=float, help="Scale-factor (default: 1)")

    classic_parser = subparsers.add_parser(
        "classic", parents=[common, grid], help="Sample a classic Voigt profile"
    )
    classic_parser.add_argument("--omega-g", type=float, help="Gaussian width (default: 2)")
    classic_parser.add_argument("--omega-l", type=float, help="Lorentzian width (default: 1)")

    evolve_parser = subparsers.add_parser(
        "evolve", parents=[common, shape, grid], help="Solve the double-order diffusion equation"
    )
    evolve_parser.add_argument("--tau", type=float, help="Final scale-factor (default: 1)")
    evolve_parser.add_argument("--steps", type=int, default=1, help="Propagator steps (default: 1)")

    moments_parser = subparsers.add_parser(
        "moments", parents=[common, shape], help="Fractional absolute moments"
    )
    moments_parser.add_argument("--q", type=float, help="Moment order (default: 0.5)")
    moments_parser.add_argument("--tau", type=float, nargs="+", default=[0.01, 1.0, 100.0])
    moments_parser.add_argument(
        "--method",
        choices=["auto", "quadrature", "series_large_tau", "series_small_tau", "characteristic"],
        default="auto",
    )

    scaling_parser = subparsers.add_parser(
        "scaling", parents=[common, shape], help="Fit the small- and large-tau scaling exponents"
    )
    scaling_parser.add_argument("--q", type=float, help="Moment order (default: 0.5)")
    scaling_parser.add_argument("--low", type=float, nargs=2, default=[1e-8, 1e-6])
    scaling_parser.add_argument("--high", type=float, nargs=2, default=[1e2, 1e4])
    scaling_parser.add_argument("--points", type=int, default=7)

    subparsers.add_parser("fig1", parents=[common], help="Write the classic Voigt family datasets")
    subparsers.add_parser(
        "fig2", parents=[common], help="Write the generalized profile datasets from the solver"
    )
    return parser


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "moments":
        taus = args.tau
        args.tau = None
        cfg = _run_config(args)
        method = None if args.method == "auto" else args.method
        return cmd_moments(cfg, [float(t) for t in taus], method)

    cfg = _run_config(args)
    if args.command == "profile":
        return cmd_profile(cfg)
    elif args.command == "classic":
        return cmd_classic(cfg)
    elif args.command == "evolve":
        return cmd_evolve(cfg)
    elif args.command == "scaling":
        return cmd_scaling(cfg, tuple(args.low), tuple(args.high), args.points)
    elif args.command == "fig1":
        return cmd_fig1(cfg)
    elif args.command == "fig2":
        return cmd_fig2(cfg)
    return 0


def _configured_settings(args: argparse.Namespace) -> Settings | None:
    """Settings from --config with the --tol override applied, None when neither is given."""
    settings = load_settings_from_yaml(Path(args.config)) if args.config else None
    if args.tol is not None:
        base = settings or get_settings()
        settings = base.model_copy(update={"profile_tol": args.tol})
    return settings


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )

    restore = False
    previous = None
    try:
        settings = _configured_settings(args)
        if settings is not None:
            previous = use_settings(settings)
            restore = True
        return dispatch(args)
    except ValidationError as e:
        print(f"Error: invalid parameters\n{e}", file=sys.stderr)
        return 2
    except StableVoigtError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    finally:
        if restore:
            use_settings(previous)


if __name__ == "__main__":
    sys.exit(main())
