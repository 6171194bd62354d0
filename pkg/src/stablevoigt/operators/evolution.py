"""
Space-fractional diffusion of double order, dV/dtau = D^a1 V + D^a2 V.

The equation is diagonal in Fourier space, so both solvers use the exact
propagator exp(-(|k|^a1 + |k|^a2) dtau); the delta initial condition enters as
the constant spectrum 1 and is never placed on the grid.
"""

from __future__ import annotations

import logging
import math
from dataclasses import replace

import numpy as np

from stablevoigt.core.config import get_settings
from stablevoigt.core.errors import GridTooCoarseError, InsufficientDecayError
from stablevoigt.core.models import EvolutionProblem, Grid1D, ProfileSamples, RieszOrder, VoigtSpec
from stablevoigt.numerics.fourier import (
    apply_multiplier,
    dft_inversion,
    inversion_bound,
    periodized_edge_bound,
    wavenumbers,
)
from stablevoigt.numerics.symbol import LevySymbol
from stablevoigt.operators.riesz import riesz_apply_spectral

logger = logging.getLogger(__name__)

# extent doublings before giving up on the boundary certificate
_MAX_DOUBLINGS = 40


def auto_spacing(alpha1: float, alpha2: float, tau_end: float) -> float:
    """Spacing that resolves the characteristic function at `tau_end` down to exp(-cf_cutoff)."""
    settings = get_settings()
    spec = VoigtSpec(alpha1, alpha2, tau_end)
    spacing = math.pi / LevySymbol.from_voigt(spec).cutoff(settings.cf_cutoff)
    if tau_end <= settings.small_tau:
        narrow = tau_end ** (1.0 / spec.alpha2) / 10.0
        spacing = min(spacing, narrow)
        logger.warning(
            "tau=%g is in the small-scale regime; the profile is close to a delta, "
            "spacing reduced to %.3g",
            tau_end,
            spacing,
        )
    return spacing


def auto_grid(
    alpha1: float,
    alpha2: float,
    tau_end: float,
    *,
    min_n: int | None = None,
    boundary_tol: float | None = None,
) -> Grid1D:
    """
    Grid on which the solution at `tau_end` is resolved and negligible at the ends.

    The spacing comes from `auto_spacing`. The extent starts at
    `grid_extent_factor` times the wider component width and doubles until the
    periodized tail envelope at the grid end, which is what the discrete
    transform returns there, drops below `boundary_tol`.
    """
    settings = get_settings()
    boundary_tol = settings.boundary_tol if boundary_tol is None else boundary_tol
    min_n = settings.grid_n if min_n is None else min_n
    symbol = LevySymbol.from_voigt(VoigtSpec(alpha1, alpha2, tau_end))
    spacing = auto_spacing(alpha1, alpha2, tau_end)

    extent = settings.grid_extent_factor * max(tau_end ** (1.0 / a) for a in (alpha1, alpha2))
    for _ in range(_MAX_DOUBLINGS):
        half = max(math.ceil(extent / spacing), min_n // 2)
        grid = Grid1D.from_spacing(spacing, half)
        edge = periodized_edge_bound(symbol, grid)
        if edge < boundary_tol:
            break
        extent *= 2.0
    else:
        raise GridTooCoarseError(
            f"no extent up to {extent:.3g} reaches boundary value {boundary_tol:g}"
        )

    logger.debug(
        "auto grid for (%g, %g, tau=%g): extent=%.4g, n=%d, edge bound %.3g",
        alpha1,
        alpha2,
        tau_end,
        grid.extent,
        grid.n,
        edge,
    )
    return grid


def _check_small_tau(problem: EvolutionProblem) -> None:
    settings = get_settings()
    if problem.tau_end > settings.small_tau:
        return
    tau = problem.tau_end
    needed = tau ** (1.0 / problem.spec.alpha2) / 10.0
    logger.warning("tau=%g is in the small-scale regime; the profile is close to a delta", tau)
    if problem.grid.spacing > needed:
        raise GridTooCoarseError(
            f"grid spacing {problem.grid.spacing:.3g} exceeds {needed:.3g} required at tau={tau:g}"
        )


def _check_initial(initial: ProfileSamples) -> None:
    # transform samples are already one period; pointwise samples must have decayed
    if initial.method == "fft":
        return
    threshold = get_settings().boundary_tol
    edge = max(abs(float(initial.values[0])), abs(float(initial.values[-1])))
    if edge > threshold:
        raise InsufficientDecayError(
            f"initial data is {edge:.3g} at the grid ends, above {threshold:.3g}"
        )


def _certify_delta(problem: EvolutionProblem, symbol: LevySymbol) -> float:
    """Aliasing + truncation bound of the solution from delta data, checked against profile_tol."""
    tol = get_settings().profile_tol
    bound = inversion_bound(symbol, problem.grid)
    if bound > tol:
        raise GridTooCoarseError(
            f"discrete inversion bound {bound:.3g} exceeds {tol:.3g} at tau={problem.tau_end:g} "
            f"(extent={problem.grid.extent:g}, n={len(problem.grid)})"
        )
    return bound


def solve_exact_spectral(problem: EvolutionProblem) -> ProfileSamples:
    """One-shot solution V^(k, tau) = V^(k, 0) exp(-(|k|^a1 + |k|^a2) tau) on the grid."""
    _check_small_tau(problem)
    symbol = LevySymbol.from_voigt(problem.spec)

    if problem.initial is None:
        tolerance = _certify_delta(problem, symbol)
        values = dft_inversion(symbol.cf(wavenumbers(problem.grid)), problem.grid)
    else:
        _check_initial(problem.initial)
        values = apply_multiplier(problem.initial.values, symbol.cf(wavenumbers(problem.grid)))
        tolerance = problem.initial.tolerance

    return ProfileSamples(
        grid=problem.grid,
        values=values,
        tolerance=tolerance,
        method="fft",
        meta={"alpha1": problem.alpha1, "alpha2": problem.alpha2, "tau": problem.tau_end},
    )


def solve_stepping(problem: EvolutionProblem) -> ProfileSamples:
    """
    March to `tau_end` in `n_steps` equal steps of the exact one-step propagator.

    Unconditionally stable; with one step it reproduces `solve_exact_spectral`.
    """
    _check_small_tau(problem)
    dtau = problem.tau_end / problem.n_steps
    step = LevySymbol.from_voigt(problem.spec.with_tau(dtau))
    propagator = step.cf(wavenumbers(problem.grid))

    if problem.initial is None:
        tolerance = _certify_delta(problem, LevySymbol.from_voigt(problem.spec))
        # the first step starts from the constant spectrum of the delta
        values = dft_inversion(propagator, problem.grid)
        remaining = problem.n_steps - 1
    else:
        _check_initial(problem.initial)
        values = problem.initial.values
        remaining = problem.n_steps
        tolerance = problem.initial.tolerance

    for _ in range(remaining):
        values = apply_multiplier(values, propagator)

    logger.debug("stepped to tau=%g in %d steps of %g", problem.tau_end, problem.n_steps, dtau)
    return ProfileSamples(
        grid=problem.grid,
        values=values,
        tolerance=tolerance,
        method="fft",
        meta={"alpha1": problem.alpha1, "alpha2": problem.alpha2, "tau": problem.tau_end},
    )


def residual_check(
    problem: EvolutionProblem,
    solution_at_tau: ProfileSamples,
    tau: float,
    *,
    decay_threshold: float | None = None,
) -> float:
    """
    sup |dV/dtau - D^a1 V - D^a2 V| at scale-factor `tau`.

    dV/dtau is a centered difference of exact solutions at tau +- h with
    h = fd_tau_step * tau; the operators act on `solution_at_tau`.
    """
    settings = get_settings()
    threshold = settings.boundary_tol if decay_threshold is None else decay_threshold
    h = settings.fd_tau_step * tau

    ahead = solve_exact_spectral(replace(problem, tau_end=tau + h))
    behind = solve_exact_spectral(replace(problem, tau_end=tau - h))
    rate = (ahead.values - behind.values) / (2.0 * h)

    first, second = (
        riesz_apply_spectral(RieszOrder(a), solution_at_tau, decay_threshold=threshold)
        for a in (problem.alpha1, problem.alpha2)
    )

    residual = float(np.max(np.abs(rate - first.values - second.values)))
    logger.debug("residual at tau=%g: %.3g", tau, residual)
    return residual
