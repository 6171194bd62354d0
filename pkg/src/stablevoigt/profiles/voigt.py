from __future__ import annotations

import logging
import math
from typing import Literal

import numpy as np

from stablevoigt.core.config import get_settings
from stablevoigt.core.errors import GridTooCoarseError, InvalidParameterError
from stablevoigt.core.models import (
    ClassicVoigtSpec,
    Grid1D,
    ProfileSamples,
    StableParams,
    VoigtSpec,
)
from stablevoigt.numerics.fourier import (
    alias_bound,
    central_mass,
    cosine_inversion,
    dft_inversion,
    inversion_bound,
    quad_checked,
    truncation_bound,
    wavenumbers,
)
from stablevoigt.numerics.symbol import LevySymbol
from stablevoigt.profiles.stable import closed_form_kind, closed_form_pdf, stable_pdf

logger = logging.getLogger(__name__)

ProfileSpec = VoigtSpec | ClassicVoigtSpec | StableParams
GridMethod = Literal["auto", "fft", "pointwise"]


def to_symbol(spec: ProfileSpec) -> LevySymbol:
    if isinstance(spec, VoigtSpec):
        return LevySymbol.from_voigt(spec)
    if isinstance(spec, ClassicVoigtSpec):
        return LevySymbol.from_classic(spec)
    if isinstance(spec, StableParams):
        return LevySymbol.from_stable(spec)
    raise InvalidParameterError(f"unsupported profile spec {type(spec).__name__}")


def symbol_pdf(symbol: LevySymbol, x: float, tol: float | None = None) -> float:
    """Density of a Lévy symbol at x: closed form, far-tail series or cosine inversion."""
    settings = get_settings()
    tol = settings.pdf_tol if tol is None else tol
    ax = abs(float(x))

    if len(symbol.alphas) == 1:
        kind = closed_form_kind(symbol.alphas[0])
        if kind is not None:
            return float(closed_form_pdf(kind, symbol.coeffs[0], ax))
        origin = symbol.origin_density()
        if ax == 0.0 and origin is not None:
            return origin

    if not symbol.is_gaussian and ax / symbol.width > settings.tail_switch:
        return float(symbol.tail_density(ax))

    value, _ = cosine_inversion(symbol, ax, tol, settings.cf_cutoff)
    return max(value, 0.0)


def classic_voigt_pdf(spec: ClassicVoigtSpec, x: float, *, tol: float | None = None) -> float:
    """Ordinary Voigt profile, (1/pi) int_0^inf exp(-omega_l k - omega_g^2 k^2/4) cos(kx) dk."""
    return symbol_pdf(LevySymbol.from_classic(spec), x, tol)


def generalized_voigt_pdf(spec: VoigtSpec, x: float, *, tol: float | None = None) -> float:
    """Generalized Voigt profile by inversion of exp(-(|k|^a1 + |k|^a2) tau)."""
    return symbol_pdf(LevySymbol.from_voigt(spec), x, tol)


def generalized_voigt_convolution_oracle(
    spec: VoigtSpec,
    x: float,
    *,
    tol: float = 1e-9,
) -> float:
    """Convolution of L_a1(., tau) and L_a2(., tau) by adaptive quadrature over the real line."""
    first = StableParams(spec.alpha1, spec.tau)
    second = StableParams(spec.alpha2, spec.tau)
    x = float(x)

    def integrand(xi: float) -> float:
        return stable_pdf(first, x - xi) * stable_pdf(second, xi)

    width = max(first.scale, second.scale)
    lo = min(0.0, x) - 10.0 * width
    hi = max(0.0, x) + 10.0 * width
    what = f"convolution oracle at x={x:g}"
    inner_points = sorted({0.0, x})

    left, _ = quad_checked(integrand, -np.inf, lo, tol=tol / 3, what=what, limit=500)
    middle, _ = quad_checked(
        integrand, lo, hi, tol=tol / 3, what=what, limit=500, epsrel=1e-12, points=inner_points
    )
    right, _ = quad_checked(integrand, hi, np.inf, tol=tol / 3, what=what, limit=500)
    return left + middle + right


def density(spec: ProfileSpec, x: float, tol: float | None = None) -> float:
    return symbol_pdf(to_symbol(spec), x, tol)


def profile_on_grid(
    spec: ProfileSpec,
    grid: Grid1D,
    *,
    method: GridMethod = "auto",
    tol: float | None = None,
) -> ProfileSamples:
    """
    Sample a profile on a symmetric uniform grid.

    The discrete-Fourier path is taken when its aliasing + truncation bound is
    below `tol`; `auto` otherwise falls back to pointwise inversion, which
    records the probability beyond the grid ends as `outside_mass`.
    """
    settings = get_settings()
    tol = settings.profile_tol if tol is None else tol
    symbol = to_symbol(spec)

    if len(grid) > 1 and method in ("auto", "fft"):
        bound = inversion_bound(symbol, grid)
        if bound <= tol:
            values = dft_inversion(symbol.cf(wavenumbers(grid)), grid)
            return ProfileSamples(grid=grid, values=values, tolerance=bound, method="fft")
        if method == "fft":
            raise GridTooCoarseError(
                f"discrete inversion bound {bound:.3g} exceeds tolerance {tol:.3g} "
                f"(extent={grid.extent:g}, n={len(grid)})"
            )
        logger.info("grid bound %.3g > %.3g, sampling pointwise", bound, tol)

    ax = np.abs(grid.points)
    unique, inverse = np.unique(ax, return_inverse=True)
    pdf_tol = settings.pdf_tol
    values = np.array([symbol_pdf(symbol, float(u), pdf_tol) for u in unique])[inverse]
    meta: dict[str, float] = {}
    if len(grid) > 1:
        meta["outside_mass"] = 1.0 - central_mass(symbol, grid.extent)
    return ProfileSamples(
        grid=grid, values=values, tolerance=pdf_tol, method="pointwise", meta=meta
    )


def certified_grid(
    spec: ProfileSpec,
    spacing: float,
    *,
    tol: float | None = None,
    max_stride: int = 64,
) -> tuple[Grid1D, int]:
    """
    Grid on which the discrete-Fourier samples of `spec` are certified to `tol`.

    The grid refines `spacing` by a power-of-two stride until truncation is
    negligible and widens until aliasing is; every `stride`-th point from the
    center then lies on a multiple of `spacing`.
    """
    tol = get_settings().profile_tol if tol is None else tol
    symbol = to_symbol(spec)

    stride = 1
    while truncation_bound(symbol, math.pi * stride / spacing) > tol / 2.0:
        stride *= 2
        if stride > max_stride:
            raise GridTooCoarseError(
                f"spacing {spacing:g} needs more than {max_stride}x refinement"
            )
    fine = spacing / stride

    half = max(1, math.ceil(10.0 * symbol.width / spacing))
    while alias_bound(symbol, Grid1D.from_spacing(fine, half * stride)) > tol / 2.0:
        half *= 2
    grid = Grid1D.from_spacing(fine, half * stride)
    logger.debug("certified grid: spacing=%g, stride=%d, n=%d", fine, stride, grid.n)
    return grid, stride
