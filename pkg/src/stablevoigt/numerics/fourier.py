"""
Fourier inversion of symmetric characteristic functions.

Pointwise values come from the cosine integral (1/pi) int_0^inf cf(k) cos(kx) dk
under QUADPACK's oscillatory rules; whole grids come from one discrete
transform whose output is the periodized density.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from typing import Any

import numpy as np
from scipy import fft, integrate, special

from stablevoigt.core.errors import QuadratureError
from stablevoigt.core.models import Grid1D
from stablevoigt.numerics.symbol import LevySymbol

logger = logging.getLogger(__name__)

# above this many radians over [0, cutoff] the infinite-range Fourier rule is used
_FINITE_PHASE_LIMIT = 2000.0 * math.pi


def quad_checked(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    tol: float,
    what: str,
    **kwargs: Any,
) -> tuple[float, float]:
    """scipy quad that raises QuadratureError when the error bound exceeds `tol`."""
    out = integrate.quad(f, a, b, full_output=1, epsabs=tol, **kwargs)
    value, abserr = float(out[0]), float(out[1])
    if len(out) > 3 and abserr > tol:
        raise QuadratureError(f"{what}: {out[3]!s} (error {abserr:.3g} > {tol:.3g})")
    if not math.isfinite(value) or abserr > 10.0 * tol:
        raise QuadratureError(f"{what}: error bound {abserr:.3g} exceeds {tol:.3g}")
    return value, abserr


def cosine_inversion(
    symbol: LevySymbol,
    x: float,
    tol: float,
    cutoff: float = -math.log(1e-16),
) -> tuple[float, float]:
    """Density at x and its error bound, from (1/pi) int_0^inf exp(-psi) cos(kx) dk."""
    x = abs(float(x))
    k_max = symbol.cutoff(cutoff)
    eps = 0.1 * math.pi * tol
    what = f"cosine inversion at x={x:g}"

    if x == 0.0:
        value, err = quad_checked(
            symbol.cf_scalar, 0.0, k_max, tol=eps, what=what, epsrel=1e-12, limit=200
        )
    elif x * k_max <= _FINITE_PHASE_LIMIT:
        value, err = quad_checked(
            symbol.cf_scalar,
            0.0,
            k_max,
            tol=eps,
            what=what,
            epsrel=1e-12,
            limit=1000,
            weight="cos",
            wvar=x,
            maxp1=100,
        )
    else:
        # QAWF: cycle-by-cycle panels between zeros of cos(kx) with extrapolation
        value, err = quad_checked(
            symbol.cf_scalar,
            0.0,
            np.inf,
            tol=eps,
            what=what,
            limit=1000,
            limlst=200,
            weight="cos",
            wvar=x,
        )
    return value / math.pi, err / math.pi


def central_mass(symbol: LevySymbol, half_width: float, tol: float = 1e-10) -> float:
    """P(|X| <= half_width) = (2/pi) int_0^inf cf(k) sin(k X)/k dk."""
    width = float(half_width)
    if width <= 0.0:
        return 0.0
    k_max = symbol.cutoff(-math.log(1e-16))
    split = min(k_max, math.pi / width)

    def near(k: float) -> float:
        return symbol.cf_scalar(k) * width * float(np.sinc(k * width / math.pi))

    head, _ = quad_checked(near, 0.0, split, tol=tol, what="central mass", epsrel=1e-12)
    tail = 0.0
    if split < k_max:
        tail, _ = quad_checked(
            lambda k: symbol.cf_scalar(k) / k,
            split,
            np.inf,
            tol=tol,
            what="central mass",
            limit=1000,
            limlst=200,
            weight="sin",
            wvar=width,
        )
    return 2.0 / math.pi * (head + tail)


def wavenumbers(grid: Grid1D) -> np.ndarray:
    """Angular wavenumbers in transform order for the grid's periodic cell."""
    return 2.0 * math.pi * fft.fftfreq(len(grid), d=grid.spacing)


def dft_inversion(spectrum: np.ndarray, grid: Grid1D) -> np.ndarray:
    """Samples of the (periodized) density whose characteristic function is `spectrum`."""
    k = wavenumbers(grid)
    x0 = float(grid.points[0])
    shifted = spectrum * np.exp(-1j * k * x0)
    values = fft.fft(shifted).real / (len(grid) * grid.spacing)
    # the grid is symmetric, so is the exact answer; the unpaired Nyquist mode is not
    return 0.5 * (values + values[::-1])


def apply_multiplier(values: np.ndarray, multiplier: np.ndarray) -> np.ndarray:
    """Translation-invariant operator with the given Fourier multiplier on periodic samples."""
    return fft.ifft(multiplier * fft.fft(values)).real


def truncation_bound(symbol: LevySymbol, k_max: float) -> float:
    """Bound on (1/pi) int_{k_max}^inf exp(-psi) dk, the mass lost above Nyquist."""
    bounds = []
    for a, c in zip(symbol.alphas, symbol.coeffs):
        shape = 1.0 / a
        tail = special.gammaincc(shape, c * k_max**a) * special.gamma(shape)
        bounds.append(tail * c ** (-shape) / (a * math.pi))
    return float(min(bounds))


def alias_bound(symbol: LevySymbol, grid: Grid1D, images: int = 2000) -> float:
    """Worst-case pointwise contribution of periodic images of the density."""
    m = np.arange(images) + 0.5
    return float(2.0 * np.sum(symbol.tail_envelope(m * grid.period)))


def periodized_edge_bound(symbol: LevySymbol, grid: Grid1D, images: int = 2000) -> float:
    """Bound on the periodized density at the grid end, the value the DFT actually returns there."""
    m = np.arange(-images, images + 1)
    return float(np.sum(symbol.tail_envelope(np.abs(grid.extent + m * grid.period))))


def inversion_bound(symbol: LevySymbol, grid: Grid1D) -> float:
    nyquist = math.pi / grid.spacing
    bound = alias_bound(symbol, grid) + truncation_bound(symbol, nyquist)
    logger.debug("discrete inversion bound %.3g on n=%d, extent=%g", bound, len(grid), grid.extent)
    return bound
