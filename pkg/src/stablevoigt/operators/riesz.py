"""
Riesz space-fractional derivative D^alpha, the operator with Fourier symbol -|k|^alpha.

Two independent realizations are kept so they can check each other: the
spectral one acts on grid samples, the real-space one evaluates the singular
integral at a single point of a callable.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable

import numpy as np

from stablevoigt.core.config import get_settings
from stablevoigt.core.errors import InsufficientDecayError, SingularityError
from stablevoigt.core.models import Grid1D, ProfileSamples, RieszOrder
from stablevoigt.numerics.fourier import apply_multiplier, quad_checked, wavenumbers
from stablevoigt.numerics.special import gamma

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]

# half-width of the window around the singular point of the principal value
_PV_WINDOW = 10.0

# largest zero-padded transform the spectral derivative will attempt
_MAX_PADDED = 2**24


def riesz_symbol(order: RieszOrder, kappa: np.ndarray | float) -> np.ndarray:
    return -(np.abs(np.asarray(kappa, dtype=float)) ** order.alpha)


def riesz_constant(alpha: float) -> float:
    """Gamma(1+alpha) sin(alpha pi/2) / pi, the weight of the second-difference kernel."""
    return gamma(1.0 + alpha) * math.sin(alpha * math.pi / 2.0) / math.pi


def spectral_image_bound(
    alpha: float, mass: float, extent: float, period: float, images: int = 1000
) -> float:
    """
    Bound on what periodic images of D^alpha f add inside [-extent, extent].

    f is supported on [-extent, extent]. Away from the support D^alpha f falls
    off as C mass |x|^(-1-alpha), so even a fast-decaying f has images that the
    transform folds back in. Distances run to the near edge of each image.
    """
    scale = riesz_constant(alpha)
    if scale == 0.0 or mass == 0.0:
        return 0.0
    m = np.arange(1, images + 1)
    gap = m * period - 2.0 * extent
    near = float(np.sum(gap ** (-1.0 - alpha)))
    far = ((images + 0.5) * period - 2.0 * extent) ** (-alpha) / (alpha * period)
    return 2.0 * scale * mass * (near + far)


def riesz_apply_spectral(
    order: RieszOrder,
    samples: ProfileSamples,
    *,
    decay_threshold: float | None = None,
    tol: float | None = None,
) -> ProfileSamples:
    """
    D^alpha of grid samples: transform, multiply by -|k|^alpha, transform back.

    The function must already be negligible at both grid ends. Samples from a
    discrete inversion (method "fft") are one period of a periodic function and
    are differentiated as such. Anything else is zero-padded until the periodic
    images of the result stay below `tol` on the original grid; that bound is
    added to the returned tolerance.
    """
    settings = get_settings()
    threshold = settings.decay_threshold if decay_threshold is None else decay_threshold
    tol = settings.riesz_tol if tol is None else tol
    grid = samples.grid
    if len(grid) < 2:
        raise InsufficientDecayError("spectral Riesz derivative needs at least two samples")

    edge = max(abs(float(samples.values[0])), abs(float(samples.values[-1])))
    if edge > threshold:
        raise InsufficientDecayError(
            f"boundary value {edge:.3g} exceeds decay threshold {threshold:.3g}; "
            "widen the grid"
        )

    n, h = len(grid), grid.spacing
    pad, bound = 0, 0.0
    if samples.method != "fft":
        mass = float(np.sum(np.abs(samples.values))) * h
        bound = spectral_image_bound(order.alpha, mass, grid.extent, n * h)
        while bound > tol:
            pad = max(2 * pad, n)
            if n + 2 * pad > _MAX_PADDED:
                raise InsufficientDecayError(
                    f"images of D^{order.alpha:g} f stay at {bound:.3g} after padding "
                    f"to {n + 2 * pad} points"
                )
            bound = spectral_image_bound(order.alpha, mass, grid.extent, (n + 2 * pad) * h)
        if pad:
            logger.debug("zero-padded %d samples by %d per side, image bound %.3g", n, pad, bound)

    padded = Grid1D(extent=grid.extent + pad * h, n=n + 2 * pad)
    result = apply_multiplier(np.pad(samples.values, pad), riesz_symbol(order, wavenumbers(padded)))
    return ProfileSamples(
        grid=grid,
        values=result[pad : pad + n],
        tolerance=samples.tolerance + bound,
        method="spectral",
        meta={"alpha": order.alpha},
    )


def _second_difference(f: RealFunction, x: float, xi: float) -> float:
    return f(x + xi) - 2.0 * f(x) + f(x - xi)


def _second_derivative(f: RealFunction, x: float, h: float) -> float:
    """Central second difference with one Richardson step."""
    coarse = _second_difference(f, x, h) / h**2
    fine = _second_difference(f, x, h / 2.0) / (h / 2.0) ** 2
    return (4.0 * fine - coarse) / 3.0


def _first_derivative(g: RealFunction, x: float, h: float) -> float:
    coarse = (g(x + h) - g(x - h)) / (2.0 * h)
    fine = (g(x + h / 2.0) - g(x - h / 2.0)) / h
    return (4.0 * fine - coarse) / 3.0


def _singular_integral(alpha: float, f: RealFunction, x: float, tol: float) -> float:
    """C int_0^inf [f(x+xi) - 2f(x) + f(x-xi)] xi^(-1-alpha) dxi for alpha != 1."""
    settings = get_settings()
    delta = settings.riesz_split
    scale = riesz_constant(alpha)
    piece_tol = tol / (4.0 * max(scale, 1e-300))

    # [0, delta]: the second difference is f''(x) xi^2 + O(xi^4)
    f2 = _second_derivative(f, x, settings.riesz_fd_step)
    at_split = _second_difference(f, x, delta)
    taylor = f2 * delta**2
    if not (math.isfinite(f2) and math.isfinite(at_split)):
        raise SingularityError(f"non-finite second difference near xi=0 at x={x:g}")
    # bound on what the dropped quartic remainder adds over [0, delta]
    remainder = abs(at_split - taylor) * delta ** (-alpha) / (4.0 - alpha)
    if remainder > piece_tol:
        raise SingularityError(
            f"Taylor treatment of [0, {delta:g}] at x={x:g} is off by {remainder:.3g}; "
            "f is not smooth on that scale"
        )
    near = f2 * delta ** (2.0 - alpha) / (2.0 - alpha)

    what = f"Riesz singular integral (alpha={alpha:g}, x={x:g})"

    def kernel(xi: float) -> float:
        return _second_difference(f, x, xi) * xi ** (-1.0 - alpha)

    middle, _ = quad_checked(kernel, delta, 1.0, tol=piece_tol, what=what, limit=500)

    # beyond xi=1 the -2f(x) part integrates to -2f(x)/alpha
    def outer(xi: float) -> float:
        return (f(x + xi) + f(x - xi)) * xi ** (-1.0 - alpha)

    reach = 2.0 + 2.0 * abs(x)
    bounded, _ = quad_checked(
        outer, 1.0, reach, tol=piece_tol, what=what, limit=500, points=[1.0 + abs(x)]
    )
    far, _ = quad_checked(outer, reach, np.inf, tol=piece_tol, what=what, limit=500)
    tail = bounded + far - 2.0 * f(x) / alpha

    return scale * (near + middle + tail)


def hilbert_integral(f: RealFunction, y: float, tol: float) -> float:
    """Principal value int f(xi) / (y - xi) dxi over the real line."""
    what = f"principal value at y={y:g}"
    lo, hi = y - _PV_WINDOW, y + _PV_WINDOW
    fy = f(y)

    # f(y) / (y - xi) integrates to zero over a window centred on y
    def subtracted(xi: float) -> float:
        return (f(xi) - fy) / (y - xi)

    window, _ = quad_checked(
        subtracted, lo, hi, tol=tol / 3.0, what=what, epsrel=1e-12, limit=500, points=[y]
    )

    def regular(xi: float) -> float:
        return f(xi) / (y - xi)

    left, _ = quad_checked(regular, -np.inf, lo, tol=tol / 3.0, what=what, limit=500)
    right, _ = quad_checked(regular, hi, np.inf, tol=tol / 3.0, what=what, limit=500)
    return window + left + right


def _unit_order(f: RealFunction, x: float, tol: float) -> float:
    """D^1 f = -(1/pi) d/dx PV int f(xi) / (x - xi) dxi."""
    h = get_settings().riesz_fd_step
    # the Richardson quotient amplifies quadrature error by about 3/h
    inner_tol = tol * h / 4.0
    slope = _first_derivative(lambda y: hilbert_integral(f, y, inner_tol), x, h)
    return -slope / math.pi


def riesz_apply_integral(
    order: RieszOrder,
    f: RealFunction,
    x: float,
    *,
    tol: float | None = None,
) -> float:
    """
    D^alpha f(x) from its real-space representation.

    alpha near 1 (within `unity_band`) uses the differentiated Hilbert transform,
    alpha = 2 the ordinary second derivative, anything else the
    second-difference singular integral.
    """
    settings = get_settings()
    tol = settings.riesz_tol if tol is None else tol
    alpha = order.alpha
    x = float(x)

    if alpha == 2.0:
        return _second_derivative(f, x, settings.riesz_fd_step)
    if abs(alpha - 1.0) < settings.unity_band:
        if alpha != 1.0:
            logger.debug("alpha=%r treated as 1, using the Hilbert form", alpha)
        return _unit_order(f, x, tol)
    return _singular_integral(alpha, f, x, tol)
