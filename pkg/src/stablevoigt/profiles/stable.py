from __future__ import annotations

import logging
import math

import numpy as np

from stablevoigt.core.config import get_settings
from stablevoigt.core.models import StableParams
from stablevoigt.numerics.fourier import cosine_inversion
from stablevoigt.numerics.symbol import LevySymbol

logger = logging.getLogger(__name__)


def gaussian_pdf(x: np.ndarray | float, omega_g: float) -> np.ndarray:
    """Gaussian profile of width omega_g: exp(-(x/omega_g)^2) / (sqrt(pi) omega_g)."""
    z = np.asarray(x, dtype=float) / omega_g
    return np.exp(-(z**2)) / (math.sqrt(math.pi) * omega_g)


def lorentzian_pdf(x: np.ndarray | float, omega_l: float) -> np.ndarray:
    """Lorentzian profile of width omega_l."""
    x = np.asarray(x, dtype=float)
    return omega_l / (math.pi * (x**2 + omega_l**2))


def stable_cf(params: StableParams, kappa: float) -> float:
    return math.exp(-(abs(kappa) ** params.alpha) * params.tau)


def closed_form_kind(alpha: float, eps: float | None = None) -> int | None:
    """2 or 1 when alpha is within `eps` of a closed-form exponent."""
    eps = get_settings().closed_form_eps if eps is None else eps
    if abs(alpha - 2.0) <= eps:
        return 2
    if abs(alpha - 1.0) <= eps:
        return 1
    return None


def closed_form_pdf(kind: int, tau: float, x: np.ndarray | float) -> np.ndarray:
    # cf exp(-tau k^2) is G with omega_g = 2 sqrt(tau); exp(-tau |k|) is N with omega_l = tau
    if kind == 2:
        return gaussian_pdf(x, 2.0 * math.sqrt(tau))
    return lorentzian_pdf(x, tau)


def stable_pdf(
    params: StableParams,
    x: float,
    *,
    tol: float | None = None,
    closed_form: bool = True,
) -> float:
    """
    Symmetric stable density L_alpha(x, tau).

    Closed forms for alpha in {1, 2} and at x = 0; otherwise the cosine inversion of
    exp(-tau |k|^alpha), or the leading tail term once |x| tau^(-1/alpha)
    exceeds `tail_switch`.
    """
    settings = get_settings()
    tol = settings.pdf_tol if tol is None else tol
    ax = abs(float(x))

    kind = closed_form_kind(params.alpha) if closed_form else None
    if kind is not None:
        return float(closed_form_pdf(kind, params.tau, ax))

    symbol = LevySymbol.from_stable(params)
    origin = symbol.origin_density()
    if ax == 0.0 and origin is not None:
        return origin
    if params.alpha < 2.0 and ax / params.scale > settings.tail_switch:
        return float(symbol.leading_tail(ax))
    if params.alpha == 2.0 and ax / params.scale > settings.tail_switch:
        return 0.0

    value, err = cosine_inversion(symbol, ax, tol, settings.cf_cutoff)
    logger.debug("L_%g(%g, tau=%g) = %.17g +- %.2g", params.alpha, ax, params.tau, value, err)
    # negative values are round-off below the certified tolerance
    return max(value, 0.0)


def stable_pdf_rescale(params: StableParams, x: float, *, tol: float | None = None) -> float:
    """tau^(-1/alpha) L_alpha(x tau^(-1/alpha), 1): the scaling-property path."""
    s = params.scale
    unit = StableParams(alpha=params.alpha, tau=1.0)
    return stable_pdf(unit, float(x) / s, tol=tol) / s
