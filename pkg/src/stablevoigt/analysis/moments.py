"""
Fractional absolute moments <|x|^q> of generalized Voigt profiles.

Quadrature of 2 int_0^inf x^q V(x, tau) dx is the reference path. The two
Mellin-derived power series in tau cover the small and large scale-factor
limits, and a characteristic-function integral gives an independent check.
"""

from __future__ import annotations

import logging
import math
import sys

import numpy as np

from stablevoigt.core.config import get_settings
from stablevoigt.core.errors import (
    GammaPoleError,
    InvalidParameterError,
    QuadratureError,
    SeriesDivergenceError,
)
from stablevoigt.core.models import MomentMethod, MomentQuery, MomentResult, VoigtSpec
from stablevoigt.numerics.fourier import quad_checked
from stablevoigt.numerics.special import gamma, gamma_sign, is_nonpositive_integer, log_abs_gamma
from stablevoigt.numerics.symbol import LevySymbol
from stablevoigt.profiles.voigt import symbol_pdf

logger = logging.getLogger(__name__)

_EPS = sys.float_info.epsilon
# tail expansion parameter c |x|^(-alpha) at the quadrature cut
_TAIL_RATIO = 0.02
_TAIL_ORDER = 8
_INNER_PDF_TOL = 1e-12


def _cut_point(symbol: LevySymbol) -> float:
    """Abscissa beyond which the tail series of a unit-width symbol is accurate."""
    cuts = []
    for a, c in zip(symbol.alphas, symbol.coeffs):
        if a < 2.0:
            cuts.append((c / _TAIL_RATIO) ** (1.0 / a))
        else:
            cuts.append(16.0 * math.sqrt(c))
    return max(cuts)


def moment_quadrature(query: MomentQuery, *, rel_tol: float | None = None) -> MomentResult:
    """
    <|x|^q> = 2 int_0^X x^q V dx + analytic tail beyond X.

    The profile is first rescaled to unit width so that the cut X and the
    log-spaced panel edges do not depend on tau.
    """
    rel_tol = get_settings().moment_rel_tol if rel_tol is None else rel_tol
    q = query.q
    symbol = LevySymbol.from_voigt(query.spec)
    s = symbol.width
    unit = symbol.rescaled(s)

    cut = _cut_point(unit)
    edges = [0.0]
    if cut > 1e-2:
        edges.extend(np.geomspace(1e-2, cut, max(2, math.ceil(math.log10(cut / 1e-2)) * 3 + 1)))
    else:
        edges.append(cut)
    panel_tol = rel_tol / len(edges)

    def integrand(y: float) -> float:
        return y**q * symbol_pdf(unit, y, _INNER_PDF_TOL)

    what = f"moment quadrature (q={q:g}, tau={query.spec.tau:g})"
    body = 0.0
    error = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, err = quad_checked(
            integrand, lo, hi, tol=panel_tol, what=what, epsrel=1e-10, limit=200
        )
        body += value
        error += err

    tail, last = unit.tail_moment(cut, q, order=_TAIL_ORDER)
    unit_moment = 2.0 * (body + tail)
    error = 2.0 * (error + last)
    if error > rel_tol * abs(unit_moment):
        relative = error / abs(unit_moment)
        raise QuadratureError(f"{what}: relative error {relative:.3g} above {rel_tol:g}")

    logger.debug("%s: %d panels, cut=%.4g, tail=%.3g", what, len(edges) - 1, cut, tail)
    return MomentResult(
        value=unit_moment * s**q,
        method="quadrature",
        terms_used=len(edges) - 1,
        error_estimate=error * s**q,
        tau=query.spec.tau,
        q=q,
    )


def _degenerate(query: MomentQuery, method: MomentMethod) -> MomentResult:
    # a1 = a2: one stable law with tau doubled, only the n = 0 term survives
    spec = query.spec
    a, q = spec.alpha1, query.q
    tau = 2.0 * spec.tau
    arg = -q / a
    value = (
        -2.0
        * tau ** (q / a)
        / (a * math.pi)
        * gamma(q + 1.0)
        * math.sin(q * math.pi / 2.0)
        * gamma(arg)
    )
    return MomentResult(
        value=value,
        method=method,
        terms_used=1,
        error_estimate=abs(value) * 8.0 * _EPS,
        tau=spec.tau,
        q=q,
    )


def _power_series(
    query: MomentQuery,
    lead: float,
    other: float,
    log_ratio: float,
    tol: float,
    method: MomentMethod,
) -> MomentResult:
    """
    -(2 tau^(q/lead) / (lead pi)) Gamma(q+1) sin(q pi/2) S, with

        S = sum_n (-1)^n / n! Gamma((other n - q) / lead) r^n

    and log r = `log_ratio`. Terms are formed in log space.
    """
    settings = get_settings()
    q, tau = query.q, query.spec.tau
    prefactor = (
        -2.0 * tau ** (q / lead) / (lead * math.pi) * gamma(q + 1.0) * math.sin(q * math.pi / 2.0)
    )

    total = 0.0
    largest = 0.0
    previous = math.inf
    growing = 0
    for n in range(settings.series_max_terms):
        arg = (other * n - q) / lead
        if is_nonpositive_integer(arg):
            raise GammaPoleError(
                f"term n={n} hits the Gamma pole at {arg:.12g}; use quadrature for this query"
            )
        magnitude = math.exp(log_abs_gamma(arg) - math.lgamma(n + 1.0) + n * log_ratio)
        term = (-1.0) ** n * gamma_sign(arg) * magnitude
        total += term
        largest = max(largest, magnitude)

        if n > 0 and magnitude < tol * abs(total):
            if largest * _EPS * (n + 1) > tol * abs(total):
                raise SeriesDivergenceError(
                    f"{method}: cancellation among terms up to {largest:.3g} leaves no digits "
                    f"at tolerance {tol:g} (tau={tau:g})"
                )
            value = prefactor * total
            logger.debug("%s converged after %d terms at tau=%g", method, n + 1, tau)
            return MomentResult(
                value=value,
                method=method,
                terms_used=n + 1,
                error_estimate=abs(prefactor) * (magnitude + largest * _EPS * (n + 1)),
                tau=tau,
                q=q,
            )

        growing = growing + 1 if magnitude > previous else 0
        if growing >= settings.series_growth_limit:
            raise SeriesDivergenceError(
                f"{method}: terms grew {growing} times in a row by n={n} at tau={tau:g}; "
                "tau is outside this branch"
            )
        previous = magnitude

    raise SeriesDivergenceError(f"{method}: no convergence in {settings.series_max_terms} terms")


def moment_series_large_tau(query: MomentQuery, tol: float | None = None) -> MomentResult:
    """Power series in tau^-(a2/a1 - 1), accurate as tau grows."""
    tol = get_settings().series_tol if tol is None else tol
    spec = query.spec
    if spec.is_degenerate:
        return _degenerate(query, "series_large_tau")
    a1, a2 = spec.alpha1, spec.alpha2
    log_ratio = -(a2 / a1 - 1.0) * math.log(spec.tau)
    return _power_series(query, a1, a2, log_ratio, tol, "series_large_tau")


def moment_series_small_tau(query: MomentQuery, tol: float | None = None) -> MomentResult:
    """Power series in tau^(1 - a1/a2), accurate as tau shrinks."""
    tol = get_settings().series_tol if tol is None else tol
    spec = query.spec
    if spec.is_degenerate:
        return _degenerate(query, "series_small_tau")
    a1, a2 = spec.alpha1, spec.alpha2
    log_ratio = (1.0 - a1 / a2) * math.log(spec.tau)
    return _power_series(query, a2, a1, log_ratio, tol, "series_small_tau")


def moment_characteristic(query: MomentQuery, *, tol: float = 1e-10) -> MomentResult:
    """<|x|^q> = (2/pi) Gamma(q+1) sin(q pi/2) int_0^inf (1 - exp(-psi)) k^(-q-1) dk."""
    q = query.q
    symbol = LevySymbol.from_voigt(query.spec)
    s = symbol.width
    unit = symbol.rescaled(s)
    what = f"characteristic moment (q={q:g})"

    def head(k: float) -> float:
        return -math.expm1(-float(unit(k))) * k ** (-q - 1.0)

    def damped(k: float) -> float:
        return unit.cf_scalar(k) * k ** (-q - 1.0)

    near, err_near = quad_checked(head, 0.0, 1.0, tol=tol, what=what, limit=200)
    # on [1, inf) the 1 integrates to 1/q
    far, err_far = quad_checked(damped, 1.0, np.inf, tol=tol, what=what, limit=200)
    factor = 2.0 / math.pi * gamma(q + 1.0) * math.sin(q * math.pi / 2.0)
    value = factor * (near + 1.0 / q - far) * s**q
    return MomentResult(
        value=value,
        method="characteristic",
        terms_used=2,
        error_estimate=factor * (err_near + err_far) * s**q,
        tau=query.spec.tau,
        q=q,
    )


def select_branch(query: MomentQuery) -> MomentMethod:
    """Series branch when its expansion parameter is below `series_switch`, else quadrature."""
    spec = query.spec
    switch = get_settings().series_switch
    if spec.is_degenerate:
        return "series_large_tau"
    a1, a2, tau = spec.alpha1, spec.alpha2, spec.tau
    if tau ** (1.0 - a1 / a2) < switch:
        return "series_small_tau"
    if tau ** (-(a2 / a1 - 1.0)) < switch:
        return "series_large_tau"
    return "quadrature"


def moment(query: MomentQuery, method: MomentMethod | None = None) -> MomentResult:
    """<|x|^q> by the requested method, or by branch selection with quadrature fallback."""
    if method == "quadrature":
        return moment_quadrature(query)
    if method == "series_large_tau":
        return moment_series_large_tau(query)
    if method == "series_small_tau":
        return moment_series_small_tau(query)
    if method == "characteristic":
        return moment_characteristic(query)

    branch = select_branch(query)
    if branch == "quadrature":
        return moment_quadrature(query)
    try:
        if branch == "series_small_tau":
            return moment_series_small_tau(query)
        return moment_series_large_tau(query)
    except (SeriesDivergenceError, GammaPoleError) as e:
        logger.info("%s unusable at tau=%g (%s), using quadrature", branch, query.spec.tau, e)
        return moment_quadrature(query)


def fit_scaling_exponent(
    alpha1: float,
    alpha2: float,
    q: float,
    tau_range: tuple[float, float],
    n_points: int = 7,
) -> float:
    """
    Least-squares slope of log <|x|^q>^(1/q) against log tau.

    Moments come from quadrature at `n_points` log-spaced scale-factors,
    evaluated in order.
    """
    lo, hi = tau_range
    if n_points < 5:
        raise InvalidParameterError(f"n_points must be >= 5, got {n_points}")
    if not 0.0 < lo < hi or math.log10(hi / lo) < 2.0 - 1e-9:
        raise InvalidParameterError(f"tau range {tau_range} must span at least two decades")

    taus = np.geomspace(lo, hi, n_points)
    spec = VoigtSpec(alpha1, alpha2)
    roots = np.array(
        [
            moment_quadrature(MomentQuery(spec.with_tau(float(t)), q)).value ** (1.0 / q)
            for t in taus
        ]
    )
    slope = float(np.polyfit(np.log(taus), np.log(roots), 1)[0])
    logger.debug("scaling fit (%g, %g), q=%g on [%g, %g]: %.6f", alpha1, alpha2, q, lo, hi, slope)
    return slope
