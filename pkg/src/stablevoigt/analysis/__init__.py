from __future__ import annotations

from stablevoigt.analysis.moments import (
    fit_scaling_exponent,
    moment,
    moment_characteristic,
    moment_quadrature,
    moment_series_large_tau,
    moment_series_small_tau,
)

__all__ = [
    "fit_scaling_exponent",
    "moment",
    "moment_characteristic",
    "moment_quadrature",
    "moment_series_large_tau",
    "moment_series_small_tau",
]
