from __future__ import annotations

from stablevoigt.operators.evolution import (
    auto_grid,
    auto_spacing,
    residual_check,
    solve_exact_spectral,
    solve_stepping,
)
from stablevoigt.operators.riesz import riesz_apply_integral, riesz_apply_spectral

__all__ = [
    "auto_grid",
    "auto_spacing",
    "residual_check",
    "solve_exact_spectral",
    "solve_stepping",
    "riesz_apply_integral",
    "riesz_apply_spectral",
]
