from __future__ import annotations

from stablevoigt.numerics.fourier import cosine_inversion, dft_inversion, inversion_bound
from stablevoigt.numerics.special import gamma, log_abs_gamma
from stablevoigt.numerics.symbol import LevySymbol, TailTerm

__all__ = [
    "cosine_inversion",
    "dft_inversion",
    "inversion_bound",
    "gamma",
    "log_abs_gamma",
    "LevySymbol",
    "TailTerm",
]
