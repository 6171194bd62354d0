from __future__ import annotations

from stablevoigt.profiles.stable import (
    gaussian_pdf,
    lorentzian_pdf,
    stable_pdf,
    stable_pdf_rescale,
)
from stablevoigt.profiles.voigt import (
    classic_voigt_pdf,
    density,
    generalized_voigt_convolution_oracle,
    generalized_voigt_pdf,
    profile_on_grid,
)

__all__ = [
    "gaussian_pdf",
    "lorentzian_pdf",
    "stable_pdf",
    "stable_pdf_rescale",
    "classic_voigt_pdf",
    "density",
    "generalized_voigt_convolution_oracle",
    "generalized_voigt_pdf",
    "profile_on_grid",
]
