from __future__ import annotations

from stablevoigt.core.config import Settings, get_settings
from stablevoigt.core.models import (
    ClassicVoigtSpec,
    EvolutionProblem,
    Grid1D,
    MomentQuery,
    MomentResult,
    ProfileSamples,
    RieszOrder,
    StableParams,
    VoigtSpec,
)

__all__ = [
    "Settings",
    "get_settings",
    "ClassicVoigtSpec",
    "EvolutionProblem",
    "Grid1D",
    "MomentQuery",
    "MomentResult",
    "ProfileSamples",
    "RieszOrder",
    "StableParams",
    "VoigtSpec",
]
