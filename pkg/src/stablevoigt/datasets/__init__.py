from __future__ import annotations

from stablevoigt.datasets.export import write_moments_csv, write_profile_csv
from stablevoigt.datasets.figures import Fig1Config, Fig1Pipeline, Fig2Config, Fig2Pipeline

__all__ = [
    "write_moments_csv",
    "write_profile_csv",
    "Fig1Config",
    "Fig1Pipeline",
    "Fig2Config",
    "Fig2Pipeline",
]
