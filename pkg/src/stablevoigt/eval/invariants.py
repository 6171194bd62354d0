from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from stablevoigt.core.errors import ProfileInvariantError
from stablevoigt.core.models import ProfileSamples


@dataclass
class InvariantTolerances:
    symmetry: float = 1e-10
    positivity: float = -1e-10
    mass: float = 1e-4
    # allowed rise when walking away from the peak
    monotone: float = 1e-10


@dataclass
class ProfileReport:
    symmetry_error: float = 0.0
    min_value: float = 0.0
    mass: float = 0.0
    # probability beyond the grid ends, when the sampler reported it
    outside_mass: float = 0.0
    max_rise: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def symmetry_error(values: np.ndarray) -> float:
    return float(np.max(np.abs(values - values[::-1])))


def max_rise_from_peak(values: np.ndarray) -> float:
    """Largest increase met when walking outward from the central sample."""
    center = len(values) // 2
    right = np.diff(values[center:])
    left = np.diff(values[: center + 1][::-1])
    rises = np.concatenate([right, left, [0.0]])
    return float(np.max(rises))


def check_profile(
    samples: ProfileSamples,
    tolerances: InvariantTolerances | None = None,
    *,
    check_mass: bool = True,
    check_unimodal: bool = True,
) -> ProfileReport:
    """Symmetry, positivity, normalization and unimodality of a sampled profile."""
    tol = tolerances or InvariantTolerances()
    values = samples.values
    scale = max(float(np.max(np.abs(values))), 1.0)

    report = ProfileReport(
        symmetry_error=symmetry_error(values),
        min_value=float(np.min(values)),
        mass=samples.mass(),
        outside_mass=samples.meta.get("outside_mass", 0.0),
        max_rise=max_rise_from_peak(values),
    )
    if report.symmetry_error > tol.symmetry * scale:
        report.failures.append(f"asymmetric by {report.symmetry_error:.3g}")
    if report.min_value < tol.positivity:
        report.failures.append(f"negative value {report.min_value:.3g}")
    total = report.mass + report.outside_mass
    if check_mass and abs(total - 1.0) > tol.mass:
        report.failures.append(f"mass {total:.8g} differs from 1 by more than {tol.mass:g}")
    if check_unimodal and report.max_rise > tol.monotone * scale:
        report.failures.append(f"not unimodal, rises by {report.max_rise:.3g} away from the peak")
    return report


def assert_profile(
    samples: ProfileSamples,
    tolerances: InvariantTolerances | None = None,
    *,
    label: str = "profile",
    check_mass: bool = True,
    check_unimodal: bool = True,
) -> ProfileReport:
    report = check_profile(
        samples, tolerances, check_mass=check_mass, check_unimodal=check_unimodal
    )
    if not report.ok:
        raise ProfileInvariantError(f"{label}: " + "; ".join(report.failures))
    return report
