from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

from stablevoigt.core.errors import (
    CertificationError,
    DivergentMomentError,
    InvalidParameterError,
)


def _check_alpha(name: str, value: float) -> None:
    if not math.isfinite(value) or not 0.0 < value <= 2.0:
        raise InvalidParameterError(f"{name} must lie in (0, 2], got {value}")


def _check_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise InvalidParameterError(f"{name} must be positive and finite, got {value}")


@dataclass(frozen=True)
class StableParams:
    alpha: float
    tau: float = 1.0

    def __post_init__(self) -> None:
        _check_alpha("alpha", self.alpha)
        _check_positive("tau", self.tau)

    @property
    def scale(self) -> float:
        """Width tau^(1/alpha) of the density."""
        return self.tau ** (1.0 / self.alpha)


@dataclass(frozen=True)
class VoigtSpec:
    """Generalized Voigt profile; alpha1 <= alpha2 after construction."""

    alpha1: float
    alpha2: float
    tau: float = 1.0

    def __post_init__(self) -> None:
        _check_alpha("alpha1", self.alpha1)
        _check_alpha("alpha2", self.alpha2)
        _check_positive("tau", self.tau)
        if self.alpha1 > self.alpha2:
            a1, a2 = self.alpha2, self.alpha1
            object.__setattr__(self, "alpha1", a1)
            object.__setattr__(self, "alpha2", a2)

    @property
    def is_degenerate(self) -> bool:
        return self.alpha1 == self.alpha2

    def with_tau(self, tau: float) -> VoigtSpec:
        return replace(self, tau=tau)


@dataclass(frozen=True)
class ClassicVoigtSpec:
    omega_g: float
    omega_l: float

    def __post_init__(self) -> None:
        _check_positive("omega_g", self.omega_g)
        _check_positive("omega_l", self.omega_l)

    @property
    def weight(self) -> float:
        """Weight-parameter a = omega_l / omega_g."""
        return self.omega_l / self.omega_g


@dataclass(frozen=True)
class RieszOrder:
    alpha: float

    def __post_init__(self) -> None:
        _check_alpha("alpha", self.alpha)


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid symmetric about zero, endpoints at +-extent."""

    extent: float
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f"grid needs at least one point, got n={self.n}")
        if self.n == 1:
            if self.extent != 0.0:
                raise InvalidParameterError("a one-point grid must have zero extent")
            return
        _check_positive("extent", self.extent)

    @classmethod
    def single(cls) -> Grid1D:
        return cls(extent=0.0, n=1)

    @classmethod
    def from_spacing(cls, spacing: float, half_count: int) -> Grid1D:
        """Grid of 2*half_count + 1 points with the given spacing; contains x = 0."""
        _check_positive("spacing", spacing)
        if half_count < 1:
            raise InvalidParameterError(f"half_count must be >= 1, got {half_count}")
        return cls(extent=half_count * spacing, n=2 * half_count + 1)

    @property
    def spacing(self) -> float:
        if self.n == 1:
            return 0.0
        return 2.0 * self.extent / (self.n - 1)

    @property
    def period(self) -> float:
        """Length of the periodic cell seen by a discrete Fourier transform."""
        return self.n * self.spacing

    @property
    def points(self) -> np.ndarray:
        if self.n == 1:
            return np.zeros(1)
        # half-integer offsets keep the grid exactly antisymmetric
        return (np.arange(self.n) - (self.n - 1) / 2.0) * self.spacing

    def __len__(self) -> int:
        return self.n


@dataclass
class ProfileSamples:
    grid: Grid1D
    values: np.ndarray
    tolerance: float = 0.0
    method: str = "pointwise"
    meta: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (len(self.grid),):
            raise InvalidParameterError(
                f"expected {len(self.grid)} values, got shape {self.values.shape}"
            )
        if self.tolerance < 0.0:
            raise InvalidParameterError("tolerance must be non-negative")

    @property
    def x(self) -> np.ndarray:
        return self.grid.points

    def mass(self) -> float:
        """Trapezoidal integral over the grid."""
        if len(self.grid) == 1:
            return 0.0
        return float(np.trapezoid(self.values, dx=self.grid.spacing))

    def peak(self) -> float:
        return float(self.values[len(self.grid) // 2])


@dataclass(frozen=True)
class EvolutionProblem:
    """Double-order space-fractional diffusion problem; `initial=None` is the delta at 0."""

    alpha1: float
    alpha2: float
    tau_end: float
    grid: Grid1D
    initial: ProfileSamples | None = None
    n_steps: int = 1

    def __post_init__(self) -> None:
        _check_alpha("alpha1", self.alpha1)
        _check_alpha("alpha2", self.alpha2)
        _check_positive("tau_end", self.tau_end)
        if self.n_steps < 1:
            raise InvalidParameterError(f"n_steps must be >= 1, got {self.n_steps}")
        if len(self.grid) < 2:
            raise InvalidParameterError("evolution needs a grid of at least two points")
        if self.initial is not None and self.initial.grid != self.grid:
            raise InvalidParameterError("initial samples must live on the problem grid")

    @property
    def spec(self) -> VoigtSpec:
        return VoigtSpec(self.alpha1, self.alpha2, self.tau_end)


MomentMethod = Literal["quadrature", "series_large_tau", "series_small_tau", "characteristic"]


@dataclass(frozen=True)
class MomentQuery:
    spec: VoigtSpec
    q: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.q) or self.q <= 0.0:
            raise InvalidParameterError(f"moment order q must be positive, got {self.q}")
        bound = min(self.spec.alpha1, self.spec.alpha2)
        if self.q >= bound:
            raise DivergentMomentError(
                f"<|x|^q> diverges for q={self.q} >= min(alpha1, alpha2)={bound}"
            )


@dataclass
class MomentResult:
    value: float
    method: MomentMethod
    terms_used: int = 0
    error_estimate: float = 0.0
    tau: float = 0.0
    q: float = 0.0

    def __post_init__(self) -> None:
        if not self.value > 0.0:
            raise CertificationError(f"moment must be positive, got {self.value}")
        if self.error_estimate < 0.0:
            raise CertificationError("error estimate must be non-negative")
