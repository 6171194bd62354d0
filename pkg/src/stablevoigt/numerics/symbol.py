from __future__ import annotations

import itertools
import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from stablevoigt.core.errors import InvalidParameterError
from stablevoigt.core.models import ClassicVoigtSpec, StableParams, VoigtSpec
from stablevoigt.numerics.special import gamma


@dataclass(frozen=True)
class TailTerm:
    """Coefficient of |x|^(-1-beta) in the large-|x| expansion of a density."""

    beta: float
    coeff: float


@dataclass(frozen=True)
class LevySymbol:
    """
    psi(k) = sum_i c_i |k|^alpha_i, the characteristic function being exp(-psi).

    A single term is a symmetric stable law; two terms describe the generalized
    Voigt profile (c1 = c2 = tau) and the classic profile
    (exponents 1 and 2, coefficients omega_l and omega_g^2 / 4).
    """

    alphas: tuple[float, ...]
    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.alphas or len(self.alphas) != len(self.coeffs):
            raise InvalidParameterError("symbol needs matching non-empty exponents and coeffs")
        for a, c in zip(self.alphas, self.coeffs):
            if not 0.0 < a <= 2.0 or not c > 0.0:
                raise InvalidParameterError(f"invalid symbol term {c}*|k|^{a}")

    @classmethod
    def build(cls, terms: Iterable[tuple[float, float]]) -> LevySymbol:
        merged: dict[float, float] = {}
        for alpha, coeff in terms:
            merged[alpha] = merged.get(alpha, 0.0) + coeff
        alphas = tuple(sorted(merged))
        return cls(alphas=alphas, coeffs=tuple(merged[a] for a in alphas))

    @classmethod
    def from_stable(cls, params: StableParams) -> LevySymbol:
        return cls.build([(params.alpha, params.tau)])

    @classmethod
    def from_voigt(cls, spec: VoigtSpec) -> LevySymbol:
        return cls.build([(spec.alpha1, spec.tau), (spec.alpha2, spec.tau)])

    @classmethod
    def from_classic(cls, spec: ClassicVoigtSpec) -> LevySymbol:
        return cls.build([(1.0, spec.omega_l), (2.0, spec.omega_g**2 / 4.0)])

    def __call__(self, kappa: np.ndarray | float) -> np.ndarray:
        k = np.abs(np.asarray(kappa, dtype=float))
        out = np.zeros_like(k)
        for a, c in zip(self.alphas, self.coeffs):
            out += c * k**a
        return out

    def cf(self, kappa: np.ndarray | float) -> np.ndarray:
        return np.exp(-self(kappa))

    def cf_scalar(self, kappa: float) -> float:
        k = abs(kappa)
        return math.exp(-sum(c * k**a for a, c in zip(self.alphas, self.coeffs)))

    def rescaled(self, s: float) -> LevySymbol:
        """Symbol of X/s when X has this symbol."""
        return LevySymbol(
            alphas=self.alphas,
            coeffs=tuple(c * s ** (-a) for a, c in zip(self.alphas, self.coeffs)),
        )

    @property
    def scales(self) -> tuple[float, ...]:
        return tuple(c ** (1.0 / a) for a, c in zip(self.alphas, self.coeffs))

    @property
    def width(self) -> float:
        return max(self.scales)

    @property
    def is_gaussian(self) -> bool:
        return all(a == 2.0 for a in self.alphas)

    def cutoff(self, threshold: float) -> float:
        """Wavenumber beyond which exp(-psi) < exp(-threshold)."""
        return min((threshold / c) ** (1.0 / a) for a, c in zip(self.alphas, self.coeffs))

    def origin_density(self) -> float | None:
        """p(0) in closed form for a single term, None otherwise."""
        if len(self.alphas) != 1:
            return None
        a, c = self.alphas[0], self.coeffs[0]
        return gamma(1.0 + 1.0 / a) * c ** (-1.0 / a) / math.pi

    def tail_terms(self, order: int = 6) -> list[TailTerm]:
        """
        Non-analytic small-k terms of exp(-psi) mapped to |x|^(-1-beta) tails.

        Integer multi-indices m with 1 <= |m| <= order; beta = sum m_i alpha_i.
        Even-integer beta carries no tail (sin vanishes).
        """
        terms: list[TailTerm] = []
        ranges = [range(order + 1)] * len(self.alphas)
        for m in itertools.product(*ranges):
            total = sum(m)
            if total == 0 or total > order:
                continue
            beta = sum(mi * a for mi, a in zip(m, self.alphas))
            s = math.sin(math.pi * beta / 2.0)
            if abs(s) < 1e-14:
                continue
            weight = (-1.0) ** total
            for mi, c in zip(m, self.coeffs):
                weight *= c**mi / math.factorial(mi)
            terms.append(TailTerm(beta=beta, coeff=-weight * gamma(1.0 + beta) * s / math.pi))
        terms.sort(key=lambda t: t.beta)
        return terms

    def tail_density(self, x: np.ndarray | float, order: int = 6) -> np.ndarray:
        ax = np.abs(np.asarray(x, dtype=float))
        out = np.zeros_like(ax)
        for t in self.tail_terms(order):
            out += t.coeff * ax ** (-1.0 - t.beta)
        return out

    def leading_tail(self, x: np.ndarray | float) -> np.ndarray:
        return self.tail_density(x, order=1)

    def tail_envelope(self, x: np.ndarray | float) -> np.ndarray:
        """Conservative magnitude of the density far from the origin."""
        ax = np.abs(np.asarray(x, dtype=float))
        out = np.zeros_like(ax)
        for t in self.tail_terms(order=2):
            out += 2.0 * abs(t.coeff) * ax ** (-1.0 - t.beta)
        gauss = sum(c for a, c in zip(self.alphas, self.coeffs) if a == 2.0)
        if gauss > 0.0:
            var = 2.0 * gauss
            out += 2.0 * np.exp(-(ax**2) / (2.0 * var)) / math.sqrt(2.0 * math.pi * var)
        return out

    def tail_moment(self, x_start: float, q: float, order: int = 8) -> tuple[float, float]:
        """
        int_{x_start}^inf x^q p(x) dx from the tail expansion.

        Returns (value, magnitude of the last retained term).
        """
        value = 0.0
        last = 0.0
        for t in self.tail_terms(order):
            term = t.coeff * x_start ** (q - t.beta) / (t.beta - q)
            value += term
            last = abs(term)
        return value, last

    def tail_mass(self, x_start: float, order: int = 8) -> float:
        """Probability of |x| > x_start from the tail expansion."""
        value, _ = self.tail_moment(x_start, 0.0, order)
        return 2.0 * value
