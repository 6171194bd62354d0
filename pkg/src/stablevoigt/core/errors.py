from __future__ import annotations


class StableVoigtError(Exception):
    """Base class for all library errors. `exit_code` is what the CLI returns."""

    exit_code: int = 1


class InvalidParameterError(StableVoigtError, ValueError):
    exit_code = 2


class DivergentMomentError(InvalidParameterError):
    """Moment order q is not below min(alpha1, alpha2)."""


class CertificationError(StableVoigtError, ArithmeticError):
    """A numerical result could not be certified to the requested tolerance."""

    exit_code = 3


class QuadratureError(CertificationError):
    pass


class GridTooCoarseError(CertificationError):
    pass


class InsufficientDecayError(CertificationError):
    pass


class SingularityError(CertificationError):
    """Near-origin treatment of the Riesz singular integral failed."""


class SeriesDivergenceError(CertificationError):
    pass


class GammaPoleError(CertificationError):
    pass


class ProfileInvariantError(CertificationError):
    pass


class OutputError(StableVoigtError):
    exit_code = 4
