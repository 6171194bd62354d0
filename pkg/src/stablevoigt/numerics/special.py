"""
Gamma function by the Lanczos approximation (g=7, n=9) with the reflection
formula for arguments below 1/2.

The log-space variant keeps series terms such as Gamma(40.5)/n! finite.
"""

from __future__ import annotations

import math

from stablevoigt.core.errors import GammaPoleError

_G = 7.0
_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def is_nonpositive_integer(x: float, eps: float = 1e-12) -> bool:
    return x <= eps and abs(x - round(x)) <= eps


def _lanczos_series(z: float) -> float:
    acc = _COEFFS[0]
    for i, c in enumerate(_COEFFS[1:], start=1):
        acc += c / (z + i)
    return acc


def log_abs_gamma(x: float) -> float:
    """log|Gamma(x)| for real x that is not a pole."""
    if is_nonpositive_integer(x, eps=0.0):
        raise GammaPoleError(f"Gamma has a pole at {x}")
    if x < 0.5:
        s = math.sin(math.pi * x)
        return math.log(math.pi / abs(s)) - log_abs_gamma(1.0 - x)
    z = x - 1.0
    t = z + _G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_series(z))


def gamma_sign(x: float) -> float:
    if x > 0.0:
        return 1.0
    if is_nonpositive_integer(x, eps=0.0):
        raise GammaPoleError(f"Gamma has a pole at {x}")
    # Gamma alternates sign between consecutive negative integers
    return -1.0 if math.floor(x) % 2 else 1.0


def gamma(x: float) -> float:
    if is_nonpositive_integer(x, eps=0.0):
        raise GammaPoleError(f"Gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    if x > 171.6:
        return math.inf
    if x > 20.0:
        return math.exp(log_abs_gamma(x))
    z = x - 1.0
    t = z + _G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * _lanczos_series(z)
