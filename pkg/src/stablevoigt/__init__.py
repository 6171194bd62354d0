"""stablevoigt: symmetric Lévy stable densities and generalized Voigt profiles."""

from __future__ import annotations

__version__ = "0.1.0"
