from __future__ import annotations

from stablevoigt.eval.invariants import (
    InvariantTolerances,
    ProfileReport,
    assert_profile,
    check_profile,
)

__all__ = ["InvariantTolerances", "ProfileReport", "assert_profile", "check_profile"]
