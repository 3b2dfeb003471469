"""Theorem oracles and the exhaustive/random verification suite."""

from __future__ import annotations

from .suite import (
    ASSERTED,
    THEOREM_IDS,
    Counterexample,
    EngineMismatch,
    VerifyOutcome,
    run_suite,
    search_theorem4_converse,
)
from .theorems import (
    CHECKS,
    CONFIRMED,
    SKIPPED,
    VIOLATED,
    HandshakeError,
    Verdict,
    assert_handshake,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_theorem4_converse,
    check_theorem4_forward,
    check_theorem5,
)

__all__ = [
    "ASSERTED",
    "THEOREM_IDS",
    "CHECKS",
    "CONFIRMED",
    "SKIPPED",
    "VIOLATED",
    "Counterexample",
    "EngineMismatch",
    "HandshakeError",
    "Verdict",
    "VerifyOutcome",
    "assert_handshake",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "check_theorem4_converse",
    "check_theorem4_forward",
    "check_theorem5",
    "run_suite",
    "search_theorem4_converse",
]
