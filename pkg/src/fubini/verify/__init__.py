"""Statement registry and checking engine."""

from fubini.verify.registry import (
    CONGRUENCE,
    IDENTITY,
    REGISTRY,
    Rejected,
    UnknownCheck,
    congruence_ids,
    identity_ids,
    lookup,
)
from fubini.verify.sweep import (
    DEFAULT_EXPECTED_FAIL,
    DEFAULT_PRIMES,
    SweepPlan,
    SweepResult,
    check_congruence,
    check_identity,
    grid,
    run_check,
    sweep,
)

__all__ = [
    "CONGRUENCE",
    "DEFAULT_EXPECTED_FAIL",
    "DEFAULT_PRIMES",
    "IDENTITY",
    "REGISTRY",
    "Rejected",
    "SweepPlan",
    "SweepResult",
    "UnknownCheck",
    "check_congruence",
    "check_identity",
    "congruence_ids",
    "grid",
    "identity_ids",
    "lookup",
    "run_check",
    "sweep",
]
