"""Exception hierarchy shared by the whole package.

Each error class carries the exit code used by the CLI front end, so the
service layer can map exceptions to HTTP payloads uniformly.
"""


class PcsError(Exception):
    exit_code = 1


class SchemaError(PcsError):
    """Malformed input document (unknown fields, bad references, duplicates)."""

    exit_code = 2


class ValidationError(PcsError):
    """Structurally well-formed input that violates a model invariant."""

    exit_code = 3

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CoherenceError(ValidationError):
    """Commutation coherence violated, either by an action table or a valuation."""


class NonProbabilisticError(PcsError):
    """A valuation failed the per-state normalization test."""

    exit_code = 4

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsafeNetError(PcsError):
    """A reachable marking of a Petri net would put two tokens on one place."""

    exit_code = 5

    def __init__(self, message, marking=None, transition=None):
        super().__init__(message)
        self.marking = marking
        self.transition = transition


class NotADivisorError(PcsError):
    """Left cancellation requested for a non-divisor."""


class AlgebraError(PcsError):
    """Misuse of a numeric routine (zero polynomial, wrong kernel dimension...)."""
