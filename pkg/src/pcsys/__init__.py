"""Probabilistic concurrent systems under trace-monoid semantics.

Core objects: trace monoids and their clique combinatorics, traces in
normal form, concurrent systems with partial state actions, valuations and
the uniform measure, the Markov chain of states-and-cliques, and the
deterministic-system toolkit.
"""

from .errors import (
    CoherenceError,
    NonProbabilisticError,
    NotADivisorError,
    PcsError,
    SchemaError,
    UnsafeNetError,
    ValidationError,
)
from .monoid import TraceMonoid, build_monoid
from .policy import DEFAULT_POLICY, NumericPolicy
from .system import ConcurrentSystem, build_system
from .traces import Lasso, Trace, concat, divides, join, left_cancel, meet, normalize
from .valuation import Valuation, build_valuation

__version__ = "0.1.0"

__all__ = [
    "CoherenceError",
    "ConcurrentSystem",
    "DEFAULT_POLICY",
    "Lasso",
    "NonProbabilisticError",
    "NotADivisorError",
    "NumericPolicy",
    "PcsError",
    "SchemaError",
    "Trace",
    "TraceMonoid",
    "UnsafeNetError",
    "ValidationError",
    "Valuation",
    "build_monoid",
    "build_system",
    "build_valuation",
    "concat",
    "divides",
    "join",
    "left_cancel",
    "meet",
    "normalize",
]
