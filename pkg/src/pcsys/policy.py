"""Single numeric-policy record shared by all tolerance-sensitive routines."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class NumericPolicy:
    root_width: float = 1e-12       # bisection bracket width for root isolation
    kernel_tol: float = 1e-9        # rank decisions for kernel extraction
    prob_tol: float = 1e-9          # probabilistic-valuation test, null-node test
    coherence_tol: float = 1e-12    # valuation commutation coherence
    spectral_margin: float = 1e-6   # strictness margin for the spectral property

    def is_zero(self, value, tol) -> bool:
        """Exact test for rationals, tolerance test for floats."""
        if isinstance(value, (Fraction, int)):
            return value == 0
        return abs(value) <= tol


DEFAULT_POLICY = NumericPolicy()
