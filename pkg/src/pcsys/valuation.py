"""Valuations on concurrent systems and their Mobius transforms.

A valuation assigns a nonnegative weight to each (state, letter) pair with
the letter enabled; the chain rule extends it to all executions.  Weights
may be Fractions (everything downstream stays exact) or floats.  The
commutation-coherence constraint making the extension well defined is
validated at build time.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import CoherenceError, NonProbabilisticError, ValidationError
from .monoid import Clique
from .policy import DEFAULT_POLICY, NumericPolicy
from .system import BOTTOM, ConcurrentSystem
from .traces import Trace


class Valuation:
    def __init__(
        self,
        system: ConcurrentSystem,
        letter_weights: Mapping[tuple[str, str], object],
        policy: NumericPolicy = DEFAULT_POLICY,
    ):
        self.system = system
        self.policy = policy
        weights = {}
        for (alpha, a), w in letter_weights.items():
            if alpha not in system.states or a not in system.monoid.index:
                raise ValidationError(f"weight for unknown pair ({alpha},{a})")
            if w < 0:
                raise ValidationError(f"negative weight for ({alpha},{a})")
            if (alpha, a) not in system.action:
                if not policy.is_zero(w, policy.prob_tol):
                    raise ValidationError(
                        f"nonzero weight on disabled letter {a!r} at state {alpha!r}"
                    )
                continue
            weights[(alpha, a)] = w
        self.weights = weights
        self._check_coherence()
        self._mobius: dict[str, dict[Clique, object]] = {}

    def weight(self, alpha: str, a: str):
        return self.weights.get((alpha, a), 0)

    def _check_coherence(self) -> None:
        pol = self.policy
        for alpha in self.system.states:
            for a, b in self.system.monoid.independence:
                if self.system.act_word(alpha, (a, b)) is BOTTOM:
                    continue
                ab = self.weight(alpha, a) * self.weight(self.system.action[(alpha, a)], b)
                ba = self.weight(alpha, b) * self.weight(self.system.action[(alpha, b)], a)
                if not pol.is_zero(ab - ba, pol.coherence_tol):
                    raise CoherenceError(
                        f"valuation is not commutation coherent at {alpha!r} "
                        f"for letters {a!r}, {b!r}",
                        witness=(alpha, a, b),
                    )

    # -- evaluation --------------------------------------------------------

    def evaluate(self, alpha: str, x: Trace):
        """Chain-rule product along any representative word; 0 past the sink."""
        acc = 1
        for a in x.word():
            if (alpha, a) not in self.system.action:
                return 0
            acc = acc * self.weight(alpha, a)
            alpha = self.system.action[(alpha, a)]
        return acc

    def cylinder_probability(self, alpha: str, x: Trace):
        self.require_probabilistic()
        return self.evaluate(alpha, x)

    # -- Mobius transform per state ---------------------------------------

    def mobius_at(self, alpha: str) -> dict[Clique, object]:
        """h_alpha over the full clique set, with the valuation extended by
        zero on cliques that hit the sink."""
        if alpha not in self._mobius:
            f = {c: self.evaluate(alpha, Trace((c,)) if c else Trace(())) for c in self.system.monoid.cliques}
            self._mobius[alpha] = self.system.monoid.mobius_transform(f)
        return self._mobius[alpha]

    # -- the probabilistic test -------------------------------------------

    def probabilistic_witness(self):
        """None when probabilistic; otherwise (state, clique or None, value)
        for the first failing normalization or sign condition."""
        pol = self.policy
        for alpha in self.system.states:
            h = self.mobius_at(alpha)
            if not pol.is_zero(h[()], pol.prob_tol):
                return (alpha, None, h[()])
            for c in self.system.enabled_nonempty[alpha]:
                v = h[c]
                if v < 0 and not pol.is_zero(v, pol.prob_tol):
                    return (alpha, c, v)
        return None

    def is_probabilistic(self) -> bool:
        return self.probabilistic_witness() is None

    def require_probabilistic(self) -> None:
        w = self.probabilistic_witness()
        if w is not None:
            alpha, c, v = w
            where = "normalization" if c is None else f"sign at clique {c}"
            raise NonProbabilisticError(
                f"valuation fails the {where} condition at state {alpha!r} (value {v})",
                witness=w,
            )

    def first_clique_distribution(self, alpha: str) -> dict[Clique, object]:
        """Law of the first normal-form layer under the induced measure."""
        self.require_probabilistic()
        h = self.mobius_at(alpha)
        return {c: h[c] for c in self.system.enabled_nonempty[alpha]}

    def to_json(self) -> dict:
        entries = []
        for alpha in self.system.states:
            for a in self.system.enabled_letters[alpha]:
                w = self.weight(alpha, a)
                value = str(w) if isinstance(w, Fraction) else repr(float(w))
                entries.append({"state": alpha, "letter": a, "value": value})
        return {"weights": entries}


def build_valuation(
    system: ConcurrentSystem,
    letter_weights: Mapping[tuple[str, str], object],
    policy: NumericPolicy = DEFAULT_POLICY,
) -> Valuation:
    return Valuation(system, letter_weights, policy)


def dominant_weights(system: ConcurrentSystem) -> dict[tuple[str, str], int]:
    """Weight 1 on every enabled (state, letter) pair."""
    return {key: 1 for key in system.action}
