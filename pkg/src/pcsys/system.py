"""Concurrent systems: a trace monoid acting partially on a finite state set.

The action is a partial map (state, letter) -> state; absence means the sink.
Commutation coherence is validated at build time so the action extends to
traces.  On top of the action the module derives the per-state enabled
alphabets and cliques, the digraph of states-and-cliques, the classification
flags, the Mobius matrix with its characteristic root, and the growth
matrices counting executions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import CoherenceError, SchemaError
from .monoid import Clique, TraceMonoid
from .policy import DEFAULT_POLICY, NumericPolicy
from .polynomials import (
    Polynomial,
    PolyMatrix,
    det,
    matrix_coefficients,
    series_inverse_coeffs,
)
from .roots import RootResult, smallest_positive_root
from .traces import Trace

BOTTOM = None  # the sink state


@dataclass(frozen=True)
class SystemClassification:
    trivial: bool
    homogeneous: bool
    alive: bool
    monoid_irreducible: bool

    @property
    def irreducible(self) -> bool:
        return (
            not self.trivial
            and self.homogeneous
            and self.alive
            and self.monoid_irreducible
        )

    def to_json(self) -> dict:
        return {
            "trivial": self.trivial,
            "homogeneous": self.homogeneous,
            "alive": self.alive,
            "monoid_irreducible": self.monoid_irreducible,
            "irreducible": self.irreducible,
        }


SCNode = tuple[str, Clique]


@dataclass(frozen=True)
class SCDigraph:
    """Digraph of states-and-cliques: nodes (state, nonempty enabled clique),
    edges to (target state, next clique) along normal pairs."""

    nodes: tuple[SCNode, ...]
    edges: tuple[tuple[SCNode, SCNode], ...]

    def successors(self, node: SCNode) -> list[SCNode]:
        return [t for s, t in self.edges if s == node]


class ConcurrentSystem:
    def __init__(
        self,
        monoid: TraceMonoid,
        states: Sequence[str],
        action: Mapping[tuple[str, str], str],
    ):
        states = tuple(states)
        if len(set(states)) != len(states):
            raise SchemaError("duplicate state names")
        for (alpha, a), beta in action.items():
            if alpha not in states or beta not in states:
                raise SchemaError(f"action entry ({alpha},{a})->{beta} names an unknown state")
            if a not in monoid.index:
                raise SchemaError(f"action entry for unknown letter {a!r}")
        self.monoid = monoid
        self.states = states
        self.action = dict(action)
        self._check_coherence()
        # per-state derived data
        self.enabled_letters = {
            alpha: tuple(a for a in monoid.letters if (alpha, a) in self.action)
            for alpha in states
        }
        self.enabled_cliques = {
            alpha: [c for c in monoid.cliques if self.act_clique(alpha, c) is not BOTTOM]
            for alpha in states
        }
        self.enabled_nonempty = {
            alpha: [c for c in self.enabled_cliques[alpha] if c] for alpha in states
        }

    # -- the action --------------------------------------------------------

    def _check_coherence(self) -> None:
        for alpha in self.states:
            for a, b in self.monoid.independence:
                via_ab = self.action.get((self.action.get((alpha, a)), b))
                via_ba = self.action.get((self.action.get((alpha, b)), a))
                if via_ab != via_ba:
                    raise CoherenceError(
                        f"action is not commutation coherent at state {alpha!r} "
                        f"for independent letters {a!r}, {b!r}",
                        witness=(alpha, a, b),
                    )

    def act_word(self, alpha: str | None, word: Iterable[str]) -> str | None:
        for a in word:
            if alpha is BOTTOM:
                return BOTTOM
            alpha = self.action.get((alpha, a))
        return alpha

    def act(self, alpha: str, x: Trace) -> str | None:
        """State reached by executing the trace x, or None for the sink."""
        if alpha not in self.states:
            raise SchemaError(f"unknown state {alpha!r}")
        return self.act_word(alpha, x.word())

    def act_clique(self, alpha: str | None, c: Clique) -> str | None:
        return self.act_word(alpha, c)

    def enabled(self, alpha: str) -> tuple[tuple[str, ...], list[Clique], list[Clique]]:
        """(enabled letters, enabled cliques with the empty one, nonempty ones)."""
        return (
            self.enabled_letters[alpha],
            self.enabled_cliques[alpha],
            self.enabled_nonempty[alpha],
        )

    def cliques_between(self, alpha: str, beta: str) -> list[Clique]:
        return [c for c in self.enabled_cliques[alpha] if self.act_clique(alpha, c) == beta]

    def is_execution(self, alpha: str, x: Trace) -> bool:
        return self.act(alpha, x) is not BOTTOM

    # -- digraph of states-and-cliques ------------------------------------

    def sc_digraph(self) -> SCDigraph:
        nodes = tuple(
            (alpha, c) for alpha in self.states for c in self.enabled_nonempty[alpha]
        )
        edges = []
        for alpha, c in nodes:
            beta = self.act_clique(alpha, c)
            for d in self.enabled_nonempty[beta]:
                if self.monoid.is_normal_pair(c, d):
                    edges.append(((alpha, c), (beta, d)))
        return SCDigraph(nodes, tuple(edges))

    # -- classification ----------------------------------------------------

    def _reachable(self, alpha: str) -> set[str]:
        seen = {alpha}
        stack = [alpha]
        while stack:
            s = stack.pop()
            for a in self.enabled_letters[s]:
                t = self.action[(s, a)]
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    def classify(self) -> SystemClassification:
        trivial = all(not self.enabled_letters[alpha] for alpha in self.states)
        reach = {alpha: self._reachable(alpha) for alpha in self.states}
        homogeneous = all(
            beta in reach[alpha] for alpha in self.states for beta in self.states
        )
        # alive: every letter becomes enabled somewhere reachable from every state
        alive = all(
            any(a in self.enabled_letters[beta] for beta in reach[alpha])
            for alpha in self.states
            for a in self.monoid.letters
        )
        return SystemClassification(
            trivial, homogeneous, alive, self.monoid.is_irreducible
        )

    @property
    def is_irreducible(self) -> bool:
        return self.classify().irreducible

    # -- Mobius matrix, characteristic root, growth ------------------------

    def mobius_matrix(self) -> PolyMatrix:
        """Entry (alpha, beta): alternating clique count over the cliques
        sending alpha to beta."""
        n = len(self.states)
        out = []
        for alpha in self.states:
            row = []
            for beta in self.states:
                coeffs = [0] * (len(self.monoid.letters) + 1)
                for c in self.cliques_between(alpha, beta):
                    coeffs[len(c)] += (-1) ** len(c)
                row.append(Polynomial.of(coeffs))
            out.append(row)
        return out

    def characteristic_polynomial(self) -> Polynomial:
        return det(self.mobius_matrix())

    def characteristic_root(self, policy: NumericPolicy = DEFAULT_POLICY) -> RootResult:
        """Smallest root of det(mu) in (0, 1]; a not-found result means the
        root is infinite (polynomial growth)."""
        return smallest_positive_root(self.characteristic_polynomial(), policy)

    def growth_matrix_counts(self, n: int) -> list[list[list[int]]]:
        """G_0..G_n; entry (alpha, beta) of G_k counts the executions of
        length k from alpha to beta."""
        mats = series_inverse_coeffs(matrix_coefficients(self.mobius_matrix()), n)
        return [[[int(x) for x in row] for row in g] for g in mats]

    def count_executions(self, alpha: str, n: int) -> list[int]:
        """Number of executions from alpha of each length 0..n."""
        i = self.states.index(alpha)
        return [sum(g[i]) for g in self.growth_matrix_counts(n)]

    # -- restriction and the spectral property ------------------------------

    def restrict(self, removed: Iterable[str]) -> "ConcurrentSystem":
        """Subsystem induced by deleting letters from the alphabet."""
        removed = set(removed)
        unknown = removed - set(self.monoid.letters)
        if unknown:
            raise SchemaError(f"cannot remove unknown letters {sorted(unknown)}")
        keep = [a for a in self.monoid.letters if a not in removed]
        action = {
            (alpha, a): beta for (alpha, a), beta in self.action.items() if a in keep
        }
        return ConcurrentSystem(self.monoid.restrict(keep), self.states, action)

    def spectral_check(self, policy: NumericPolicy = DEFAULT_POLICY) -> dict:
        """Per letter a: the characteristic root of the system without a and
        whether it clears the base root by the policy margin (infinite roots
        always do)."""
        base = self.characteristic_root(policy)
        r = base.as_float() if base.found else float("inf")
        rows = []
        for a in self.monoid.letters:
            sub = self.restrict([a]).characteristic_root(policy)
            ra = sub.as_float() if sub.found else float("inf")
            rows.append(
                {
                    "letter": a,
                    "root": ra if ra != float("inf") else "infinity",
                    "strict": ra > r + policy.spectral_margin,
                }
            )
        return {
            "base_root": r if r != float("inf") else "infinity",
            "letters": rows,
            "all_strict": all(row["strict"] for row in rows),
        }

    def __repr__(self):
        return f"ConcurrentSystem(states={list(self.states)!r}, |action|={len(self.action)})"


def build_system(
    monoid: TraceMonoid,
    states: Sequence[str] | None = None,
    action_entries: Iterable[tuple[str, str, str]] | None = None,
) -> ConcurrentSystem:
    """Validated system from (from, letter, to) triples; with no states the
    single-state wrapper of the monoid is built."""
    if states is None:
        states = ("*",)
        action_entries = [("*", a, "*") for a in monoid.letters]
    action: dict[tuple[str, str], str] = {}
    for alpha, a, beta in action_entries or []:
        if (alpha, a) in action:
            raise SchemaError(f"duplicate action entry for ({alpha},{a})")
        action[(alpha, a)] = beta
    return ConcurrentSystem(monoid, states, action)
