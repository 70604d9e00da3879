"""The Markov chain of states-and-cliques driven by a probabilistic valuation.

State space: nodes (alpha, c) of the digraph of states-and-cliques.  The
initial law at alpha is h_alpha restricted to the enabled nonempty cliques;
the row of (alpha, c) puts mass proportional to h_beta(d) on each successor
(beta, d), beta = alpha . c, normalized.  Nodes whose successor mass
vanishes are terminal: the measure never reaches them, but sampling stays
total if it is started there by hand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ValidationError
from .system import ConcurrentSystem, SCDigraph, SCNode
from .valuation import Valuation


@dataclass(frozen=True)
class MarkovChainSC:
    system: ConcurrentSystem
    valuation: Valuation
    digraph: SCDigraph
    initial: dict          # state -> {node: probability}
    rows: dict             # node -> {node: probability}; missing = terminal

    def is_terminal(self, node: SCNode) -> bool:
        return node not in self.rows

    def sample(self, alpha: str, steps: int, seed: int) -> list[SCNode]:
        """Reproducible trajectory of at most `steps` nodes from alpha;
        shorter only when a terminal node is hit."""
        if steps < 1:
            raise ValidationError("steps must be at least 1")
        law = self.initial[alpha]
        if not law or all(float(p) == 0 for p in law.values()):
            raise ValidationError(f"no infinite execution starts at {alpha!r}")
        rng = random.Random(seed)
        node = _draw(rng, law)
        out = [node]
        while len(out) < steps and node in self.rows:
            node = _draw(rng, self.rows[node])
            out.append(node)
        return out


def _draw(rng: random.Random, law: dict) -> SCNode:
    items = [(node, float(p)) for node, p in law.items()]
    u = rng.random() * sum(p for _, p in items)
    acc = 0.0
    for node, p in items:
        acc += p
        if u < acc:
            return node
    return items[-1][0]


def markov_chain(system: ConcurrentSystem, valuation: Valuation) -> MarkovChainSC:
    valuation.require_probabilistic()
    dg = system.sc_digraph()
    pol = valuation.policy
    initial = {
        alpha: {
            (alpha, c): valuation.mobius_at(alpha)[c]
            for c in system.enabled_nonempty[alpha]
        }
        for alpha in system.states
    }
    rows = {}
    for node in dg.nodes:
        succ = dg.successors(node)
        weights = {t: valuation.mobius_at(t[0])[t[1]] for t in succ}
        total = sum(weights.values())
        if pol.is_zero(total, pol.prob_tol):
            continue  # terminal node
        rows[node] = {t: w / total for t, w in weights.items()}
    return MarkovChainSC(system, valuation, dg, initial, rows)


def null_nodes(system: ConcurrentSystem, valuation: Valuation) -> list[SCNode]:
    """Nodes (alpha, c) with h_alpha(c) = 0: carried by the digraph but
    never seen by the chain."""
    valuation.require_probabilistic()
    pol = valuation.policy
    return [
        (alpha, c)
        for alpha, c in system.sc_digraph().nodes
        if pol.is_zero(valuation.mobius_at(alpha)[c], pol.prob_tol)
    ]
