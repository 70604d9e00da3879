"""Deterministic concurrent systems: local commutativity, the dominant
valuation, maximal executions, and boundary cardinality.

A system is deterministic when at each state the enabled letters are
pairwise independent and their full clique can be executed; the lattice of
executions is then locally a powerset lattice, every state carries a
maximal (finite or eventually periodic) execution, and the set of infinite
executions is small in a sense this module classifies exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ValidationError
from .monoid import TraceMonoid
from .system import ConcurrentSystem
from .traces import Lasso, divisor_counts, make_lasso
from .valuation import Valuation, dominant_weights


def is_deterministic(system: ConcurrentSystem):
    """(flag, witness): witness is the offending (state, a, b) pair of
    dependent enabled letters, or (state, full clique) when the full clique
    dies."""
    for alpha in system.states:
        letters = system.enabled_letters[alpha]
        for i, a in enumerate(letters):
            for b in letters[i + 1:]:
                if not system.monoid.independent(a, b):
                    return False, (alpha, a, b)
        if letters and system.act_word(alpha, letters) is None:
            return False, (alpha, letters)
    return True, None


def dominant_valuation(system: ConcurrentSystem) -> Valuation:
    """Weight 1 on every enabled letter; coherent by construction."""
    return Valuation(system, dominant_weights(system))


def max_execution(system: ConcurrentSystem, alpha: str) -> Lasso:
    """The maximum execution from alpha of a deterministic system, as a
    lasso: keep firing the full enabled clique; a revisited state closes
    the cycle, an empty enabled alphabet ends a finite execution."""
    ok, witness = is_deterministic(system)
    if not ok:
        raise ValidationError("system is not deterministic", witness=witness)
    visited = {alpha: 0}
    states = [alpha]
    cliques = []
    current = alpha
    while True:
        letters = system.enabled_letters[current]
        if not letters:
            return make_lasso(system.monoid, cliques, [])
        cliques.append(letters)
        current = system.act_word(current, letters)
        if current in visited:
            k = visited[current]
            return make_lasso(system.monoid, cliques[:k], cliques[k:])
        visited[current] = len(states)
        states.append(current)


# -- boundary cardinality ----------------------------------------------------


@dataclass(frozen=True)
class BoundaryCardinality:
    kind: str              # "empty" | "countable" | "uncountable"
    singleton: bool = False

    def to_json(self) -> dict:
        return {"class": self.kind, "singleton": self.singleton}


def _tarjan_sccs(nodes, succ):
    index = {}
    low = {}
    stack = []
    on_stack = set()
    sccs = []
    counter = [0]

    def strongconnect(v):
        # iterative Tarjan to stay clear of recursion limits
        work = [(v, iter(succ[v]))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        while work:
            node, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                elif w in on_stack:
                    low[node] = min(low[node], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                sccs.append(comp)

    for v in nodes:
        if v not in index:
            strongconnect(v)
    return sccs


def boundary_cardinality(system: ConcurrentSystem, alpha: str) -> BoundaryCardinality:
    """Cardinality class of the set of infinite executions from alpha.

    Work on the part of the digraph of states-and-cliques that is reachable
    from alpha's start nodes and from which some cycle is still reachable:
    infinite executions are exactly the infinite paths there.  No such part
    means an empty boundary; a strongly connected piece richer than a plain
    cycle pumps uncountably many paths; otherwise every infinite path is a
    lasso and the boundary is countable.
    """
    dg = system.sc_digraph()
    succ = {n: [] for n in dg.nodes}
    for s, t in dg.edges:
        succ[s].append(t)
    starts = [(alpha, c) for c in system.enabled_nonempty[alpha]]
    reach = set()
    stack = list(starts)
    while stack:
        n = stack.pop()
        if n in reach:
            continue
        reach.add(n)
        stack.extend(succ[n])
    sccs = _tarjan_sccs(sorted(reach), {n: [t for t in succ[n] if t in reach] for n in reach})
    cyclic = set()
    for comp in sccs:
        if len(comp) > 1 or any(n in succ[n] for n in comp):
            cyclic.update(comp)
    if not cyclic:
        return BoundaryCardinality("empty")
    # co-accessibility to a cycle, by reverse search
    pred = {n: [] for n in reach}
    for n in reach:
        for t in succ[n]:
            if t in reach:
                pred[t].append(n)
    live = set()
    stack = list(cyclic)
    while stack:
        n = stack.pop()
        if n in live:
            continue
        live.add(n)
        stack.extend(pred[n])
    for comp in sccs:
        comp_set = set(comp) & live
        if not comp_set:
            continue
        edges = sum(1 for n in comp_set for t in succ[n] if t in comp_set)
        nontrivial = len(comp_set) > 1 or any(n in succ[n] for n in comp_set)
        if nontrivial and edges > len(comp_set):
            return BoundaryCardinality("uncountable")
    single = len([n for n in starts if n in live]) == 1 and all(
        len([t for t in succ[n] if t in live]) == 1 for n in live
    )
    return BoundaryCardinality("countable", singleton=single)


# -- the equivalence report --------------------------------------------------


@dataclass(frozen=True)
class DcsReport:
    deterministic: bool
    determinism_witness: object
    dominant_probabilistic: bool
    root_is_one: bool
    root: object
    boundary_by_state: dict
    singleton_by_state: dict
    irreducible: bool
    theorem_consistent: bool | None

    def to_json(self) -> dict:
        return {
            "deterministic": self.deterministic,
            "determinism_witness": self.determinism_witness,
            "dominant_probabilistic": self.dominant_probabilistic,
            "root_is_one": self.root_is_one,
            "root": str(self.root),
            "boundary_by_state": {
                k: v.to_json() for k, v in self.boundary_by_state.items()
            },
            "singleton_by_state": dict(self.singleton_by_state),
            "irreducible": self.irreducible,
            "theorem_consistent": self.theorem_consistent,
            "uniqueness_of_probabilistic_valuation": (
                "implied by the other conditions when irreducible; "
                "not independently decided"
            ),
        }


def dcs_report(system: ConcurrentSystem) -> DcsReport:
    det, witness = is_deterministic(system)
    dom_prob = dominant_valuation(system).is_probabilistic()
    root = system.characteristic_root()
    root_is_one = bool(root.found and root.exact and root.value == 1)
    if root.found and not root.exact:
        root_is_one = abs(root.as_float() - 1.0) <= 1e-9
    boundary = {alpha: boundary_cardinality(system, alpha) for alpha in system.states}
    singleton = {alpha: b.kind == "countable" and b.singleton for alpha, b in boundary.items()}
    irreducible = system.classify().irreducible
    consistent = None
    if irreducible:
        countable = [b.kind != "uncountable" for b in boundary.values()]
        flags = [
            det,
            dom_prob,
            root_is_one,
            any(countable),
            all(countable),
            any(singleton.values()),
            all(singleton.values()),
        ]
        consistent = len(set(flags)) == 1
    return DcsReport(
        det,
        witness,
        dom_prob,
        root_is_one,
        root.value if root.found else "infinity",
        boundary,
        singleton,
        irreducible,
        consistent,
    )


def null_cycle_check(system: ConcurrentSystem, valuation: Valuation):
    """(flag, cycle): flag is True when no cycle of the digraph of
    states-and-cliques stays within the null nodes; otherwise a witness
    cycle of null nodes is returned."""
    from .chain import null_nodes

    nulls = set(null_nodes(system, valuation))
    dg = system.sc_digraph()
    succ = {n: [] for n in nulls}
    for s, t in dg.edges:
        if s in nulls and t in nulls:
            succ[s].append(t)
    for comp in _tarjan_sccs(sorted(nulls), succ):
        if len(comp) > 1 or comp[0] in succ[comp[0]]:
            cycle = _extract_cycle(comp, succ)
            return False, cycle
    return True, None


def _extract_cycle(comp, succ):
    start = comp[0]
    path = [start]
    seen = {start: 0}
    node = start
    while True:
        node = next(t for t in succ[node] if t in set(comp))
        if node in seen:
            return path[seen[node]:]
        seen[node] = len(path)
        path.append(node)


def corollary1_check(m: TraceMonoid, w: Lasso, n: int) -> dict:
    """Divisor counts of w against the polynomial bound binom(k+S-1, S-1),
    S the alphabet size; deterministic systems grow at most polynomially."""
    counts = divisor_counts(m, w, n)
    s = len(m.letters)
    bounds = [comb(k + s - 1, s - 1) for k in range(n + 1)]
    return {
        "counts": counts,
        "bounds": bounds,
        "ok": all(p <= b for p, b in zip(counts, bounds)),
    }
