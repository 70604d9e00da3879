"""1-safe Petri nets and their translation to concurrent systems.

Markings are place sets.  Two transitions are independent when their
neighborhoods (pre union post) are disjoint.  Reachable markings become
states, explored breadth first from the initial marking with a configurable
state cap; any reachable firing that would put a second token on a place is
a safety violation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SchemaError, UnsafeNetError, ValidationError
from .monoid import TraceMonoid
from .system import ConcurrentSystem

MAX_MARKINGS = 100_000


@dataclass(frozen=True)
class Transition:
    name: str
    pre: frozenset[str]
    post: frozenset[str]

    @property
    def neighborhood(self) -> frozenset[str]:
        return self.pre | self.post


class PetriNet:
    def __init__(self, places, transitions, initial):
        places = tuple(places)
        if len(set(places)) != len(places):
            raise SchemaError("duplicate place names")
        self.places = places
        self.transitions = []
        names = set()
        for t in transitions:
            if isinstance(t, Transition):
                tr = t
            else:
                name, pre, post = t
                tr = Transition(name, frozenset(pre), frozenset(post))
            if tr.name in names:
                raise SchemaError(f"duplicate transition name {tr.name!r}")
            names.add(tr.name)
            bad = (tr.pre | tr.post) - set(places)
            if bad:
                raise SchemaError(f"transition {tr.name!r} references unknown places {sorted(bad)}")
            if not tr.pre:
                raise ValidationError(f"transition {tr.name!r} has an empty pre-set")
            self.transitions.append(tr)
        initial = frozenset(initial)
        bad = initial - set(places)
        if bad:
            raise SchemaError(f"initial marking references unknown places {sorted(bad)}")
        self.initial = initial

    def independent_pairs(self) -> list[tuple[str, str]]:
        """Transition pairs with disjoint neighborhoods."""
        out = []
        for i, t in enumerate(self.transitions):
            for u in self.transitions[i + 1:]:
                if not (t.neighborhood & u.neighborhood):
                    out.append((t.name, u.name))
        return out

    def fire(self, marking: frozenset[str], t: Transition) -> frozenset[str] | None:
        """Successor marking, None when t is not enabled; raises on a
        1-safety violation."""
        if not t.pre <= marking:
            return None
        leftover = marking - t.pre
        clash = leftover & t.post
        if clash:
            raise UnsafeNetError(
                f"firing {t.name!r} puts a second token on {sorted(clash)}",
                marking=sorted(marking),
                transition=t.name,
            )
        return leftover | t.post

    def marking_name(self, marking: frozenset[str]) -> str:
        return "{" + ",".join(sorted(marking)) + "}"


def from_petri(net: PetriNet, max_markings: int = MAX_MARKINGS) -> ConcurrentSystem:
    """Concurrent system of a 1-safe net: reachable markings as states, in
    breadth-first discovery order named alpha0, alpha1, ..."""
    order: list[frozenset[str]] = [net.initial]
    index = {net.initial: 0}
    action_raw = {}
    queue = [net.initial]
    while queue:
        marking = queue.pop(0)
        for t in net.transitions:
            nxt = net.fire(marking, t)
            if nxt is None:
                continue
            if nxt not in index:
                if len(order) >= max_markings:
                    raise ValidationError(
                        f"reachable marking count exceeds the cap of {max_markings}"
                    )
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            action_raw[(marking, t.name)] = nxt
    names = [f"alpha{i}" for i in range(len(order))]
    monoid = TraceMonoid([t.name for t in net.transitions], net.independent_pairs())
    action = {
        (names[index[m]], a): names[index[nxt]] for (m, a), nxt in action_raw.items()
    }
    system = ConcurrentSystem(monoid, names, action)
    system.marking_of_state = {
        names[i]: sorted(m) for i, m in enumerate(order)
    }  # type: ignore[attr-defined]
    return system
