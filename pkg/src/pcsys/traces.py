"""Traces in Cartier-Foata normal form, lassos, and the divisibility lattice.

A trace is stored as its normal form: a tuple of nonempty cliques where each
consecutive pair satisfies the layer-stacking condition (every letter of the
upper clique depends on some letter of the lower one).  A lasso encodes an
eventually periodic normal sequence as prefix + repeating cycle.

Two facts drive the lattice operations and are gated by oracle tests rather
than taken on faith:
  * a letter left-divides a trace iff it lies in the first layer;
  * the least upper bound of x and y exists iff, after cancelling the
    greatest common divisor, the two residual alphabets are pairwise
    independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotADivisorError, SchemaError, ValidationError
from .monoid import Clique, TraceMonoid


@dataclass(frozen=True)
class Trace:
    layers: tuple[Clique, ...]

    @property
    def length(self) -> int:
        return sum(len(c) for c in self.layers)

    @property
    def height(self) -> int:
        return len(self.layers)

    @property
    def is_empty(self) -> bool:
        return not self.layers

    def first_layer(self) -> Clique:
        return self.layers[0] if self.layers else ()

    def word(self) -> tuple[str, ...]:
        """A representative word, reading layers bottom to top."""
        return tuple(a for layer in self.layers for a in layer)

    def letters(self) -> set[str]:
        return {a for layer in self.layers for a in layer}

    def to_json(self) -> dict:
        return {"layers": [list(c) for c in self.layers]}


EPSILON = Trace(())


@dataclass(frozen=True)
class Lasso:
    """Eventually periodic generalized trace: prefix then cycle repeated
    forever; an empty cycle encodes a finite trace."""

    prefix: tuple[Clique, ...]
    cycle: tuple[Clique, ...]

    def unroll(self, n: int) -> tuple[Clique, ...]:
        """First n layers of the unrolled normal sequence (fewer if finite)."""
        layers = list(self.prefix)
        while self.cycle and len(layers) < n:
            layers.extend(self.cycle)
        return tuple(layers[:n])

    @property
    def is_finite(self) -> bool:
        return not self.cycle

    def to_json(self) -> dict:
        return {"prefix": [list(c) for c in self.prefix], "cycle": [list(c) for c in self.cycle]}


def make_lasso(m: TraceMonoid, prefix: Iterable[Iterable[str]], cycle: Iterable[Iterable[str]]) -> Lasso:
    """Validated lasso: prefix pairs, prefix-to-cycle junction, in-cycle
    pairs and the cycle wrap pair must all be normal; cycle cliques nonempty."""
    pre = tuple(m.clique(c) for c in prefix)
    cyc = tuple(m.clique(c) for c in cycle)
    if any(not c for c in pre) or any(not c for c in cyc):
        raise ValidationError("lasso layers must be nonempty cliques")
    seq = list(pre) + list(cyc)
    for a, b in zip(seq, seq[1:]):
        if not m.is_normal_pair(a, b):
            raise ValidationError(f"layer pair {a} -> {b} is not normal")
    if cyc and not m.is_normal_pair(cyc[-1], cyc[0]):
        raise ValidationError(f"cycle wrap pair {cyc[-1]} -> {cyc[0]} is not normal")
    return Lasso(pre, cyc)


# -- normalization -----------------------------------------------------------


class IncrementalNormalForm:
    """Heap-stacking normalizer: letters are inserted one by one, each
    falling to the layer just above the highest layer that blocks it."""

    def __init__(self, m: TraceMonoid):
        self.m = m
        self.layers: list[set[str]] = []
        # per letter: index of the highest layer holding a dependent letter
        self.top = {a: -1 for a in m.letters}

    def insert(self, a: str) -> None:
        j = self.top[a] + 1
        if j == len(self.layers):
            self.layers.append(set())
        self.layers[j].add(a)
        for b in self.m.letters:
            if self.m.dependent(a, b) and self.top[b] < j:
                self.top[b] = j

    def trace(self) -> Trace:
        key = self.m.index.get
        return Trace(tuple(tuple(sorted(layer, key=key)) for layer in self.layers))


def normalize(m: TraceMonoid, word: Iterable[str]) -> Trace:
    """Cartier-Foata normal form of a word; congruent words agree."""
    inc = IncrementalNormalForm(m)
    for a in word:
        if a not in m.index:
            raise SchemaError(f"unknown letter {a!r}")
        inc.insert(a)
    return inc.trace()


def trace_from_layers(m: TraceMonoid, layers: Iterable[Iterable[str]]) -> Trace:
    """Trace from explicit layers, validated to be a normal sequence."""
    cliques = tuple(m.clique(c) for c in layers)
    if any(not c for c in cliques):
        raise ValidationError("normal-form layers must be nonempty")
    for a, b in zip(cliques, cliques[1:]):
        if not m.is_normal_pair(a, b):
            raise ValidationError(f"layer pair {a} -> {b} is not normal")
    return Trace(cliques)


def concat(m: TraceMonoid, x: Trace, y: Trace) -> Trace:
    """Product in the monoid (pile the second heap on top of the first)."""
    return normalize(m, x.word() + y.word())


# -- divisibility ------------------------------------------------------------


def _cancel_letter(m: TraceMonoid, a: str, y: Trace) -> Trace:
    """Residual a \\ y for a letter of the first layer of y."""
    first = set(y.layers[0])
    first.remove(a)
    word = tuple(sorted(first, key=m.index.get))
    for layer in y.layers[1:]:
        word += layer
    return normalize(m, word)


def left_cancel(m: TraceMonoid, x: Trace, y: Trace) -> Trace:
    """The unique z with x z = y; raises NotADivisorError when x does not
    left-divide y.  Letters of x are peeled off the bottom of y, using the
    fact that the left-divisor letters of y are its first-layer letters."""
    z = y
    for a in x.word():
        if not z.layers or a not in z.layers[0]:
            raise NotADivisorError(f"{a!r} is not a left divisor of the residual")
        z = _cancel_letter(m, a, z)
    return z


def divides(m: TraceMonoid, x: Trace, y: Trace) -> bool:
    try:
        left_cancel(m, x, y)
        return True
    except NotADivisorError:
        return False


def meet(m: TraceMonoid, x: Trace, y: Trace) -> Trace:
    """Greatest lower bound: repeatedly extract a common first-layer letter."""
    word: list[str] = []
    while x.layers and y.layers:
        common = [a for a in x.layers[0] if a in y.layers[0]]
        if not common:
            break
        a = common[0]
        word.append(a)
        x = _cancel_letter(m, a, x)
        y = _cancel_letter(m, a, y)
    return normalize(m, word)


def join(m: TraceMonoid, x: Trace, y: Trace) -> Trace | None:
    """Least upper bound, or None when no common upper bound exists.
    Exists iff the residuals past the meet have pairwise independent
    alphabets, in which case it is meet * residual(x) * residual(y)."""
    g = meet(m, x, y)
    xr = left_cancel(m, g, x)
    yr = left_cancel(m, g, y)
    for a in xr.letters():
        for b in yr.letters():
            if not (a != b and m.independent(a, b)):
                return None
    return concat(m, g, concat(m, xr, yr))


def divisors(m: TraceMonoid, y: Trace) -> list[Trace]:
    """All left divisors of a finite trace (breadth-first peeling)."""
    seen = {(): EPSILON}
    frontier = [(EPSILON, y)]
    while frontier:
        nxt = []
        for x, z in frontier:
            for a in z.first_layer():
                x2 = concat(m, x, Trace(((a,),)))
                if x2.layers in seen:
                    continue
                seen[x2.layers] = x2
                nxt.append((x2, _cancel_letter(m, a, z)))
        frontier = nxt
    return sorted(seen.values(), key=lambda t: (t.length, t.layers))


def divisor_counts(m: TraceMonoid, w: Lasso, n: int) -> list[int]:
    """Number of divisors of the generalized trace w of each length 0..n.

    A divisor of length k has height at most k, hence is a divisor of the
    first n unrolled layers; counting reduces to the finite case.
    """
    u = Trace(w.unroll(n))
    counts = [0] * (n + 1)
    seen = {()}
    frontier = [(EPSILON, u)]
    counts[0] = 1
    while frontier:
        nxt = []
        for x, z in frontier:
            if x.length == n:
                continue
            for a in z.first_layer():
                x2 = concat(m, x, Trace(((a,),)))
                if x2.layers in seen:
                    continue
                seen.add(x2.layers)
                counts[x2.length] += 1
                nxt.append((x2, _cancel_letter(m, a, z)))
        frontier = nxt
    return counts


# -- projection between nested independence relations ------------------------


def _check_nested(mi: TraceMonoid, mj: TraceMonoid) -> None:
    if mi.letters != mj.letters:
        raise SchemaError("projection requires identical alphabets")
    if not set(map(frozenset, map(tuple, mi.independence))) <= set(
        map(frozenset, map(tuple, mj.independence))
    ):
        raise SchemaError("projection requires nested independence relations")


def project(mi: TraceMonoid, mj: TraceMonoid, x: "Trace | Lasso") -> "Trace | Lasso":
    """Canonical surjection onto the coarser monoid (more commutations)."""
    if isinstance(x, Lasso):
        return project_lasso(mi, mj, x)
    _check_nested(mi, mj)
    return normalize(mj, x.word())


def project_lasso(mi: TraceMonoid, mj: TraceMonoid, w: Lasso, max_blocks: int = 10000) -> Lasso:
    """Image of an eventually periodic trace under the canonical surjection.

    The cycle word is fed repeatedly into an incremental normalizer; layers
    below every possible future insertion point are frozen, and a repeated
    (suffix, insertion-profile) state closes the projected cycle.
    """
    _check_nested(mi, mj)
    if w.is_finite:
        t = normalize(mj, Trace(w.prefix).word())
        return Lasso(t.layers, ())
    cycle_word = Trace(w.cycle).word()
    cycle_letters = sorted(set(cycle_word), key=mj.index.get)
    inc = IncrementalNormalForm(mj)
    for a in Trace(w.prefix).word():
        inc.insert(a)
    seen: dict[tuple, tuple[int, tuple[Clique, ...]]] = {}
    key_of = mj.index.get

    def canon() -> tuple[Clique, ...]:
        return tuple(tuple(sorted(layer, key=key_of)) for layer in inc.layers)

    for _ in range(max_blocks):
        for a in cycle_word:
            inc.insert(a)
        frozen = min(inc.top[a] for a in cycle_letters) + 1
        layers = canon()
        key = (layers[frozen:], tuple(inc.top[a] - frozen for a in cycle_letters))
        if key in seen:
            f1, layers1 = seen[key]
            if frozen > f1:
                # layers below f1 were frozen at the first visit and cannot
                # have changed since; the block frozen in between is the cycle
                return Lasso(layers1[:f1], layers[f1:frozen])
        seen[key] = (frozen, layers)
    raise ValidationError("lasso projection did not stabilize")
