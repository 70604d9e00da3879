"""Shared fixtures and brute-force oracles.

The oracles deliberately avoid the package's clever algorithms: traces are
enumerated as words deduplicated by normal form, congruence classes by
adjacent-swap closure, and lattice operations by divisor-set intersection.
Tests freeze oracle outputs against the implementations under test.
"""

from __future__ import annotations

import itertools

import pytest

from pcsys import fixtures as fx
from pcsys.monoid import TraceMonoid
from pcsys.system import ConcurrentSystem
from pcsys.traces import Trace, normalize


@pytest.fixture(scope="session")
def m1():
    return fx.monoid_m1()


@pytest.fixture(scope="session")
def m2():
    return fx.monoid_m2()


@pytest.fixture(scope="session")
def m3():
    return fx.monoid_m3()


@pytest.fixture(scope="session")
def s1():
    return fx.system_s1()


@pytest.fixture(scope="session")
def s2():
    return fx.system_s2()


@pytest.fixture(scope="session")
def s3():
    return fx.system_s3()


@pytest.fixture(scope="session")
def s4():
    return fx.system_s4()


# -- oracles -----------------------------------------------------------------


def enumerate_traces(m: TraceMonoid, n: int) -> list[list[Trace]]:
    """All traces of length 0..n, found by extending words and
    deduplicating on the normal form."""
    by_length = [[Trace(())]]
    frontier = {(): Trace(())}
    for _ in range(n):
        nxt = {}
        for word in frontier:
            for a in m.letters:
                w2 = word + (a,)
                t = normalize(m, w2)
                key = t.layers
                if key not in nxt:
                    nxt[key] = t
        frontier = {t.word(): t for t in nxt.values()}
        by_length.append(sorted(nxt.values(), key=lambda t: t.layers))
    return by_length


def congruence_class(m: TraceMonoid, word: tuple[str, ...]) -> set[tuple[str, ...]]:
    """All words equal to the given one, by adjacent-swap closure."""
    seen = {tuple(word)}
    stack = [tuple(word)]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            if m.independent(w[i], w[i + 1]):
                w2 = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if w2 not in seen:
                    seen.add(w2)
                    stack.append(w2)
    return seen


def brute_divisors(m: TraceMonoid, y: Trace) -> set[tuple]:
    """Left divisors of y via word-level prefixes of every representative."""
    out = set()
    for w in congruence_class(m, y.word()):
        for k in range(len(w) + 1):
            out.add(normalize(m, w[:k]).layers)
    return out


def enumerate_executions(s: ConcurrentSystem, alpha: str, n: int) -> list[dict]:
    """Executions of length 0..n from alpha, as {normal form: target state}."""
    by_length = [{(): alpha}]
    frontier = {(): alpha}
    for _ in range(n):
        nxt = {}
        for word, state in list(frontier.items()):
            for a in s.enabled_letters[state]:
                t = normalize(s.monoid, word + (a,))
                nxt[t.layers] = s.action[(state, a)]
        frontier = {}
        for layers, state in nxt.items():
            word = tuple(itertools.chain.from_iterable(layers))
            frontier[word] = state
        by_length.append(dict(nxt))
    return by_length
