"""Trace monoids: alphabet, independence relation and clique combinatorics.

A monoid is described by an ordered alphabet and a symmetric irreflexive
independence relation.  The clique set (all pairwise-independent letter
subsets, empty set included), the normal-pair relation between cliques and
the Mobius machinery built on the clique poset are derived here.

Letters keep their declaration index; cliques are canonical tuples sorted by
that index, so every iteration order in the package is reproducible.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import SchemaError
from .polynomials import Polynomial

Clique = tuple[str, ...]
EMPTY: Clique = ()

MAX_LETTERS = 16


class TraceMonoid:
    """Finitely presented partially commutative monoid."""

    def __init__(self, letters: Sequence[str], independence: Iterable[tuple[str, str]]):
        letters = tuple(letters)
        if len(set(letters)) != len(letters):
            raise SchemaError("duplicate letters in alphabet")
        if len(letters) > MAX_LETTERS:
            raise SchemaError(
                f"alphabet has {len(letters)} letters, supported maximum is {MAX_LETTERS}"
            )
        self.letters = letters
        self.index = {a: i for i, a in enumerate(letters)}
        pairs = set()
        for a, b in independence:
            if a not in self.index or b not in self.index:
                raise SchemaError(f"independence pair ({a},{b}) names an unknown letter")
            if a == b:
                raise SchemaError(f"independence relation must be irreflexive, got ({a},{a})")
            pairs.add(frozenset((a, b)))
        self._indep = pairs
        # canonical pair list, sorted by declaration index
        self.independence = sorted(
            (tuple(sorted(p, key=self.index.get)) for p in pairs),
            key=lambda p: (self.index[p[0]], self.index[p[1]]),
        )
        self.cliques = self._enumerate_cliques()
        self.nonempty_cliques = [c for c in self.cliques if c]
        self._clique_set = set(self.cliques)

    # -- basic relations -------------------------------------------------

    def independent(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self._indep

    def dependent(self, a: str, b: str) -> bool:
        """Dependence relation, diagonal included."""
        return a == b or frozenset((a, b)) not in self._indep

    def clique(self, members: Iterable[str]) -> Clique:
        """Canonical clique from a letter collection, validated."""
        members = sorted(set(members), key=self.index.get)
        for a in members:
            if a not in self.index:
                raise SchemaError(f"unknown letter {a!r}")
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if not self.independent(a, b):
                    raise SchemaError(f"letters {a!r} and {b!r} are not independent")
        return tuple(members)

    def is_clique(self, members: Clique) -> bool:
        return tuple(members) in self._clique_set

    def _enumerate_cliques(self) -> list[Clique]:
        # recursive subset extension over the independence graph; the alphabet
        # cap keeps the 2^n blowup bounded
        out: list[Clique] = []

        def extend(prefix: tuple[str, ...], start: int) -> None:
            out.append(prefix)
            for i in range(start, len(self.letters)):
                a = self.letters[i]
                if all(self.independent(a, b) for b in prefix):
                    extend(prefix + (a,), i + 1)

        extend((), 0)
        out.sort(key=lambda c: (len(c), tuple(self.index[a] for a in c)))
        return out

    # -- normal pairs and the digraph of cliques -------------------------

    def is_normal_pair(self, x: Clique, y: Clique) -> bool:
        """True iff every letter of y depends on some letter of x."""
        return all(any(self.dependent(a, b) for a in x) for b in y)

    def clique_digraph(self) -> dict[Clique, list[Clique]]:
        """Successor map of the digraph of cliques (nonempty cliques only)."""
        return {
            c: [d for d in self.nonempty_cliques if self.is_normal_pair(c, d)]
            for c in self.nonempty_cliques
        }

    # -- Mobius machinery -------------------------------------------------

    def mobius_polynomial(self) -> Polynomial:
        """Alternating clique-count polynomial; coefficient of z^k is
        (-1)^k times the number of cliques of size k."""
        coeffs = [0] * (len(self.letters) + 1)
        for c in self.cliques:
            coeffs[len(c)] += (-1) ** len(c)
        return Polynomial.of(coeffs)

    def growth_counts(self, n: int) -> list[int]:
        """Number of traces of each length 0..n, by inverting the Mobius
        polynomial as a formal power series (exact integers)."""
        mu = self.mobius_polynomial()
        lam = [1]
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, min(k, mu.degree) + 1):
                acc += mu[j] * lam[k - j]
            lam.append(-acc)
        return [int(v) for v in lam]

    def mobius_transform(self, f: Mapping[Clique, object]) -> dict[Clique, object]:
        """Alternating sum over clique super-sets, h(c) = sum over cliques
        c' containing c of (-1)^(|c'|-|c|) f(c')."""
        out = {}
        for c in self.cliques:
            cs = set(c)
            acc = 0
            for cp in self.cliques:
                if cs <= set(cp):
                    acc += (-1) ** (len(cp) - len(c)) * f[cp]
            out[c] = acc
        return out

    def mobius_inverse(self, h: Mapping[Clique, object]) -> dict[Clique, object]:
        """Inverse transform: f(c) = sum over cliques containing c of h."""
        out = {}
        for c in self.cliques:
            cs = set(c)
            acc = 0
            for cp in self.cliques:
                if cs <= set(cp):
                    acc += h[cp]
            out[c] = acc
        return out

    # -- structure --------------------------------------------------------

    @property
    def is_irreducible(self) -> bool:
        """Connectivity of the Coxeter graph (letters, dependence minus diagonal)."""
        if not self.letters:
            return False
        seen = {self.letters[0]}
        stack = [self.letters[0]]
        while stack:
            a = stack.pop()
            for b in self.letters:
                if b not in seen and b != a and self.dependent(a, b):
                    seen.add(b)
                    stack.append(b)
        return len(seen) == len(self.letters)

    def restrict(self, keep: Iterable[str]) -> "TraceMonoid":
        """Submonoid generated by a subset of the alphabet."""
        keep = set(keep)
        letters = [a for a in self.letters if a in keep]
        pairs = [p for p in self.independence if p[0] in keep and p[1] in keep]
        return TraceMonoid(letters, pairs)

    def __eq__(self, other):
        return (
            isinstance(other, TraceMonoid)
            and self.letters == other.letters
            and self._indep == other._indep
        )

    def __hash__(self):
        return hash((self.letters, frozenset(self._indep)))

    def __repr__(self):
        return f"TraceMonoid({list(self.letters)!r}, {self.independence!r})"


def build_monoid(letters: Sequence[str], independence: Iterable[tuple[str, str]]) -> TraceMonoid:
    return TraceMonoid(letters, independence)


def uniform_clique_valuation(m: TraceMonoid, t) -> dict[Clique, object]:
    """The map c -> t^|c| on the clique set; handy test input for the
    Mobius transform."""
    return {c: t ** len(c) for c in m.cliques}
