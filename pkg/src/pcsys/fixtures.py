"""Built-in example monoids and systems used by the CLI and the test suite.

M1: five letters in a line, far-apart pairs commute.
M2: <a,b,c,d | ac=ca, bd=db>, the four-letter "ring" monoid.
M3: <a,b,c | ac=ca, bc=cb>, not irreducible (c commutes with everything).
S1: the four-pieces-on-four-slots game with six reachable positions.
S2: the three-place Petri net system with two reachable markings.
S3: a nine-state irreducible deterministic system.
S4: a four-state deterministic but non-irreducible system.
"""

from __future__ import annotations

from .monoid import TraceMonoid
from .petri import PetriNet, from_petri
from .system import ConcurrentSystem, build_system

MONOID_NAMES = ("M1", "M2", "M3")
SYSTEM_NAMES = ("S1", "S2", "S3", "S4")


def monoid_m1() -> TraceMonoid:
    letters = [f"a{i}" for i in range(5)]
    pairs = [
        (f"a{i}", f"a{j}")
        for i in range(5)
        for j in range(i + 1, 5)
        if j - i >= 2
    ]
    return TraceMonoid(letters, pairs)


def monoid_m2() -> TraceMonoid:
    return TraceMonoid(["a", "b", "c", "d"], [("a", "c"), ("b", "d")])


def monoid_m3() -> TraceMonoid:
    return TraceMonoid(["a", "b", "c"], [("a", "c"), ("b", "c")])


_SLOT = {"a": (0, 1), "b": (1, 2), "c": (2, 3), "d": (3, 0)}


def system_s1() -> ConcurrentSystem:
    """Slots game: a piece is playable when its two slots agree, and playing
    it toggles both."""
    states = ["0000", "1100", "0011", "0110", "1001", "1111"]
    entries = []
    for s in states:
        for letter, (i, j) in _SLOT.items():
            if s[i] == s[j]:
                bits = list(s)
                bits[i] = "1" if bits[i] == "0" else "0"
                bits[j] = "1" if bits[j] == "0" else "0"
                entries.append((s, letter, "".join(bits)))
    return build_system(monoid_m2(), states, entries)


def petri_s2() -> PetriNet:
    return PetriNet(
        places=["A", "B", "C"],
        transitions=[
            ("a", ["A"], ["A"]),
            ("b", ["A"], ["B"]),
            ("c", ["B", "C"], ["A", "C"]),
            ("d", ["C"], ["C"]),
        ],
        initial=["A", "C"],
    )


def system_s2() -> ConcurrentSystem:
    return from_petri(petri_s2())


def system_s3() -> ConcurrentSystem:
    letters = [f"a{i}" for i in range(4)]
    pairs = [
        (f"a{i}", f"a{j}")
        for i in range(4)
        for j in range(i + 1, 4)
        if j - i >= 2
    ]
    m = TraceMonoid(letters, pairs)
    entries = [
        ("0", "a0", "1"),
        ("0", "a2", "2"),
        ("1", "a2", "3"),
        ("2", "a0", "3"),
        ("2", "a3", "5"),
        ("3", "a1", "4"),
        ("3", "a3", "6"),
        ("4", "a3", "7"),
        ("5", "a0", "6"),
        ("6", "a1", "7"),
        ("7", "a2", "8"),
        ("8", "a1", "0"),
    ]
    return build_system(m, [str(i) for i in range(9)], entries)


def system_s4() -> ConcurrentSystem:
    m = TraceMonoid(["a", "b", "c"], [("a", "c"), ("b", "c")])
    entries = [
        ("alpha0", "a", "alpha1"),
        ("alpha0", "c", "beta0"),
        ("alpha1", "b", "alpha0"),
        ("alpha1", "c", "beta1"),
        ("beta0", "a", "beta1"),
        ("beta1", "b", "beta0"),
    ]
    return build_system(m, ["alpha0", "alpha1", "beta0", "beta1"], entries)


_MONOIDS = {"M1": monoid_m1, "M2": monoid_m2, "M3": monoid_m3}
_SYSTEMS = {
    "S1": system_s1,
    "S2": system_s2,
    "S3": system_s3,
    "S4": system_s4,
}


def get_monoid(name: str) -> TraceMonoid:
    try:
        return _MONOIDS[name]()
    except KeyError:
        raise KeyError(f"unknown monoid fixture {name!r}") from None


def get_system(name: str) -> ConcurrentSystem:
    """Named system; monoid names give the single-state wrapper."""
    if name in _MONOIDS:
        return build_system(_MONOIDS[name]())
    try:
        return _SYSTEMS[name]()
    except KeyError:
        raise KeyError(f"unknown system fixture {name!r}") from None


def fixture_names() -> list[str]:
    return list(MONOID_NAMES) + list(SYSTEM_NAMES)


def fixture_path(name: str):
    """Path of a bundled fixture JSON file (monoid, system, or S2_petri)."""
    from importlib import resources

    path = resources.files(__package__) / "fixtures" / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"no bundled fixture file for {name!r}")
    return path
