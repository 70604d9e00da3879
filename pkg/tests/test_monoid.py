from fractions import Fraction

import pytest

from conftest import enumerate_traces
from pcsys.errors import SchemaError
from pcsys.monoid import TraceMonoid
from pcsys.polynomials import Polynomial


def test_build_free_monoid():
    m = TraceMonoid(["a", "b"], [])
    assert m.cliques == [(), ("a",), ("b",)]
    assert not m.independent("a", "b")


def test_build_rejects_reflexive_pair():
    with pytest.raises(SchemaError):
        TraceMonoid(["a"], [("a", "a")])


def test_build_rejects_unknown_letter():
    with pytest.raises(SchemaError):
        TraceMonoid(["a"], [("a", "b")])


def test_build_rejects_duplicates():
    with pytest.raises(SchemaError):
        TraceMonoid(["a", "a"], [])


def test_build_rejects_oversized_alphabet():
    with pytest.raises(SchemaError):
        TraceMonoid([f"x{i}" for i in range(17)], [])


def test_symmetric_closure():
    m = TraceMonoid(["a", "b"], [("b", "a")])
    assert m.independent("a", "b") and m.independent("b", "a")
    assert m.independence == [("a", "b")]


def test_m1_clique_census(m1):
    # 1 empty + 5 singletons + 6 pairs + 1 triple
    expected = [
        (),
        ("a0",), ("a1",), ("a2",), ("a3",), ("a4",),
        ("a0", "a2"), ("a0", "a3"), ("a0", "a4"),
        ("a1", "a3"), ("a1", "a4"), ("a2", "a4"),
        ("a0", "a2", "a4"),
    ]
    assert m1.cliques == expected


def test_m2_clique_census(m2):
    assert m2.nonempty_cliques == [
        ("a",), ("b",), ("c",), ("d",), ("a", "c"), ("b", "d")
    ]


def test_clique_canonicalizer_rejects_dependent_letters(m2):
    with pytest.raises(SchemaError):
        m2.clique(["a", "b"])
    assert m2.clique(["c", "a"]) == ("a", "c")


def test_normal_pair_basics(m1):
    assert m1.is_normal_pair(("a0", "a2"), ("a1", "a3"))
    assert m1.is_normal_pair(("a0",), ())
    assert not m1.is_normal_pair((), ("a0",))
    # a4 independent of both a0 and a2
    assert not m1.is_normal_pair(("a0", "a2"), ("a4",))


def test_clique_digraph_m2(m2):
    dg = m2.clique_digraph()
    assert len(dg) == 6
    assert ("a", "c") in dg[("b",)]
    assert ("b",) in dg[("a",)]
    assert ("c",) not in dg[("a",)]  # a and c independent


def test_clique_digraph_free_monoid_complete():
    m = TraceMonoid(["a", "b"], [])
    dg = m.clique_digraph()
    assert all(set(v) == {("a",), ("b",)} for v in dg.values())


def test_mobius_polynomials(m1, m2, m3):
    assert m1.mobius_polynomial() == Polynomial.of([1, -5, 6, -1])
    assert m2.mobius_polynomial() == Polynomial.of([1, -4, 2])
    assert m3.mobius_polynomial() == Polynomial.of([1, -3, 2])


def test_mobius_free_commutative():
    m = TraceMonoid(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")])
    assert m.mobius_polynomial() == Polynomial.of([1, -3, 3, -1])


def test_growth_counts_free_monoid():
    m = TraceMonoid(["a", "b"], [])
    assert m.growth_counts(3) == [1, 2, 4, 8]


def test_growth_counts_empty_alphabet():
    m = TraceMonoid([], [])
    assert m.growth_counts(3) == [1, 0, 0, 0]


@pytest.mark.parametrize("name", ["m1", "m2", "m3"])
def test_growth_counts_match_enumeration(name, request):
    m = request.getfixturevalue(name)
    counts = m.growth_counts(8)
    enumerated = enumerate_traces(m, 8)
    assert counts == [len(level) for level in enumerated]


def test_mobius_transform_m3_uniform(m3):
    half = Fraction(1, 2)
    f = {c: half ** len(c) for c in m3.cliques}
    h = m3.mobius_transform(f)
    assert h[()] == 0
    assert h[("a",)] == h[("b",)] == Fraction(1, 4)
    assert h[("c",)] == 0
    assert h[("a", "c")] == h[("b", "c")] == Fraction(1, 4)


def test_mobius_transform_free_monoid_ones():
    m = TraceMonoid(["a", "b"], [])
    h = m.mobius_transform({c: 1 for c in m.cliques})
    assert h[()] == -1 and h[("a",)] == 1 and h[("b",)] == 1


def test_mobius_inversion_roundtrip(m1):
    f = {c: Fraction(1, 3) ** len(c) + len(c) for c in m1.cliques}
    assert m1.mobius_inverse(m1.mobius_transform(f)) == f


def test_eq3_sum_identity(m2):
    t = Fraction(2, 7)
    f = {c: t ** len(c) for c in m2.cliques}
    h = m2.mobius_transform(f)
    assert sum(h.values()) == f[()] == 1


def test_irreducibility(m1, m2, m3):
    assert m1.is_irreducible
    assert m2.is_irreducible
    assert not m3.is_irreducible  # c commutes with everything
    assert m3.restrict(["a", "b"]).is_irreducible
    assert TraceMonoid(["a", "b"], []).is_irreducible
    assert not TraceMonoid(["a", "b"], [("a", "b")]).is_irreducible


def test_restrict(m2):
    sub = m2.restrict(["b", "c", "d"])
    assert sub.letters == ("b", "c", "d")
    assert sub.independence == [("b", "d")]
    assert sub.mobius_polynomial() == Polynomial.of([1, -3, 1])
