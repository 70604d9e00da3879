import itertools
import random

import pytest

from conftest import brute_divisors, congruence_class, enumerate_traces
from pcsys.errors import NotADivisorError, SchemaError, ValidationError
from pcsys.monoid import TraceMonoid
from pcsys.traces import (
    EPSILON,
    Lasso,
    Trace,
    concat,
    divides,
    divisor_counts,
    divisors,
    join,
    left_cancel,
    make_lasso,
    meet,
    normalize,
    project,
    project_lasso,
    trace_from_layers,
)

FIG2_WORD = ["a0", "a3", "a0", "a2", "a1", "a3", "a4"]
FIG2_LAYERS = (("a0", "a3"), ("a0", "a2"), ("a1", "a3"), ("a4",))


def test_normalize_fig2(m1):
    t = normalize(m1, FIG2_WORD)
    assert t.layers == FIG2_LAYERS
    assert t.height == 4 and t.length == 7


def test_normalize_congruent_word(m1):
    assert normalize(m1, ["a3", "a2", "a3", "a0", "a4", "a0", "a1"]).layers == FIG2_LAYERS


def test_normalize_empty(m1):
    assert normalize(m1, []) is not None
    assert normalize(m1, []).layers == ()


def test_normalize_unknown_letter(m1):
    with pytest.raises(SchemaError):
        normalize(m1, ["zz"])


def test_normalize_constant_on_congruence_class(m1):
    rng = random.Random(11)
    for _ in range(30):
        word = tuple(rng.choice(m1.letters) for _ in range(rng.randint(0, 8)))
        ref = normalize(m1, word).layers
        for w in congruence_class(m1, word):
            assert normalize(m1, w).layers == ref


def test_trace_from_layers_validates(m1):
    assert trace_from_layers(m1, FIG2_LAYERS).layers == FIG2_LAYERS
    with pytest.raises(ValidationError):
        trace_from_layers(m1, [("a0",), ("a4",)])  # a4 independent of a0
    with pytest.raises(ValidationError):
        trace_from_layers(m1, [()])


def test_concat_lengths_and_word_oracle(m1):
    x = normalize(m1, ["a0", "a3"])
    y = normalize(m1, ["a0", "a2", "a1", "a3", "a4"])
    z = concat(m1, x, y)
    assert z.layers == FIG2_LAYERS
    assert z.length == x.length + y.length


def test_concat_parallel_cliques(m2):
    a = normalize(m2, ["a"])
    c = normalize(m2, ["c"])
    assert concat(m2, a, c).layers == ((("a", "c")),)


def test_concat_associative_random(m2):
    rng = random.Random(5)
    for _ in range(25):
        ws = [
            normalize(m2, [rng.choice(m2.letters) for _ in range(rng.randint(0, 4))])
            for _ in range(3)
        ]
        left = concat(m2, concat(m2, ws[0], ws[1]), ws[2])
        right = concat(m2, ws[0], concat(m2, ws[1], ws[2]))
        assert left == right


def test_left_cancel_basics(m1):
    t = normalize(m1, FIG2_WORD)
    assert left_cancel(m1, t, t) == EPSILON
    rest = left_cancel(m1, normalize(m1, ["a0", "a3"]), t)
    assert rest == normalize(m1, ["a0", "a2", "a1", "a3", "a4"])
    free = TraceMonoid(["a", "b"], [])
    with pytest.raises(NotADivisorError):
        left_cancel(free, normalize(free, "b"), normalize(free, "a"))


def test_first_layer_characterizes_letter_divisors(m1, m2):
    # the engine fact behind left_cancel, checked against the word oracle
    for m in (m1, m2):
        rng = random.Random(3)
        for _ in range(20):
            word = tuple(rng.choice(m.letters) for _ in range(rng.randint(1, 8)))
            y = normalize(m, word)
            oracle = {w[0] for w in congruence_class(m, word)}
            assert set(y.first_layer()) == oracle


def test_divisors_against_word_oracle(m1):
    t = normalize(m1, FIG2_WORD[:6])
    got = {d.layers for d in divisors(m1, t)}
    assert got == brute_divisors(m1, t)


def test_divides_matches_divisor_set(m2):
    words = [w for k in range(4) for w in itertools.product(m2.letters, repeat=k)]
    y = normalize(m2, ["a", "c", "b", "d"])
    dset = brute_divisors(m2, y)
    for w in words:
        x = normalize(m2, w)
        assert divides(m2, x, y) == (x.layers in dset)


def _brute_meet(m, x, y):
    common = brute_divisors(m, x) & brute_divisors(m, y)
    return max(common, key=lambda layers: sum(map(len, layers)))


def _brute_join(m, x, y, n):
    candidates = [
        t
        for level in enumerate_traces(m, n)
        for t in level
        if divides(m, x, t) and divides(m, y, t)
    ]
    if not candidates:
        return None
    best = min(candidates, key=lambda t: t.length)
    # the l.u.b. must divide every common upper bound
    assert all(divides(m, best, t) for t in candidates)
    return best.layers


@pytest.mark.parametrize("name", ["m2", "m3"])
def test_meet_join_against_oracle(name, request):
    m = request.getfixturevalue(name)
    rng = random.Random(17)
    pool = [t for level in enumerate_traces(m, 3) for t in level]
    pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(40)]
    for x, y in pairs:
        g = meet(m, x, y)
        assert g.layers == _brute_meet(m, x, y)
        j = join(m, x, y)
        expected = _brute_join(m, x, y, x.length + y.length)
        assert (None if j is None else j.layers) == expected


def test_meet_of_cliques_is_intersection(m2):
    x = trace_from_layers(m2, [("a", "c")])
    y = trace_from_layers(m2, [("a",)])
    assert meet(m2, x, y) == y


def test_join_examples(m2):
    free = TraceMonoid(["a", "b"], [])
    assert join(free, normalize(free, "a"), normalize(free, "b")) is None
    j = join(m2, normalize(m2, "a"), normalize(m2, "c"))
    assert j is not None and j.layers == (("a", "c"),)
    x = normalize(m2, "ab")
    assert join(m2, x, x) == x


# -- lassos ------------------------------------------------------------------


def test_make_lasso_validates(m2):
    w = make_lasso(m2, [("a",)], [("b",), ("a",)])
    assert w.unroll(5) == (("a",), ("b",), ("a",), ("b",), ("a",))
    with pytest.raises(ValidationError):
        make_lasso(m2, [], [("a",), ("c",)])  # a,c independent: not normal
    with pytest.raises(ValidationError):
        make_lasso(m2, [("a",)], [()])


def test_lasso_wrap_pair_checked(m2):
    # in-cycle pairs fine, but the wrap c->a is not normal in M2
    with pytest.raises(ValidationError):
        make_lasso(m2, [], [("a", "c"), ("b", "d"), ("c",)])


def test_divisor_counts_free_commutative():
    m = TraceMonoid(["a", "b"], [("a", "b")])
    w = make_lasso(m, [], [("a", "b")])
    assert divisor_counts(m, w, 6) == [k + 1 for k in range(7)]


def test_divisor_counts_epsilon(m2):
    w = Lasso((), ())
    assert divisor_counts(m2, w, 4) == [1, 0, 0, 0, 0]


def test_divisor_counts_against_finite_enumeration(m2):
    w = make_lasso(m2, [], [("a", "c"), ("b", "d")])
    counts = divisor_counts(m2, w, 6)
    # oracle: divisors of a long unrolling, counted by length
    big = Trace(w.unroll(12))
    by_len = [0] * 13
    for d in divisors(m2, big):
        by_len[d.length] += 1
    assert counts == by_len[:7]


# -- projections -------------------------------------------------------------


def test_project_identity(m2):
    t = normalize(m2, ["a", "b", "a"])
    assert project(m2, m2, t) == t


def test_project_abelianization(m2):
    commutative = TraceMonoid(
        list(m2.letters),
        [(a, b) for i, a in enumerate(m2.letters) for b in m2.letters[i + 1:]],
    )
    t = normalize(m2, ["a", "b", "a"])
    image = project(m2, commutative, t)
    assert image.layers == (("a", "b"), ("a",))  # multiset {a:2, b:1}


def test_project_requires_nested_independence(m2):
    free = TraceMonoid(list(m2.letters), [])
    with pytest.raises(SchemaError):
        project(m2, free, normalize(m2, "ab"))


def test_project_morphism_property(m1):
    coarser = TraceMonoid(
        list(m1.letters),
        m1.independence + [("a0", "a1")],
    )
    rng = random.Random(23)
    for _ in range(20):
        x = normalize(m1, [rng.choice(m1.letters) for _ in range(4)])
        y = normalize(m1, [rng.choice(m1.letters) for _ in range(4)])
        lhs = project(m1, coarser, concat(m1, x, y))
        rhs = concat(coarser, project(m1, coarser, x), project(m1, coarser, y))
        assert lhs == rhs


def test_lemma1_injectivity_on_divisors(m1, m2):
    # projection to the free commutative monoid stays injective on the
    # divisors of any fixed trace
    for m, word in ((m1, FIG2_WORD[:6]), (m2, ["a", "c", "b", "d", "a", "b"])):
        commutative = TraceMonoid(
            list(m.letters),
            [(a, b) for i, a in enumerate(m.letters) for b in m.letters[i + 1:]],
        )
        t = normalize(m, word)
        images = [project(m, commutative, d).layers for d in divisors(m, t)]
        assert len(images) == len(set(images))


def test_project_lasso_roundtrip_identity(m2):
    w = make_lasso(m2, [("a",)], [("b",), ("a",)])
    image = project_lasso(m2, m2, w)
    assert image.unroll(9) == w.unroll(9)


def test_project_lasso_to_free_commutative(m1):
    commutative = TraceMonoid(
        list(m1.letters),
        [(a, b) for i, a in enumerate(m1.letters) for b in m1.letters[i + 1:]],
    )
    w = make_lasso(m1, [], [("a0", "a2"), ("a1", "a3"), ("a2",), ("a1",)])
    image = project_lasso(m1, commutative, w)
    assert image.cycle  # still infinite
    for n in (6, 10, 14):
        expect = normalize(commutative, Trace(w.unroll(n * 3)).word())
        got = Trace(image.unroll(len(expect.layers)))
        k = min(n, len(got.layers))
        assert got.layers[:k] == expect.layers[:k]


def test_project_lasso_finite(m2):
    w = Lasso((("a",),), ())
    image = project_lasso(m2, m2, w)
    assert image.is_finite and image.prefix == (("a",),)
