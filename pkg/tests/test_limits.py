import random

import pytest

import finlink as fl
from finlink.errors import BoundaryError, NotCommutative
from finlink.finset import constant
from finlink.limits import Square, is_biexact, pullback, pushout

from oracles import (
    pullback_by_universal_property,
    pushout_by_universal_property,
    random_commutative_square,
)


def fin(*labels):
    return fl.FinSet(labels)


# ---------------------------------------------------------------- pullback

def test_pullback_fiber_over_point():
    a, c = fin("a", "b"), fin("0")
    f = constant(a, c, "0")
    g = fl.FinMap(fin("c"), c, {"c": "0"})
    p, p1, p2 = pullback(f, g)
    assert len(p) == 2
    assert [p1(x) for x in p] == ["a", "b"]
    assert [p2(x) for x in p] == ["c", "c"]


def test_pullback_of_identities_is_diagonal():
    a = fin("x", "y")
    ident = fl.identity(a)
    p, p1, p2 = pullback(ident, ident)
    assert len(p) == 2
    assert all(p1(t) == p2(t) for t in p)


def test_pullback_of_source_target_cospan_z3(z3):
    # one object, so every pair of arrows is composable: 3^2 elements
    p, _, _ = pullback(z3.d, z3.c)
    assert len(p) == 9


def test_pullback_requires_cospan():
    a = fin("a")
    with pytest.raises(BoundaryError):
        pullback(fl.identity(a), fl.identity(fin("b")))


def test_pullback_is_deterministic():
    a, c = fin("a", "b"), fin("0")
    f = constant(a, c, "0")
    left = pullback(f, f)
    right = pullback(f, f)
    assert left[0] == right[0]
    assert left[1] == right[1] and left[2] == right[2]


# ---------------------------------------------------------------- pushout

def test_pushout_glues_single_point():
    star = fin("*")
    ab, cd = fin("a", "b"), fin("c", "d")
    f = fl.FinMap(star, ab, {"*": "a"})
    g = fl.FinMap(star, cd, {"*": "c"})
    q, q1, q2 = pushout(f, g)
    assert len(q) == 3
    assert q1("a") == q2("c")
    assert q1("b") != q1("a") and q2("d") != q2("c")


def test_pushout_of_equal_legs_glues_along_image():
    c = fin("t")
    ab = fin("a", "b")
    f = fl.FinMap(c, ab, {"t": "a"})
    q, q1, q2 = pushout(f, f)
    # a ~ a across the two copies; b stays split
    assert len(q) == 3
    assert q1("a") == q2("a")
    assert q1("b") != q2("b")


def test_pushout_of_composable_span_pair3(pair3):
    q, q1, q2 = pushout(pair3.pi1, pair3.pi2)
    assert len(q) == 3  # one class per object
    # classes of the left copy are indexed by the source object
    for x in pair3.c1:
        for y in pair3.c1:
            assert (q1(x) == q1(y)) == (pair3.d(x) == pair3.d(y))


def test_pushout_classes_partition_and_legs_jointly_surjective():
    star = fin("*")
    ab, cd = fin("a", "b"), fin("c", "d")
    f = fl.FinMap(star, ab, {"*": "a"})
    g = fl.FinMap(star, cd, {"*": "c"})
    q, q1, q2 = pushout(f, g)
    reached = {q1(x) for x in ab} | {q2(x) for x in cd}
    assert reached == set(q.elements)


def test_pushout_of_empty_span_is_disjoint_union():
    empty = fin()
    ab, cd = fin("a", "b"), fin("c")
    f = fl.FinMap(empty, ab, {})
    g = fl.FinMap(empty, cd, {})
    q, _, _ = pushout(f, g)
    assert len(q) == 3


# ------------------------------------------------------- square certification

def test_canonical_pullback_square_is_positive():
    a, c = fin("a", "b"), fin("0")
    f = constant(a, c, "0")
    g = fl.FinMap(fin("c"), c, {"c": "0"})
    p, p1, p2 = pullback(f, g)
    cert = fl.is_pullback_square(Square(top=p1, left=p2, right=f, bottom=g))
    assert cert.ok


def test_pullback_square_with_duplicated_apex_element():
    c = fin("0")
    a = fin("a")
    apex = fin("u", "v")  # two points over the same fiber element
    sq = Square(
        top=constant(apex, a, "a"),
        left=constant(apex, a, "a"),
        right=constant(a, c, "0"),
        bottom=constant(a, c, "0"),
    )
    cert = fl.is_pullback_square(sq)
    assert not cert.ok
    assert cert.reason == "apex-collision"
    assert cert.witness == ("u", "v")


def test_composable_pairs_square_of_z2_is_pullback(z2):
    cert = fl.is_pullback_square(
        Square(top=z2.pi2, left=z2.pi1, right=z2.c, bottom=z2.d)
    )
    assert cert.ok


def test_canonical_pushout_square_is_positive():
    star = fin("*")
    ab, cd = fin("a", "b"), fin("c", "d")
    f = fl.FinMap(star, ab, {"*": "a"})
    g = fl.FinMap(star, cd, {"*": "c"})
    q, q1, q2 = pushout(f, g)
    cert = fl.is_pushout_square(Square(top=f, left=g, right=q1, bottom=q2))
    assert cert.ok


def test_pushout_square_with_unreached_corner():
    star = fin("*")
    ab = fin("a")
    big = fin("q", "extra")
    sq = Square(
        top=fl.FinMap(star, ab, {"*": "a"}),
        left=fl.FinMap(star, ab, {"*": "a"}),
        right=constant(ab, big, "q"),
        bottom=constant(ab, big, "q"),
    )
    cert = fl.is_pushout_square(sq)
    assert not cert.ok
    assert cert.reason == "corner-unreached"
    assert cert.witness == ("extra",)


def test_bottom_square_of_pair2_completion_is_pushout(pair2):
    completion = is_biexact(pair2.pi1, pair2.pi2)
    cert = fl.is_pushout_square(
        Square(top=pair2.pi2, left=pair2.pi1, right=pair2.c, bottom=pair2.d)
    )
    assert cert.ok
    assert len(completion.c0) == 2


def test_non_commuting_square_raises_with_witness():
    a = fin("a", "b")
    two = fin("0", "1")
    swap = fl.FinMap(a, a, {"a": "b", "b": "a"})
    f = fl.FinMap(a, two, {"a": "0", "b": "1"})
    with pytest.raises(NotCommutative) as err:
        fl.is_pullback_square(Square(top=swap, left=fl.identity(a), right=f, bottom=f))
    assert err.value.witness == "a"


# ------------------------------------------------------------- bi-exactness

def test_biexact_z2_projection_pair(z2):
    completion = is_biexact(z2.pi1, z2.pi2)
    assert completion.ok
    assert len(completion.c3) == 8
    assert len(completion.c0) == 1


def test_biexact_identity_pair_on_singleton():
    x = fin("x")
    ident = fl.identity(x)
    completion = is_biexact(ident, ident)
    assert completion.ok
    assert len(completion.c3) == 1
    assert len(completion.c0) == 1


def test_distinct_constant_maps_are_not_biexact():
    ab = fin("a", "b")
    two = fin("0", "1")
    completion = is_biexact(constant(ab, two, "0"), constant(ab, two, "1"))
    assert not completion.ok
    assert "bottom-pullback" in completion.failures()


def test_biexact_requires_parallel_pair():
    with pytest.raises(BoundaryError):
        is_biexact(fl.identity(fin("a")), fl.identity(fin("b")))


# ----------------------------------------------- universal-property oracles

def test_certifiers_match_universal_property_oracles_spot():
    rng = random.Random(7)
    for _ in range(60):
        sq = random_commutative_square(rng)
        assert fl.is_pullback_square(sq).ok == pullback_by_universal_property(sq)
        assert fl.is_pushout_square(sq).ok == pushout_by_universal_property(sq)


def test_canonical_constructions_satisfy_their_own_certificates():
    rng = random.Random(13)
    for _ in range(40):
        sq = random_commutative_square(rng)
        p, p1, p2 = pullback(sq.right, sq.bottom)
        assert fl.is_pullback_square(
            Square(top=p1, left=p2, right=sq.right, bottom=sq.bottom)
        ).ok
        q, q1, q2 = pushout(sq.top, sq.left)
        assert fl.is_pushout_square(
            Square(top=sq.top, left=sq.left, right=q1, bottom=q2)
        ).ok
