import pytest

import finlink as fl
from finlink.equivalence import functoriality_report
from finlink.errors import NotLinkMorphism, SizeLimitExceeded


def induced_pair_map(f1, g, h):
    table = {u: h.pair(f1(g.pi1(u)), f1(g.pi2(u))) for u in g.c2}
    return fl.FinMap(g.c2, h.c2, table)


# ------------------------------------------------------------------ to_link

def test_to_link_valid_on_corpus(corpus_groupoids):
    for name, g in corpus_groupoids.items():
        link = fl.to_link(g)
        assert fl.validate_link(link).ok, name
        assert fl.compose(link.m, link.phi) == g.pi1, name
        assert fl.compose(link.m, link.theta) == g.pi2, name


def test_to_link_discrete_singleton_gives_identities():
    g = fl.discrete(["a"])
    link = fl.to_link(g)
    assert link.theta == fl.identity(link.c2)
    assert link.phi == fl.identity(link.c2)


def test_to_link_pair2_size(pair2):
    link = fl.to_link(pair2)
    assert len(link.c2) == 8
    assert fl.validate_link(link).ok


def test_to_link_sections_are_unit_brackets(corpus_groupoids):
    for name, g in corpus_groupoids.items():
        link = fl.to_link(g)
        res = fl.check_unital(link)
        assert res.ok, name
        cert = res.certificate
        for x in g.c1:
            assert cert.e1(x) == g.pair(x, g.e(g.d(x))), name
            assert cert.e2(x) == g.pair(g.e(g.c(x)), x), name
        # the derived inversion map is the groupoid's own
        assert cert.i == g.i, name


# ---------------------------------------------------------------- from_link

def test_from_link_singleton_identity_link():
    c2 = fl.FinSet(["p"])
    ident = fl.identity(c2)
    link = fl.Link(c2=c2, c1=c2, theta=ident, phi=ident, m=ident)
    g = fl.from_link(link)
    assert fl.validate(g).ok
    assert len(g.c0) == 1 and len(g.c1) == 1


def test_from_link_rejects_non_unital(z2):
    link = fl.to_link(z2)
    conj = {u: link.theta(link.phi(link.theta(u))) for u in link.c2}
    twisted = fl.Link(
        c2=link.c2, c1=link.c1, theta=link.theta,
        phi=fl.FinMap(link.c2, link.c2, conj), m=link.m,
    )
    with pytest.raises(fl.InvalidLink):
        fl.from_link(twisted)


def test_reconstruction_reuses_carriers(z2):
    link = fl.to_link(z2)
    g = fl.from_link(link)
    assert g.c1 == link.c1 and g.c2 == link.c2
    assert g.m == link.m
    assert len(g.c0) == 1


def test_identity_section_agreement_after_reconstruction(corpus_groupoids):
    # both sections collapse to the same identity-assigning map
    for name, g in corpus_groupoids.items():
        link = fl.to_link(g)
        h = fl.from_link(link)
        cert = fl.check_unital(link).certificate
        lhs = fl.compose(cert.e1, h.e)
        rhs = fl.compose(cert.e2, h.e)
        assert lhs == rhs, name
        inv = cert.i
        assert fl.compose(inv, inv) == fl.identity(link.c1), name


# --------------------------------------------------------------- round trip

def test_round_trip_corpus(corpus_groupoids):
    for name, g in corpus_groupoids.items():
        rep = fl.round_trip(g)
        assert rep.ok, f"{name}: {[c.line() for c in rep.checks if not c.ok]}"


def test_round_trip_bijection_on_singleton(z2):
    rep = fl.round_trip(z2)
    assert rep.c0_bijection is not None
    assert len(rep.c0_bijection.dom) == 1


def test_round_trip_disjoint_union_components(z2_with_pair2):
    rep = fl.round_trip(z2_with_pair2)
    assert rep.ok
    bij = rep.c0_bijection
    assert bij is not None and bij.is_bijective()
    assert len(bij.dom) == 3


def test_link_of_reconstruction_is_table_identical(corpus_groupoids):
    for name, g in corpus_groupoids.items():
        link = fl.to_link(g)
        again = fl.to_link(fl.from_link(link))
        assert again.theta == link.theta, name
        assert again.phi == link.phi, name
        assert again.m == link.m, name


# ------------------------------------------------------------ lift_morphism

def test_lift_identity(z2):
    mor = fl.lift_morphism(fl.identity(z2.c2), fl.identity(z2.c1), z2, z2)
    assert mor.f0 == fl.identity(z2.c0)


def test_lift_z3_inversion_automorphism(z3):
    f1 = fl.FinMap(z3.c1, z3.c1, {a: str((-int(a)) % 3) for a in z3.c1})
    f2 = induced_pair_map(f1, z3, z3)
    mor = fl.lift_morphism(f2, f1, z3, z3)
    assert mor.f0 == fl.identity(z3.c0)
    assert mor.f1 == f1
    assert fl.is_groupoid_morphism(mor.f2, mor.f1, mor.f0, z3, z3)


def test_lift_injective_group_embedding(z2):
    labels = ["00", "01", "10", "11"]
    xor = lambda a, b: "".join(str(int(p) ^ int(q)) for p, q in zip(a, b))
    k4 = fl.from_group({a: {b: xor(a, b) for b in labels} for a in labels}, "00")
    f1 = fl.FinMap(z2.c1, k4.c1, {"0": "00", "1": "10"})
    f2 = induced_pair_map(f1, z2, k4)
    mor = fl.lift_morphism(f2, f1, z2, k4)
    assert len(mor.f0.dom) == 1
    assert fl.is_groupoid_morphism(mor.f2, mor.f1, mor.f0, z2, k4)


def test_lift_rejects_non_morphism(z2):
    elems = list(z2.c2.elements)
    moved = {u: v for u, v in zip(elems, elems[1:] + elems[:1])}
    f2 = fl.FinMap(z2.c2, z2.c2, moved)
    with pytest.raises(NotLinkMorphism):
        fl.lift_morphism(f2, fl.identity(z2.c1), z2, z2)


def test_functoriality_of_composites(z3):
    f1 = fl.FinMap(z3.c1, z3.c1, {a: str((-int(a)) % 3) for a in z3.c1})
    f2 = induced_pair_map(f1, z3, z3)
    mor = fl.lift_morphism(f2, f1, z3, z3)
    rep = functoriality_report(z3, z3, mor)
    assert rep.ok
    # inversion is an involution, so the composite is the identity morphism
    comp1 = fl.compose(mor.f1, mor.f1)
    assert comp1 == fl.identity(z3.c1)


# --------------------------------------------------------- count_morphisms

def test_count_morphisms_z2_endomorphisms(z2):
    assert fl.count_morphisms(z2, z2) == (2, 2)


def test_count_morphisms_point_into_z3(z3):
    point = fl.discrete(["a"])
    n_groupoid, n_link = fl.count_morphisms(point, z3)
    assert n_groupoid == n_link == 1


def test_count_morphisms_empty_source(z3):
    e = fl.FinSet([])
    em = fl.FinMap(e, e, {})
    empty = fl.Groupoid(c0=e, c1=e, c2=e, d=em, c=em, e=em, i=em, pi1=em, pi2=em, m=em)
    assert fl.count_morphisms(empty, z3) == (1, 1)


def test_count_morphisms_group_homomorphism_counts(z2, z3):
    # no nontrivial homomorphisms between coprime cyclic groups
    assert fl.count_morphisms(z2, z3) == (1, 1)
    assert fl.count_morphisms(z3, z2) == (1, 1)


def test_count_morphisms_respects_cap(pair3):
    with pytest.raises(SizeLimitExceeded):
        fl.count_morphisms(pair3, pair3, max_c2=10)
