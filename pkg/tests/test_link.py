import pytest

import finlink as fl
from finlink.errors import InvalidLink
from finlink.finset import tuple_label
from finlink.link import link_morphism_witness


def identity_link(labels=("p", "q")):
    c2 = fl.FinSet(labels)
    ident = fl.identity(c2)
    return fl.Link(c2=c2, c1=c2, theta=ident, phi=ident, m=ident)


def mutate(f, at, to):
    table = dict(f.table)
    table[at] = to
    return fl.FinMap(f.dom, f.cod, table)


# ------------------------------------------------------------- validation

def test_identity_link_is_valid():
    rep = fl.validate_link(identity_link())
    assert rep.ok


def test_z2_link_tables_and_validity(z2):
    link = fl.to_link(z2)
    # theta sends a pair to (inverse of outer, composite); over the 2-element
    # group inversion is the identity
    expected_theta = {
        tuple_label(a, b): tuple_label(a, str((int(a) + int(b)) % 2))
        for a in ("0", "1")
        for b in ("0", "1")
    }
    expected_phi = {
        tuple_label(a, b): tuple_label(str((int(a) + int(b)) % 2), b)
        for a in ("0", "1")
        for b in ("0", "1")
    }
    assert link.theta.table == expected_theta
    assert link.phi.table == expected_phi
    assert fl.validate_link(link).ok


def test_corrupted_involution_reports_witness(z2):
    link = fl.to_link(z2)
    first, second = link.c2.elements[0], link.c2.elements[1]
    bad = fl.Link(
        c2=link.c2, c1=link.c1,
        theta=mutate(link.theta, first, link.theta(second)),
        phi=link.phi, m=link.m,
    )
    rep = fl.validate_link(bad)
    assert not rep.ok
    names = {c.name for c in rep.failures}
    assert "theta-involutive" in names


# ---------------------------------------------------------- dihedral order

def closure_order(perms: list[dict]) -> int:
    """Independent oracle: saturate under pairwise composition."""
    group = {tuple(sorted(p.items())) for p in perms}
    group.add(tuple(sorted({k: k for k in perms[0]}.items())))
    while True:
        fresh = set()
        for a in group:
            da = dict(a)
            for b in group:
                db = dict(b)
                comp = tuple(sorted({k: da[db[k]] for k in db}.items()))
                if comp not in group:
                    fresh.add(comp)
        if not fresh:
            return len(group)
        group |= fresh


def test_dihedral_order_identity_link():
    assert fl.dihedral_order(identity_link()) == 1


def test_dihedral_order_two_when_theta_equals_phi():
    c2 = fl.FinSet(["p", "q"])
    swap = fl.FinMap(c2, c2, {"p": "q", "q": "p"})
    link = fl.Link(c2=c2, c1=c2, theta=swap, phi=swap, m=fl.identity(c2))
    assert fl.dihedral_order(link) == 2


def test_dihedral_order_z2_link(z2):
    assert fl.dihedral_order(fl.to_link(z2)) == 6


def test_dihedral_order_matches_closure_oracle_pair3(pair3):
    link = fl.to_link(pair3)
    expected = closure_order([dict(link.theta.table), dict(link.phi.table)])
    assert fl.dihedral_order(link) == expected == 6


def test_dihedral_order_divides_six_on_corpus(corpus_groupoids):
    for name, g in corpus_groupoids.items():
        if len(g.c2) == 0:
            continue
        assert 6 % fl.dihedral_order(fl.to_link(g)) == 0, name


def test_dihedral_order_requires_valid_link(z2):
    link = fl.to_link(z2)
    first, second = link.c2.elements[0], link.c2.elements[1]
    bad = fl.Link(
        c2=link.c2, c1=link.c1,
        theta=mutate(link.theta, first, link.theta(second)),
        phi=link.phi, m=link.m,
    )
    with pytest.raises(InvalidLink):
        fl.dihedral_order(bad)


# ------------------------------------------------------------- unitality

def test_unital_z2_link_sections(z2):
    link = fl.to_link(z2)
    res = fl.check_unital(link)
    assert res.ok
    cert = res.certificate
    assert cert.unique and cert.solutions == 1
    # e1 pairs an arrow with the identity at its source; e2 the other way
    expected_e1 = {x: tuple_label(x, "0") for x in ("0", "1")}
    expected_e2 = {x: tuple_label("0", x) for x in ("0", "1")}
    assert cert.e1.table == expected_e1
    assert cert.e2.table == expected_e2
    assert cert.i.table == {"0": "0", "1": "1"}  # inversion in the 2-element group


def test_unital_equations_hold_pointwise(s3):
    link = fl.to_link(s3)
    res = fl.check_unital(link)
    assert res.ok
    cert = res.certificate
    m, th, ph = link.m, link.theta, link.phi
    for x in link.c1:
        assert m(cert.e1(x)) == x and m(cert.e2(x)) == x
        assert th(cert.e2(x)) == cert.e2(x)
        assert ph(cert.e1(x)) == cert.e1(x)
        assert m(th(ph(cert.e2(x)))) == m(ph(th(cert.e1(x))))
    for u in link.c2:
        mph, mth = m(ph(u)), m(th(u))
        assert m(th(cert.e1(mph))) == m(ph(cert.e2(mth)))
        assert m(th(cert.e1(m(u)))) == m(th(cert.e1(mth)))
        assert m(ph(cert.e2(m(u)))) == m(ph(cert.e2(mph)))


def test_identity_link_is_unital_with_identity_sections():
    link = identity_link()
    res = fl.check_unital(link)
    assert res.ok
    assert res.certificate.e1 == fl.identity(link.c2)
    assert res.certificate.e2 == fl.identity(link.c2)
    assert res.certificate.i == fl.identity(link.c2)


def test_corrupted_multiplication_fails_unitality(z2):
    link = fl.to_link(z2)
    first = link.c2.elements[0]
    other = "1" if link.m(first) == "0" else "0"
    bad = fl.Link(
        c2=link.c2, c1=link.c1, theta=link.theta, phi=link.phi,
        m=mutate(link.m, first, other),
    )
    assert fl.validate_link(bad).ok
    res = fl.check_unital(bad)
    assert not res.ok
    assert res.failure in ("not-jointly-mono", "not-unital")
    assert res.witness


def test_conjugated_phi_breaks_unitality_but_not_structure(z2):
    link = fl.to_link(z2)
    conj = {u: link.theta(link.phi(link.theta(u))) for u in link.c2}
    twisted = fl.Link(
        c2=link.c2, c1=link.c1, theta=link.theta,
        phi=fl.FinMap(link.c2, link.c2, conj), m=link.m,
    )
    assert fl.validate_link(twisted).ok
    res = fl.check_unital(twisted)
    assert not res.ok
    assert res.failure == "not-jointly-mono"
    assoc = fl.check_associative(twisted)
    assert assoc.ok


def test_unique_sections_on_corpus(corpus_groupoids):
    for name, g in corpus_groupoids.items():
        res = fl.check_unital(fl.to_link(g))
        assert res.ok and res.certificate.unique, name


# ---------------------------------------------------------- associativity

def test_associative_z3_link(z3):
    link = fl.to_link(z3)
    res = fl.check_associative(link)
    assert res.ok
    cert = res.certificate
    assert len(cert.completion.c3) == 27
    assert len(cert.completion.c0) == 1
    for w in cert.completion.c3:
        assert link.m(cert.m1(w)) == link.m(cert.m2(w))


def test_singleton_link_is_associative():
    link = identity_link(labels=("p",))
    res = fl.check_associative(link)
    assert res.ok
    assert len(res.certificate.completion.c3) == 1


def test_rebracketing_maps_have_prescribed_components(z2):
    link = fl.to_link(z2)
    res = fl.check_associative(link)
    cert = res.certificate
    pi1 = fl.compose(link.m, link.phi)
    pi2 = fl.compose(link.m, link.theta)
    comp = cert.completion
    for w in comp.c3:
        u, v = comp.p1(w), comp.p2(w)
        assert pi1(cert.m1(w)) == link.m(u)
        assert pi2(cert.m1(w)) == pi2(v)
        assert pi1(cert.m2(w)) == pi1(u)
        assert pi2(cert.m2(w)) == link.m(v)


def test_checks_are_deterministic(z3):
    link = fl.to_link(z3)
    first = fl.check_unital(link)
    second = fl.check_unital(link)
    assert first.certificate.e1 == second.certificate.e1
    assert first.certificate.e2 == second.certificate.e2
    a1 = fl.check_associative(link)
    a2 = fl.check_associative(link)
    assert a1.certificate.m1 == a2.certificate.m1


# ------------------------------------------------------------- morphisms

def test_identity_pair_is_link_morphism(z2):
    link = fl.to_link(z2)
    assert fl.is_link_morphism(
        fl.identity(link.c2), fl.identity(link.c1), link, link
    )


def test_breaking_theta_compatibility_is_reported(z2):
    link = fl.to_link(z2)
    elems = list(link.c2.elements)
    moved = {u: v for u, v in zip(elems, elems[1:] + elems[:1])}
    f2 = fl.FinMap(link.c2, link.c2, moved)
    w = link_morphism_witness(f2, fl.identity(link.c1), link, link)
    assert w is not None
    assert w[0] in ("theta", "phi", "m")
