"""Internal groupoids in finite sets.

A groupoid is stored as three carriers with seven structure maps

    c2 (pairs) --pi1,pi2,m--> c1 (arrows) --d,c--> c0 (objects),
    e: c0 -> c1,  i: c1 -> c1.

c2 is *any* finite set presenting the composable pairs: pi1 and pi2 are
stored explicitly and pairs <u, v> are realized by inverting the jointly
monic pair (pi1, pi2).  Reconstruction from links produces abstract
carriers, so nothing assumes c2 is literally a set of pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import BoundaryError, NotAGroup
from .finset import FinMap, FinSet, compose, identity, joint_mono_witness, tuple_label
from .limits import Square, is_pullback_square, pullback
from .report import ValidationReport


@dataclass
class Groupoid:
    c0: FinSet
    c1: FinSet
    c2: FinSet
    d: FinMap
    c: FinMap
    e: FinMap
    i: FinMap
    pi1: FinMap
    pi2: FinMap
    m: FinMap
    _fiber: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        expected = [
            (self.d, self.c1, self.c0, "d"),
            (self.c, self.c1, self.c0, "c"),
            (self.e, self.c0, self.c1, "e"),
            (self.i, self.c1, self.c1, "i"),
            (self.pi1, self.c2, self.c1, "pi1"),
            (self.pi2, self.c2, self.c1, "pi2"),
            (self.m, self.c2, self.c1, "m"),
        ]
        for f, dom, cod, name in expected:
            if f.dom != dom or f.cod != cod:
                raise BoundaryError(f"map {name} has the wrong boundary")
        fiber: dict[tuple[str, str], list[str]] = {}
        for u in self.c2:
            fiber.setdefault((self.pi1(u), self.pi2(u)), []).append(u)
        self._fiber = fiber

    def pair(self, a: str, b: str) -> str | None:
        """The unique composable pair with components (a, b), if exactly one exists."""
        hits = self._fiber.get((a, b), [])
        return hits[0] if len(hits) == 1 else None

    def pair_candidates(self, a: str, b: str) -> list[str]:
        return self._fiber.get((a, b), [])


@dataclass
class GroupoidMorphism:
    f2: FinMap
    f1: FinMap
    f0: FinMap


def _maps_equal_witness(f: FinMap, g: FinMap) -> str | None:
    for x in f.dom:
        if f(x) != g(x):
            return x
    return None


def validate(g: Groupoid) -> ValidationReport:
    """Check every groupoid axiom, collecting all failures with witnesses."""
    rep = ValidationReport("groupoid")
    idc0 = identity(g.c0)
    idc1 = identity(g.c1)

    def eq(name: str, f: FinMap, h: FinMap) -> None:
        w = _maps_equal_witness(f, h)
        rep.add(name, w is None, w)

    eq("source-section", compose(g.d, g.e), idc0)
    eq("target-section", compose(g.c, g.e), idc0)
    eq("source-of-composite", compose(g.d, g.m), compose(g.d, g.pi2))
    eq("target-of-composite", compose(g.c, g.m), compose(g.c, g.pi1))
    eq("middle-match", compose(g.d, g.pi1), compose(g.c, g.pi2))
    eq("inverse-swaps-source", compose(g.d, g.i), g.c)
    eq("inverse-swaps-target", compose(g.c, g.i), g.d)
    eq("inverse-involutive", compose(g.i, g.i), idc1)
    eq("inverse-fixes-identities", compose(g.i, g.e), g.e)

    # composable pairs form the fiber product of d and c
    sq = Square(top=g.pi2, left=g.pi1, right=g.c, bottom=g.d)
    w = sq.commutes_witness()
    if w is not None:
        rep.add("composable-pairs-pullback", False, w)
    else:
        cert = is_pullback_square(sq)
        rep.add(
            "composable-pairs-pullback",
            cert.ok,
            None if cert.ok else f"{cert.reason}:{','.join(cert.witness)}",
        )

    def via_pair(name: str, comp1, comp2, want) -> None:
        """m<comp1, comp2> == want, realized through the stored pair index."""
        for x in g.c1:
            u = g.pair(comp1(x), comp2(x))
            if u is None:
                rep.add(name, False, f"no unique pair for {x!r}")
                return
            if g.m(u) != want(x):
                rep.add(name, False, x)
                return
        rep.add(name, True)

    via_pair("right-unit", lambda x: x, lambda x: g.e(g.d(x)), lambda x: x)
    via_pair("left-unit", lambda x: g.e(g.c(x)), lambda x: x, lambda x: x)
    via_pair("right-inverse", lambda x: x, lambda x: g.i(x), lambda x: g.e(g.c(x)))
    via_pair("left-inverse", lambda x: g.i(x), lambda x: x, lambda x: g.e(g.d(x)))

    # associativity over the canonical composable-triples carrier
    c3, p1, p2 = pullback(compose(g.d, g.pi2), g.c)
    rep.add("composable-triples", True)
    witness = None
    for w3 in c3:
        u, h = p1(w3), p2(w3)
        left = g.pair(g.m(u), h)  # compose the outer pair first
        inner = g.pair(g.pi2(u), h)
        if left is None or inner is None:
            witness = f"unrealized pair for triple {w3!r}"
            break
        right = g.pair(g.pi1(u), g.m(inner))
        if right is None:
            witness = f"unrealized pair for triple {w3!r}"
            break
        if g.m(left) != g.m(right):
            witness = w3
            break
    rep.add("associativity", witness is None, witness)
    return rep


def from_group(table: dict[str, dict[str, str]], unit: str) -> Groupoid:
    """One-object groupoid of a finite group given by its multiplication table."""
    elems = list(table.keys())
    for a in elems:
        if set(table[a].keys()) != set(elems):
            raise NotAGroup("totality", a)
    if unit not in elems:
        raise NotAGroup("unit-membership", unit)
    for a in elems:
        if table[unit][a] != a or table[a][unit] != a:
            raise NotAGroup("unit", a)
    for a, b, cc in product(elems, repeat=3):
        if table[table[a][b]][cc] != table[a][table[b][cc]]:
            raise NotAGroup("associativity", f"{a},{b},{cc}")
    inverse: dict[str, str] = {}
    for a in elems:
        inv = [b for b in elems if table[a][b] == unit and table[b][a] == unit]
        if not inv:
            raise NotAGroup("inverses", a)
        inverse[a] = inv[0]

    c0 = FinSet(["*"])
    c1 = FinSet(elems)
    pair_labels = [tuple_label(a, b) for a in elems for b in elems]
    c2 = FinSet(pair_labels)
    t1, t2, tm = {}, {}, {}
    for a in elems:
        for b in elems:
            lab = tuple_label(a, b)
            t1[lab], t2[lab], tm[lab] = a, b, table[a][b]
    return Groupoid(
        c0=c0,
        c1=c1,
        c2=c2,
        d=FinMap(c1, c0, {a: "*" for a in elems}),
        c=FinMap(c1, c0, {a: "*" for a in elems}),
        e=FinMap(c0, c1, {"*": unit}),
        i=FinMap(c1, c1, inverse),
        pi1=FinMap(c2, c1, t1),
        pi2=FinMap(c2, c1, t2),
        m=FinMap(c2, c1, tm),
    )


def pair_groupoid(objects) -> Groupoid:
    """Indiscrete groupoid: exactly one arrow (i, j) from j to i."""
    objs = list(objects)
    c0 = FinSet(objs)
    arrows = [(i, j) for i in objs for j in objs]
    arrow_label = {a: tuple_label(*a) for a in arrows}
    c1 = FinSet([arrow_label[a] for a in arrows])
    comp = [(a, b) for a in arrows for b in arrows if a[1] == b[0]]
    c2 = FinSet([tuple_label(arrow_label[a], arrow_label[b]) for a, b in comp])
    t1, t2, tm = {}, {}, {}
    for a, b in comp:
        lab = tuple_label(arrow_label[a], arrow_label[b])
        t1[lab] = arrow_label[a]
        t2[lab] = arrow_label[b]
        tm[lab] = arrow_label[(a[0], b[1])]
    return Groupoid(
        c0=c0,
        c1=c1,
        c2=c2,
        d=FinMap(c1, c0, {arrow_label[a]: a[1] for a in arrows}),
        c=FinMap(c1, c0, {arrow_label[a]: a[0] for a in arrows}),
        e=FinMap(c0, c1, {x: arrow_label[(x, x)] for x in objs}),
        i=FinMap(c1, c1, {arrow_label[a]: arrow_label[(a[1], a[0])] for a in arrows}),
        pi1=FinMap(c2, c1, t1),
        pi2=FinMap(c2, c1, t2),
        m=FinMap(c2, c1, tm),
    )


def discrete(objects) -> Groupoid:
    """Identity-only groupoid on the given objects."""
    objs = list(objects)
    c0 = FinSet(objs)
    c1 = FinSet(objs)
    c2 = FinSet([tuple_label(x, x) for x in objs])
    ident = {x: x for x in objs}
    return Groupoid(
        c0=c0,
        c1=c1,
        c2=c2,
        d=FinMap(c1, c0, ident),
        c=FinMap(c1, c0, ident),
        e=FinMap(c0, c1, ident),
        i=FinMap(c1, c1, ident),
        pi1=FinMap(c2, c1, {tuple_label(x, x): x for x in objs}),
        pi2=FinMap(c2, c1, {tuple_label(x, x): x for x in objs}),
        m=FinMap(c2, c1, {tuple_label(x, x): x for x in objs}),
    )


def disjoint_union(g: Groupoid, h: Groupoid) -> Groupoid:
    """Levelwise disjoint union, with 'l'/'r'-tagged labels."""

    def tag_set(a: FinSet, b: FinSet) -> tuple[FinSet, dict, dict]:
        la = {x: tuple_label("l", x) for x in a}
        rb = {x: tuple_label("r", x) for x in b}
        return FinSet([la[x] for x in a] + [rb[x] for x in b]), la, rb

    c0, l0, r0 = tag_set(g.c0, h.c0)
    c1, l1, r1 = tag_set(g.c1, h.c1)
    c2, l2, r2 = tag_set(g.c2, h.c2)

    def tag_map(f: FinMap, fh: FinMap, dom, ldom, rdom, cod, lcod, rcod) -> FinMap:
        table = {ldom[x]: lcod[f(x)] for x in f.dom}
        table.update({rdom[x]: rcod[fh(x)] for x in fh.dom})
        return FinMap(dom, cod, table)

    return Groupoid(
        c0=c0,
        c1=c1,
        c2=c2,
        d=tag_map(g.d, h.d, c1, l1, r1, c0, l0, r0),
        c=tag_map(g.c, h.c, c1, l1, r1, c0, l0, r0),
        e=tag_map(g.e, h.e, c0, l0, r0, c1, l1, r1),
        i=tag_map(g.i, h.i, c1, l1, r1, c1, l1, r1),
        pi1=tag_map(g.pi1, h.pi1, c2, l2, r2, c1, l1, r1),
        pi2=tag_map(g.pi2, h.pi2, c2, l2, r2, c1, l1, r1),
        m=tag_map(g.m, h.m, c2, l2, r2, c1, l1, r1),
    )


def groupoid_morphism_witness(
    f2: FinMap, f1: FinMap, f0: FinMap, g: Groupoid, h: Groupoid
) -> tuple[str, str] | None:
    """First violated commuting condition as (condition, element), or None."""
    if f2.dom != g.c2 or f2.cod != h.c2:
        raise BoundaryError("f2 must map the pair carriers")
    if f1.dom != g.c1 or f1.cod != h.c1:
        raise BoundaryError("f1 must map the arrow carriers")
    if f0.dom != g.c0 or f0.cod != h.c0:
        raise BoundaryError("f0 must map the object carriers")
    conditions = [
        ("d", compose(h.d, f1), compose(f0, g.d)),
        ("c", compose(h.c, f1), compose(f0, g.c)),
        ("e", compose(h.e, f0), compose(f1, g.e)),
        ("i", compose(h.i, f1), compose(f1, g.i)),
        ("pi1", compose(h.pi1, f2), compose(f1, g.pi1)),
        ("pi2", compose(h.pi2, f2), compose(f1, g.pi2)),
        ("m", compose(h.m, f2), compose(f1, g.m)),
    ]
    for name, lhs, rhs in conditions:
        w = _maps_equal_witness(lhs, rhs)
        if w is not None:
            return (name, w)
    return None


def is_groupoid_morphism(f2: FinMap, f1: FinMap, f0: FinMap, g: Groupoid, h: Groupoid) -> bool:
    return groupoid_morphism_witness(f2, f1, f0, g, h) is None


def jointly_mono_checks(g: Groupoid) -> ValidationReport:
    """Separation properties every valid groupoid enjoys."""
    rep = ValidationReport("jointly-mono")
    for name, f, k in [
        ("m-with-pi1", g.m, g.pi1),
        ("m-with-pi2", g.m, g.pi2),
        ("pi1-with-pi2", g.pi1, g.pi2),
    ]:
        w = joint_mono_witness(f, k)
        rep.add(name, w is None, None if w is None else f"{w[0]},{w[1]}")
    return rep
