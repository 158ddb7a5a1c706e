"""Both directions of the groupoid / unital-associative-link correspondence.

`to_link` forgets the object level of a valid groupoid; `from_link` rebuilds
a groupoid from a unital associative link, reusing the link's carriers so
that to_link(from_link(L)) reproduces L on the nose.  Only the object set is
minted fresh (as pushout classes), and `round_trip` matches it against the
original through the unique structure-compatible bijection.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InvalidGroupoid,
    InvalidLink,
    InternalInconsistency,
    NotLinkMorphism,
    ReconstructionError,
    SizeLimitExceeded,
)
from .finset import FinMap, compose
from .groupoid import (
    Groupoid,
    GroupoidMorphism,
    groupoid_morphism_witness,
    validate,
)
from .link import (
    Link,
    check_associative,
    check_unital,
    link_morphism_witness,
    validate_link,
)
from .report import Check, ValidationReport


def to_link(g: Groupoid) -> Link:
    """Contract a groupoid to its multiplication plus the two involutions.

    theta sends a composable pair to (inverse of the outer arrow, composite);
    phi sends it to (composite, inverse of the inner arrow).  Both are
    realized through the jointly monic component pair (pi1, pi2).
    """
    if not validate(g).ok:
        raise InvalidGroupoid("to_link requires a valid groupoid")
    t_theta, t_phi = {}, {}
    for u in g.c2:
        th = g.pair(g.i(g.pi1(u)), g.m(u))
        ph = g.pair(g.m(u), g.i(g.pi2(u)))
        if th is None or ph is None:
            raise InvalidGroupoid(f"component pair not realized at {u!r}")
        t_theta[u], t_phi[u] = th, ph
    link = Link(
        c2=g.c2,
        c1=g.c1,
        theta=FinMap(g.c2, g.c2, t_theta),
        phi=FinMap(g.c2, g.c2, t_phi),
        m=g.m,
    )
    # derived identities of the construction; violations indicate a bug
    mph = compose(link.m, link.phi)
    mth = compose(link.m, link.theta)
    checks = [
        (mph, g.pi1),
        (mth, g.pi2),
        (compose(g.pi1, link.phi), g.m),
        (compose(g.pi1, link.theta), compose(g.i, g.pi1)),
        (compose(g.pi2, link.phi), compose(g.i, g.pi2)),
        (compose(g.pi2, link.theta), g.m),
    ]
    for lhs, rhs in checks:
        if lhs != rhs:
            raise InternalInconsistency("derived identity of to_link failed")
    if not validate_link(link).ok:
        raise InternalInconsistency("to_link produced an invalid link")
    return link


def from_link(link: Link) -> Groupoid:
    """Rebuild the groupoid presented by a unital associative link.

    Carriers c2, c1 are reused; objects are the pushout classes of the
    parallel pair (m.phi, m.theta).  The identity-assigning map is read off
    the sections on both source and target images, with the overlap
    consistency made an explicit check so a failure pinpoints the broken
    identity.
    """
    unital = check_unital(link)
    if not unital.ok:
        raise InvalidLink(f"from_link requires a unital link ({unital.failure}: {unital.witness})")
    assoc = check_associative(link)
    if not assoc.ok:
        raise InvalidLink(
            f"from_link requires an associative link ({assoc.failure}: {assoc.witness})"
        )
    cert = unital.certificate
    completion = assoc.certificate.completion
    pi1 = compose(link.m, link.phi)
    pi2 = compose(link.m, link.theta)
    d, c = completion.d, completion.c

    mth_e1 = compose(compose(link.m, link.theta), cert.e1)
    mph_e2 = compose(compose(link.m, link.phi), cert.e2)
    e_table: dict[str, str] = {}
    for x in link.c1:
        for cls, val in ((d(x), mth_e1(x)), (c(x), mph_e2(x))):
            if cls in e_table and e_table[cls] != val:
                raise ReconstructionError(
                    f"identity at {cls!r} is ambiguous", witness=f"{e_table[cls]} vs {val}"
                )
            e_table[cls] = val
    for cls in completion.c0:
        if cls not in e_table:
            raise ReconstructionError(f"no identity reaches class {cls!r}", witness=cls)

    inv = cert.i  # equals both inversion composites by construction
    g = Groupoid(
        c0=completion.c0,
        c1=link.c1,
        c2=link.c2,
        d=d,
        c=c,
        e=FinMap(completion.c0, link.c1, e_table),
        i=inv,
        pi1=pi1,
        pi2=pi2,
        m=link.m,
    )
    rep = validate(g)
    if not rep.ok:
        raise InternalInconsistency(
            "reconstructed groupoid failed validation: "
            + "; ".join(ch.line() for ch in rep.failures)
        )
    return g


def lift_morphism(f2: FinMap, f1: FinMap, g: Groupoid, h: Groupoid) -> GroupoidMorphism:
    """Extend a link morphism between to_link images to a groupoid morphism.

    The object component is defined as d'.f1.e and checked against c'.f1.e;
    the extension is verified to commute with the projections and with all
    structure maps.
    """
    src, dst = to_link(g), to_link(h)
    w = link_morphism_witness(f2, f1, src, dst)
    if w is not None:
        raise NotLinkMorphism(f"not a link morphism: {w[0]} fails at {w[1]!r}", witness=w)
    via_d = compose(h.d, compose(f1, g.e))
    via_c = compose(h.c, compose(f1, g.e))
    if via_d != via_c:
        raise InternalInconsistency("object map is ambiguous for a link morphism")
    f0 = via_d
    for lhs, rhs in [
        (compose(h.pi1, f2), compose(f1, g.pi1)),
        (compose(h.pi2, f2), compose(f1, g.pi2)),
    ]:
        if lhs != rhs:
            raise InternalInconsistency("projection compatibility failed in lift")
    bad = groupoid_morphism_witness(f2, f1, f0, g, h)
    if bad is not None:
        raise InternalInconsistency(f"lifted triple is not a groupoid morphism: {bad}")
    return GroupoidMorphism(f2=f2, f1=f1, f0=f0)


def _count_groupoid_morphisms(g: Groupoid, h: Groupoid) -> int:
    """Complete backtracking over the arrow component.

    f1 determines both f0 (through d'. f1 on identities) and f2 (through the
    jointly monic projections), so solutions are counted by assigning f1
    arrow by arrow under the composability and multiplicativity constraints,
    then verifying the induced triple.
    """
    arrows = list(g.c1.elements)
    targets = list(h.c1.elements)
    assign: dict[str, str] = {}

    composable = [(g.pi1(u), g.pi2(u), g.m(u)) for u in g.c2]
    by_arrow: dict[str, list[tuple[str, str, str]]] = {a: [] for a in arrows}
    for trip in composable:
        for a in set(trip):
            by_arrow[a].append(trip)

    def local_ok(changed: str) -> bool:
        for a, b, ab in by_arrow[changed]:
            fa, fb, fab = assign.get(a), assign.get(b), assign.get(ab)
            if fa is not None and fb is not None:
                if h.d(fa) != h.c(fb):
                    return False
                u = h.pair(fa, fb)
                if u is None:
                    return False
                if fab is not None and h.m(u) != fab:
                    return False
            if fa is not None and h.i(fa) != assign.get(g.i(a), h.i(fa)):
                return False
        return True

    count = 0

    def rec(k: int) -> None:
        nonlocal count
        if k == len(arrows):
            f1 = FinMap(g.c1, h.c1, assign)
            t2 = {}
            for u in g.c2:
                v = h.pair(f1(g.pi1(u)), f1(g.pi2(u)))
                if v is None:
                    return
                t2[u] = v
            f2 = FinMap(g.c2, h.c2, t2)
            f0 = compose(h.d, compose(f1, g.e))
            if groupoid_morphism_witness(f2, f1, f0, g, h) is None:
                count += 1
            return
        a = arrows[k]
        for t in targets:
            assign[a] = t
            if local_ok(a):
                rec(k + 1)
            del assign[a]

    rec(0)
    return count


def _count_link_morphisms(src: Link, dst: Link) -> int:
    """Complete backtracking over the pair component.

    Choosing f2 on one element forces it on the whole theta/phi orbit and
    pins f1 on the corresponding m-images; contradictions prune.  Arrows
    outside the image of m are unconstrained and contribute a free factor,
    enumerated exhaustively so every counted pair is verified.
    """
    pairs = list(src.c2.elements)
    f2: dict[str, str] = {}
    f1: dict[str, str] = {}

    hit = sorted({src.m(u) for u in pairs}, key=src.c1.index)
    free = [x for x in src.c1 if x not in set(hit)]

    def propagate(u: str, v: str, undo: list[tuple[str, str | None, dict]]) -> bool:
        stack = [(u, v)]
        while stack:
            a, b = stack.pop()
            if a in f2:
                if f2[a] != b:
                    return False
                continue
            undo.append((a, None, f2))
            f2[a] = b
            mu, mv = src.m(a), dst.m(b)
            if mu in f1:
                if f1[mu] != mv:
                    return False
            else:
                undo.append((mu, None, f1))
                f1[mu] = mv
            stack.append((src.theta(a), dst.theta(b)))
            stack.append((src.phi(a), dst.phi(b)))
        return True

    count = 0

    def rec(k: int) -> None:
        nonlocal count
        while k < len(pairs) and pairs[k] in f2:
            k += 1
        if k == len(pairs):
            count += free_factor()
            return
        u = pairs[k]
        for v in dst.c2:
            undo: list[tuple[str, str | None, dict]] = []
            if propagate(u, v, undo):
                rec(k + 1)
            for key, _, target in undo:
                del target[key]

    def free_factor() -> int:
        """Extend f1 over arrows missed by m; verify each completed pair."""
        total = 0
        choices = list(dst.c1.elements)

        def ext(j: int) -> None:
            nonlocal total
            if j == len(free):
                f2map = FinMap(src.c2, dst.c2, f2)
                f1map = FinMap(src.c1, dst.c1, f1)
                if link_morphism_witness(f2map, f1map, src, dst) is None:
                    total += 1
                return
            for t in choices:
                f1[free[j]] = t
                ext(j + 1)
                del f1[free[j]]

        ext(0)
        return total

    rec(0)
    return count


def count_morphisms(g: Groupoid, h: Groupoid, max_c2: int = 64) -> tuple[int, int]:
    """Exhaustively count groupoid morphisms g -> h and link morphisms between
    their images; the correspondence predicts equal counts."""
    if len(g.c2) > max_c2 or len(h.c2) > max_c2:
        raise SizeLimitExceeded(f"carriers exceed the cap of {max_c2} pairs")
    n_groupoid = _count_groupoid_morphisms(g, h)
    n_link = _count_link_morphisms(to_link(g), to_link(h))
    return n_groupoid, n_link


@dataclass
class RoundTripReport:
    ok: bool
    checks: list[Check] = field(default_factory=list)
    c0_bijection: FinMap | None = None

    def lines(self) -> list[str]:
        head = "round-trip: " + ("OK" if self.ok else "MISMATCH")
        return [head] + ["  " + c.line() for c in self.checks]


def round_trip(g: Groupoid) -> RoundTripReport:
    """Rebuild g from its link and compare, matching objects canonically."""
    rebuilt = from_link(to_link(g))
    checks: list[Check] = []

    def add(name: str, ok: bool, witness: str | None = None):
        checks.append(Check(name, ok, witness))

    add("arrow-carrier", rebuilt.c1 == g.c1)
    add("pair-carrier", rebuilt.c2 == g.c2)
    add("multiplication", rebuilt.m == g.m)
    add("outer-projection", rebuilt.pi1 == g.pi1)
    add("inner-projection", rebuilt.pi2 == g.pi2)
    add("inversion", rebuilt.i == g.i)

    bij_table: dict[str, str] = {}
    ok_bij = True
    witness = None
    for x in g.c1:
        for cls, val in ((rebuilt.d(x), g.d(x)), (rebuilt.c(x), g.c(x))):
            if cls in bij_table and bij_table[cls] != val:
                ok_bij, witness = False, cls
            bij_table[cls] = val
    bij = None
    if ok_bij and set(bij_table) == set(rebuilt.c0.elements):
        values = list(bij_table.values())
        if len(set(values)) == len(values) and set(values) == set(g.c0.elements):
            bij = FinMap(rebuilt.c0, g.c0, bij_table)
        else:
            ok_bij, witness = False, "object-classes-not-bijective"
    elif ok_bij:
        ok_bij, witness = False, "object-class-unmatched"
    add("object-bijection", ok_bij, witness)
    if bij is not None:
        add("source-through-bijection", compose(bij, rebuilt.d) == g.d)
        add("target-through-bijection", compose(bij, rebuilt.c) == g.c)
        add("identities-through-bijection", compose(rebuilt.e, _inverse(bij)) == g.e)
    report_ok = all(c.ok for c in checks)
    return RoundTripReport(ok=report_ok, checks=checks, c0_bijection=bij)


def _inverse(f: FinMap) -> FinMap:
    return FinMap(f.cod, f.dom, {f(x): x for x in f.dom})


def functoriality_report(g: Groupoid, h: Groupoid, mor: GroupoidMorphism) -> ValidationReport:
    """The arrow/pair parts of a groupoid morphism form a link morphism."""
    rep = ValidationReport("functoriality")
    w = groupoid_morphism_witness(mor.f2, mor.f1, mor.f0, g, h)
    rep.add("groupoid-morphism", w is None, None if w is None else f"{w[0]} at {w[1]}")
    lw = link_morphism_witness(mor.f2, mor.f1, to_link(g), to_link(h))
    rep.add("link-morphism", lw is None, None if lw is None else f"{lw[0]} at {lw[1]}")
    return rep
