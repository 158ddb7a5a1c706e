"""Involutive 2-links: a map m: C2 -> C1 with two interlinked involutions.

theta and phi must each square to the identity and satisfy the braid
relation theta.phi.theta = phi.theta.phi, so they generate a quotient of
the dihedral group of order 6 inside the permutations of C2.

`check_unital` and `check_associative` decide the two extra properties that
make a link present a groupoid.  They are independent of each other and
never mutate their input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundaryError, InvalidLink
from .finset import FinMap, FinSet, compose, identity, joint_mono_witness
from .limits import ZigZagCompletion, is_biexact
from .report import ValidationReport


@dataclass
class Link:
    c2: FinSet
    c1: FinSet
    theta: FinMap
    phi: FinMap
    m: FinMap

    def __post_init__(self):
        for f, dom, cod, name in [
            (self.theta, self.c2, self.c2, "theta"),
            (self.phi, self.c2, self.c2, "phi"),
            (self.m, self.c2, self.c1, "m"),
        ]:
            if f.dom != dom or f.cod != cod:
                raise BoundaryError(f"map {name} has the wrong boundary")


@dataclass
class LinkMorphism:
    f2: FinMap
    f1: FinMap


def validate_link(link: Link) -> ValidationReport:
    """Pointwise involution and braid checks with witnesses."""
    rep = ValidationReport("link")
    th, ph = link.theta, link.phi

    def fails_at(f: FinMap, g: FinMap) -> str | None:
        for x in f.dom:
            if f(x) != g(x):
                return x
        return None

    ident = identity(link.c2)
    w = fails_at(compose(th, th), ident)
    rep.add("theta-involutive", w is None, w)
    w = fails_at(compose(ph, ph), ident)
    rep.add("phi-involutive", w is None, w)
    w = fails_at(compose(th, compose(ph, th)), compose(ph, compose(th, ph)))
    rep.add("braid", w is None, w)
    return rep


def dihedral_order(link: Link) -> int:
    """Order of the permutation group generated by theta and phi on C2.

    Computed by closure under composition; the link axioms force the result
    to divide 6.
    """
    if not validate_link(link).ok:
        raise InvalidLink("dihedral_order requires a valid link")
    elems = tuple(link.c2.elements)
    gens = [
        tuple(link.theta(x) for x in elems),
        tuple(link.phi(x) for x in elems),
    ]
    ident = tuple(elems)
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                lut = dict(zip(elems, p))
                q = tuple(lut[v] for v in g)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(group)


def link_morphism_witness(
    f2: FinMap, f1: FinMap, src: Link, dst: Link
) -> tuple[str, str] | None:
    if f2.dom != src.c2 or f2.cod != dst.c2:
        raise BoundaryError("f2 must map the pair carriers")
    if f1.dom != src.c1 or f1.cod != dst.c1:
        raise BoundaryError("f1 must map the arrow carriers")
    conditions = [
        ("theta", compose(f2, src.theta), compose(dst.theta, f2)),
        ("phi", compose(f2, src.phi), compose(dst.phi, f2)),
        ("m", compose(dst.m, f2), compose(f1, src.m)),
    ]
    for name, lhs, rhs in conditions:
        for x in lhs.dom:
            if lhs(x) != rhs(x):
                return (name, x)
    return None


def is_link_morphism(f2: FinMap, f1: FinMap, src: Link, dst: Link) -> bool:
    return link_morphism_witness(f2, f1, src, dst) is None


@dataclass
class UnitalCertificate:
    """Witnessing sections e1, e2 and the derived inversion map.

    `all_solutions` lists every (e1, e2) table pair the complete search
    found; more than one contradicts the uniqueness the theory predicts
    under joint monomorphicity, so callers should treat `unique=False` as a
    finding, not an inconvenience.
    """

    e1: FinMap
    e2: FinMap
    i: FinMap
    unique: bool
    solutions: int
    all_solutions: tuple[tuple[dict[str, str], dict[str, str]], ...]
    candidate_sizes: dict[str, tuple[int, int]]


@dataclass
class UnitalResult:
    ok: bool
    failure: str | None = None  # "not-jointly-mono" | "not-unital"
    witness: str | None = None
    certificate: UnitalCertificate | None = None


# constraint names follow what each equation does, used in failure reports
_SAME_INVERSION = "inversion-agreement"
_ENDPOINT_AGREEMENT = "endpoint-agreement"
_LEFT_CONTRACTION = "left-contraction"
_RIGHT_CONTRACTION = "right-contraction"


def check_unital(link: Link) -> UnitalResult:
    """Search for the sections e1, e2 making the link unital.

    Candidates per arrow x are the phi-fixed (for e1) and theta-fixed (for
    e2) points of the m-fiber over x; backtracking prunes with the remaining
    constraints.  All solutions are collected: the theory predicts at most
    one, so multiplicity is flagged rather than silently resolved.
    """
    if not validate_link(link).ok:
        raise InvalidLink("check_unital requires a valid link")
    th, ph, m = link.theta, link.phi, link.m

    for name, f, g in [("m,m.theta", m, compose(m, th)), ("m,m.phi", m, compose(m, ph))]:
        w = joint_mono_witness(f, g)
        if w is not None:
            return UnitalResult(
                ok=False, failure="not-jointly-mono", witness=f"{name} at {w[0]},{w[1]}"
            )

    fiber: dict[str, list[str]] = {x: [] for x in link.c1}
    for t in link.c2:
        fiber[m(t)].append(t)
    cand1 = {x: [t for t in fiber[x] if ph(t) == t] for x in link.c1}
    cand2 = {x: [t for t in fiber[x] if th(t) == t] for x in link.c1}
    for x in link.c1:
        if not cand1[x]:
            return UnitalResult(ok=False, failure="not-unital",
                                witness=f"no fixed section candidate for e1 at {x!r}")
        if not cand2[x]:
            return UnitalResult(ok=False, failure="not-unital",
                                witness=f"no fixed section candidate for e2 at {x!r}")

    arrows = list(link.c1.elements)
    n = len(arrows)
    pos = {x: k for k, x in enumerate(arrows)}
    e1: dict[str, str] = {}
    e2: dict[str, str] = {}

    mth = compose(m, th)
    mph = compose(m, ph)

    def endpoint_ok(u: str) -> bool:
        a, b = mph(u), mth(u)
        if a not in e1 or b not in e2:
            return True
        return mth(e1[a]) == mph(e2[b])

    def left_contraction_ok(u: str) -> bool:
        a, b = m(u), mth(u)
        if a not in e1 or b not in e1:
            return True
        return mth(e1[a]) == mth(e1[b])

    def right_contraction_ok(u: str) -> bool:
        a, b = m(u), mph(u)
        if a not in e2 or b not in e2:
            return True
        return mph(e2[a]) == mph(e2[b])

    def inversion_ok(x: str) -> bool:
        if x not in e1 or x not in e2:
            return True
        return mth(  # m.theta.phi.e2 == m.phi.theta.e1, evaluated at x
            ph(e2[x])
        ) == mph(th(e1[x]))

    blocked: list[tuple[int, str]] = []

    def consistent(depth: int) -> bool:
        for u in link.c2:
            if not endpoint_ok(u):
                blocked.append((depth, _ENDPOINT_AGREEMENT))
                return False
            if not left_contraction_ok(u):
                blocked.append((depth, _LEFT_CONTRACTION))
                return False
            if not right_contraction_ok(u):
                blocked.append((depth, _RIGHT_CONTRACTION))
                return False
        for x in arrows:
            if not inversion_ok(x):
                blocked.append((depth, _SAME_INVERSION))
                return False
        return True

    solutions: list[tuple[dict[str, str], dict[str, str]]] = []

    def assign(k: int) -> None:
        if k == 2 * n:
            solutions.append((dict(e1), dict(e2)))
            return
        which, x = divmod(k, n)
        target, cands = (e1, cand1) if which == 0 else (e2, cand2)
        label = arrows[x]
        for t in cands[label]:
            target[label] = t
            if consistent(k):
                assign(k + 1)
            del target[label]

    assign(0)

    if not solutions:
        deepest = max(blocked, default=(0, _SAME_INVERSION))
        return UnitalResult(
            ok=False,
            failure="not-unital",
            witness=f"search exhausted; last blocking constraint: {deepest[1]}",
        )
    sol1, sol2 = solutions[0]
    e1map = FinMap(link.c1, link.c2, sol1)
    e2map = FinMap(link.c1, link.c2, sol2)
    inv = compose(compose(m, th), compose(ph, e2map))
    cert = UnitalCertificate(
        e1=e1map,
        e2=e2map,
        i=inv,
        unique=len(solutions) == 1,
        solutions=len(solutions),
        all_solutions=tuple(solutions),
        candidate_sizes={x: (len(cand1[x]), len(cand2[x])) for x in arrows},
    )
    return UnitalResult(ok=True, certificate=cert)


@dataclass
class AssociativeCertificate:
    completion: ZigZagCompletion
    m1: FinMap
    m2: FinMap


@dataclass
class AssociativeResult:
    ok: bool
    failure: str | None = None  # "not-biexact" | "induced-map-undefined" | "not-associative"
    witness: str | None = None
    certificate: AssociativeCertificate | None = None


def check_associative(link: Link) -> AssociativeResult:
    """Bi-exactness of (m.phi, m.theta) plus equality of the two rebracketings."""
    if not validate_link(link).ok:
        raise InvalidLink("check_associative requires a valid link")
    pi1 = compose(link.m, link.phi)
    pi2 = compose(link.m, link.theta)
    completion = is_biexact(pi1, pi2)
    if not completion.ok:
        return AssociativeResult(
            ok=False, failure="not-biexact", witness=",".join(completion.failures())
        )

    by_components: dict[tuple[str, str], list[str]] = {}
    for t in link.c2:
        by_components.setdefault((pi1(t), pi2(t)), []).append(t)

    def induced(first: str, second: str) -> str | None:
        hits = by_components.get((first, second), [])
        return hits[0] if len(hits) == 1 else None

    t1, t2 = {}, {}
    for w in completion.c3:
        u, v = completion.p1(w), completion.p2(w)
        a = induced(link.m(u), pi2(v))
        b = induced(pi1(u), link.m(v))
        if a is None or b is None:
            return AssociativeResult(ok=False, failure="induced-map-undefined", witness=w)
        t1[w], t2[w] = a, b
    m1 = FinMap(completion.c3, link.c2, t1)
    m2 = FinMap(completion.c3, link.c2, t2)
    for w in completion.c3:
        if link.m(m1(w)) != link.m(m2(w)):
            return AssociativeResult(
                ok=False,
                failure="not-associative",
                witness=w,
                certificate=AssociativeCertificate(completion, m1, m2),
            )
    return AssociativeResult(ok=True, certificate=AssociativeCertificate(completion, m1, m2))
