"""Link generator over a magma with a pairing map, and its law checkers.

The input data is a magma (X, ., 1), a pointed set (B, 0) with an optional
addition, an involution-candidate bar: X -> X, a pairing map
f: X x B x X x B -> X and an action-like map g: X x B -> B.  From it the
generator filters

    C1 = {(x, b) : f(x, b, 1, 0) = x = f(1, 0, x, b)}
    C2 = {(y, x, b) : (y, g(x, b)) in C1 and (x, b) in C1}

and builds the candidate link

    m(y, x, b)     = (y.x, b)
    theta(y, x, b) = (bar y, y.x, b)
    phi(y, x, b)   = (y.x, bar x, g((bar y).(y.x), b)).

The check_prop* functions each verify one advertised implication: the
hypothesis set is tested by enumeration, and only then is the conclusion
confirmed through the link machinery.  A conclusion failing under satisfied
hypotheses is surfaced as a first-class finding, never assumed away.

The checks are exposed under the stable ids prop1..prop7 used by the CLI's
`enumerate --check` flag; see the README for what each id verifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import (
    BoundaryError,
    InvalidSystem,
    NotActionForm,
    NotClosed,
    NotWellDefined,
    SizeLimitExceeded,
)
from .finset import FinMap, FinSet, compose, joint_mono_witness, tuple_label
from .limits import is_biexact
from .link import Link, check_associative, check_unital, validate_link
from .report import Check, ValidationReport


@dataclass
class MagmaSystem:
    x: FinSet
    unit: str
    op: dict[tuple[str, str], str]
    bar: dict[str, str]
    b: FinSet
    zero: str
    f: dict[tuple[str, str, str, str], str]
    g: dict[tuple[str, str], str]
    plus: dict[tuple[str, str], str] | None = None

    def __post_init__(self):
        xs, bs = list(self.x), list(self.b)
        if self.unit not in self.x:
            raise BoundaryError(f"unit {self.unit!r} not in the base set")
        if self.zero not in self.b:
            raise BoundaryError(f"zero {self.zero!r} not in the point set")
        for a, bb in product(xs, xs):
            if self.op.get((a, bb)) not in self.x:
                raise BoundaryError(f"op table incomplete or escaping at ({a},{bb})")
        for a in xs:
            if self.bar.get(a) not in self.x:
                raise BoundaryError(f"bar table incomplete or escaping at {a}")
        for a, bb in product(xs, bs):
            if self.g.get((a, bb)) not in self.b:
                raise BoundaryError(f"g table incomplete or escaping at ({a},{bb})")
        for a, bb, a2, b2 in product(xs, bs, xs, bs):
            if self.f.get((a, bb, a2, b2)) not in self.x:
                raise BoundaryError(f"f table incomplete or escaping at ({a},{bb},{a2},{b2})")
        if self.plus is not None:
            for bb, b2 in product(bs, bs):
                if self.plus.get((bb, b2)) not in self.b:
                    raise BoundaryError(f"plus table incomplete or escaping at ({bb},{b2})")

    def mul(self, a: str, c: str) -> str:
        return self.op[(a, c)]

    def barv(self, a: str) -> str:
        return self.bar[a]

    def fv(self, a: str, bb: str, a2: str, b2: str) -> str:
        return self.f[(a, bb, a2, b2)]

    def gv(self, a: str, bb: str) -> str:
        return self.g[(a, bb)]

    def addv(self, bb: str, b2: str) -> str:
        assert self.plus is not None
        return self.plus[(bb, b2)]


def trivial_point_system(
    op: dict[tuple[str, str], str], unit: str, bar: dict[str, str]
) -> MagmaSystem:
    """System with a one-point B, pairing by the product, trivial action."""
    labels = sorted({a for a, _ in op} | {unit}, key=lambda s: (len(s), s))
    x = FinSet(labels)
    b = FinSet(["0"])
    f = {(a, "0", a2, "0"): op[(a, a2)] for a in labels for a2 in labels}
    g = {(a, "0"): "0" for a in labels}
    return MagmaSystem(
        x=x, unit=unit, op=dict(op), bar=dict(bar), b=b, zero="0", f=f, g=g,
        plus={("0", "0"): "0"},
    )


def _action_law_checks(s: MagmaSystem) -> list[Check]:
    """The laws governing g: chaining along products and bar-returns."""
    xs, bs = list(s.x), list(s.b)
    checks = []
    w = next(
        (
            f"y={y},x={x},b={bb}"
            for y, x in product(xs, xs)
            for bb in bs
            if s.gv(s.mul(y, x), bb) != s.gv(y, s.gv(x, bb))
        ),
        None,
    )
    checks.append(Check("action-chain", w is None, w))
    w = next(
        (
            f"y={y},x={x},b={bb}"
            for y, x in product(xs, xs)
            for bb in bs
            if s.gv(s.mul(s.barv(x), s.mul(s.barv(y), s.mul(y, x))), bb) != bb
        ),
        None,
    )
    checks.append(Check("return-triple", w is None, w))
    w = next(
        (
            f"x={x},b={bb}"
            for x in xs
            for bb in bs
            if s.gv(s.mul(s.barv(x), x), bb) != bb
        ),
        None,
    )
    checks.append(Check("return-pair", w is None, w))
    return checks


def check_system_axioms(s: MagmaSystem) -> ValidationReport:
    """The structural laws tying op, bar, f and g together, by full enumeration."""
    rep = ValidationReport("magma-system")
    xs, bs = list(s.x), list(s.b)

    w = None
    for y, x, y2, x2 in product(xs, repeat=4):
        for bb, b2 in product(bs, bs):
            lhs = s.fv(s.mul(y, x), bb, s.mul(y2, x2), b2)
            rhs = s.mul(s.fv(y, s.gv(x, bb), y2, s.gv(x2, b2)), s.fv(x, bb, x2, b2))
            if lhs != rhs:
                w = f"y={y},x={x},b={bb},y'={y2},x'={x2},b'={b2}"
                break
        if w:
            break
    rep.add("product-splitting", w is None, w)
    for check in _action_law_checks(s):
        rep.checks.append(check)
    rep.add("unit-action", s.gv(s.unit, s.zero) == s.zero)
    rep.add("unit-product", s.mul(s.unit, s.unit) == s.unit)
    return rep


def c1_pairs(s: MagmaSystem) -> list[tuple[str, str]]:
    return [
        (x, bb)
        for x in s.x
        for bb in s.b
        if s.fv(x, bb, s.unit, s.zero) == x and s.fv(s.unit, s.zero, x, bb) == x
    ]


def c2_triples(s: MagmaSystem) -> list[tuple[str, str, str]]:
    c1 = set(c1_pairs(s))
    return [
        (y, x, bb)
        for y in s.x
        for x in s.x
        for bb in s.b
        if (y, s.gv(x, bb)) in c1 and (x, bb) in c1
    ]


def _m_formula(s: MagmaSystem, t: tuple[str, str, str]) -> tuple[str, str]:
    y, x, bb = t
    return (s.mul(y, x), bb)


def _theta_formula(s: MagmaSystem, t: tuple[str, str, str]) -> tuple[str, str, str]:
    y, x, bb = t
    return (s.barv(y), s.mul(y, x), bb)


def _phi_formula(s: MagmaSystem, t: tuple[str, str, str]) -> tuple[str, str, str]:
    y, x, bb = t
    return (s.mul(y, x), s.barv(x), s.gv(s.mul(s.barv(y), s.mul(y, x)), bb))


@dataclass
class GeneratedLink:
    link: Link
    pairs: tuple[tuple[str, str], ...]
    triples: tuple[tuple[str, str, str], ...]

    def pair_label(self, p: tuple[str, str]) -> str:
        return tuple_label(*p)

    def triple_label(self, t: tuple[str, str, str]) -> str:
        return tuple_label(*t)


def _raw_link(s: MagmaSystem) -> GeneratedLink:
    """Filter the carriers and build the link; no structural-axiom gate."""
    pairs = c1_pairs(s)
    triples = c2_triples(s)
    c1set = set(pairs)
    c2set = set(triples)
    for t in triples:
        if _m_formula(s, t) not in c1set:
            raise NotClosed(f"product of {t} leaves the pair carrier", witness=t)
    for t in triples:
        if _theta_formula(s, t) not in c2set:
            raise NotWellDefined(f"theta escapes the triple carrier at {t}", witness=t)
        if _phi_formula(s, t) not in c2set:
            raise NotWellDefined(f"phi escapes the triple carrier at {t}", witness=t)
    c1 = FinSet([tuple_label(*p) for p in pairs])
    c2 = FinSet([tuple_label(*t) for t in triples])
    theta = FinMap(c2, c2, {tuple_label(*t): tuple_label(*_theta_formula(s, t)) for t in triples})
    phi = FinMap(c2, c2, {tuple_label(*t): tuple_label(*_phi_formula(s, t)) for t in triples})
    m = FinMap(c2, c1, {tuple_label(*t): tuple_label(*_m_formula(s, t)) for t in triples})
    return GeneratedLink(
        link=Link(c2=c2, c1=c1, theta=theta, phi=phi, m=m),
        pairs=tuple(pairs),
        triples=tuple(triples),
    )


def build_link(s: MagmaSystem) -> GeneratedLink:
    """Generate the link after checking the structural axioms."""
    rep = check_system_axioms(s)
    if not rep.ok:
        raise InvalidSystem(
            "system axioms fail: " + "; ".join(ch.line() for ch in rep.failures)
        )
    return _raw_link(s)


@dataclass
class Prop1Report:
    """Both directions of the involution/braid law correspondence.

    Evaluated on the full product carrier X^2 x B, independent of the C1/C2
    filters.  `equiv_involutive` compares actual involutivity of theta and
    phi with the cancellation laws; `equiv_braid` compares validity of the
    whole link (involutions plus braid) with cancellation plus crossed
    cancellation.  The braid relation alone is weaker than the law set, so
    the second comparison is made only jointly with involutivity.

    Both equivalences presuppose the action laws for g (the third component
    of phi composes through g), recorded in `action_laws`; with a one-point
    B they hold automatically.  `ok` asserts the correspondence only inside
    that context.
    """

    involutive: bool
    braid: bool
    cancellation: bool
    crossed_cancellation: bool
    action_laws: bool
    witnesses: dict[str, str] = field(default_factory=dict)

    @property
    def equiv_involutive(self) -> bool:
        return self.involutive == self.cancellation

    @property
    def equiv_braid(self) -> bool:
        return (self.involutive and self.braid) == (
            self.cancellation and self.crossed_cancellation
        )

    @property
    def ok(self) -> bool:
        if not self.action_laws:
            return True
        return self.equiv_involutive and self.equiv_braid


def check_prop1(s: MagmaSystem) -> Prop1Report:
    triples = [(y, x, bb) for y in s.x for x in s.x for bb in s.b]
    th = {t: _theta_formula(s, t) for t in triples}
    ph = {t: _phi_formula(s, t) for t in triples}
    wit: dict[str, str] = {}

    involutive = True
    for t in triples:
        if th[th[t]] != t:
            involutive = False
            wit["theta-involutive"] = str(t)
            break
    if involutive:
        for t in triples:
            if ph[ph[t]] != t:
                involutive = False
                wit["phi-involutive"] = str(t)
                break
    braid = True
    for t in triples:
        if th[ph[th[t]]] != ph[th[ph[t]]]:
            braid = False
            wit["braid"] = str(t)
            break

    cancellation = True
    for x in s.x:
        if s.barv(s.barv(x)) != x:
            cancellation = False
            wit["bar-involutive"] = x
            break
    if cancellation:
        for y, x in product(s.x, s.x):
            if s.mul(s.barv(y), s.mul(y, x)) != x or s.mul(s.mul(y, x), s.barv(x)) != y:
                cancellation = False
                wit["cancellation"] = f"y={y},x={x}"
                break
    crossed = True
    for y, x in product(s.x, s.x):
        yx_bar = s.barv(s.mul(y, x))
        if s.mul(x, yx_bar) != s.barv(y) or s.mul(yx_bar, y) != s.barv(x):
            crossed = False
            wit["crossed-cancellation"] = f"y={y},x={x}"
            break
    action = _action_law_checks(s)
    for check in action:
        if not check.ok:
            wit[check.name] = check.witness or ""
    return Prop1Report(
        involutive=involutive,
        braid=braid,
        cancellation=cancellation,
        crossed_cancellation=crossed,
        action_laws=all(check.ok for check in action),
        witnesses=wit,
    )


@dataclass
class PropReport:
    """Hypotheses first; conclusions only evaluated once hypotheses hold."""

    name: str
    hypothesis_checks: list[Check] = field(default_factory=list)
    conclusion_checks: list[Check] = field(default_factory=list)

    @property
    def hypotheses_met(self) -> bool:
        return all(c.ok for c in self.hypothesis_checks)

    @property
    def conclusions_hold(self) -> bool:
        return all(c.ok for c in self.conclusion_checks)

    @property
    def violation(self) -> bool:
        """Hypotheses satisfied but an advertised conclusion failed."""
        return self.hypotheses_met and not self.conclusions_hold

    @property
    def ok(self) -> bool:
        return self.hypotheses_met and self.conclusions_hold

    def lines(self) -> list[str]:
        status = (
            "CONFIRMED"
            if self.ok
            else ("VIOLATION" if self.violation else "HYPOTHESES NOT MET")
        )
        out = [f"{self.name}: {status}"]
        out += ["  hyp  " + c.line() for c in self.hypothesis_checks]
        out += ["  conc " + c.line() for c in self.conclusion_checks]
        return out


def _closure_hypotheses(s: MagmaSystem) -> list[Check]:
    """Bar-closure on C1, cancellation laws on C2, and the action laws for g.

    The action laws are part of the standing context the generated structure
    lives in: the third component of phi composes through g, so involutivity
    of phi on C2 already leans on them.  The pairing-splitting law is
    deliberately *not* required here; it only becomes load-bearing when the
    structure is lifted to the category of magmas.
    """
    checks: list[Check] = list(_action_law_checks(s))
    c1 = c1_pairs(s)
    c1set = set(c1)
    w = next(
        (f"({x},{bb})" for x, bb in c1 if (s.barv(x), s.gv(x, bb)) not in c1set),
        None,
    )
    checks.append(Check("bar-closure-on-c1", w is None, w))
    w = next((f"({x},{bb})" for x, bb in c1 if s.barv(s.barv(x)) != x), None)
    checks.append(Check("bar-involutive-on-c1", w is None, w))
    for name, law in [
        ("left-cancel-on-c2", lambda y, x: s.mul(s.barv(y), s.mul(y, x)) == x),
        ("right-cancel-on-c2", lambda y, x: s.mul(s.mul(y, x), s.barv(x)) == y),
        ("crossed-left-on-c2", lambda y, x: s.mul(x, s.barv(s.mul(y, x))) == s.barv(y)),
        ("crossed-right-on-c2", lambda y, x: s.mul(s.barv(s.mul(y, x)), y) == s.barv(x)),
    ]:
        w = next((str(t) for t in c2_triples(s) if not law(t[0], t[1])), None)
        checks.append(Check(name, w is None, w))
    return checks


def check_prop3(s: MagmaSystem) -> PropReport:
    """Closure laws imply the generated structure is a well-defined valid link."""
    rep = PropReport("prop3")
    rep.hypothesis_checks = _closure_hypotheses(s)
    if not rep.hypotheses_met:
        return rep
    try:
        gen = _raw_link(s)
    except (NotClosed, NotWellDefined) as exc:
        rep.conclusion_checks.append(Check("well-defined", False, str(exc)))
        return rep
    rep.conclusion_checks.append(Check("well-defined", True))
    val = validate_link(gen.link)
    rep.conclusion_checks.append(
        Check("valid-link", val.ok, None if val.ok else val.failures[0].line())
    )
    return rep


def _standing_hypotheses(s: MagmaSystem) -> list[Check]:
    checks = _closure_hypotheses(s)
    checks.append(Check("unit-bar-fixed", s.barv(s.unit) == s.unit))
    c1set = set(c1_pairs(s))
    w = next((bb for bb in s.b if (s.unit, bb) not in c1set), None)
    checks.append(Check("unit-pairs-in-c1", w is None, w))
    return checks


def _is_semigroup(s: MagmaSystem) -> str | None:
    return next(
        (
            f"{a},{bb},{cc}"
            for a, bb, cc in product(s.x, repeat=3)
            if s.mul(s.mul(a, bb), cc) != s.mul(a, s.mul(bb, cc))
        ),
        None,
    )


def _is_unital_magma(s: MagmaSystem) -> str | None:
    return next(
        (a for a in s.x if s.mul(s.unit, a) != a or s.mul(a, s.unit) != a), None
    )


def check_prop4(s: MagmaSystem) -> PropReport:
    """Unit pairs in C1 give bi-exactness; a semigroup base gives associativity."""
    rep = PropReport("prop4")
    rep.hypothesis_checks = _standing_hypotheses(s)
    semigroup_w = _is_semigroup(s)
    rep.hypothesis_checks.append(Check("semigroup", semigroup_w is None, semigroup_w))
    base_met = all(c.ok for c in rep.hypothesis_checks[:-1])
    if not base_met:
        return rep
    try:
        gen = _raw_link(s)
    except (NotClosed, NotWellDefined) as exc:
        rep.conclusion_checks.append(Check("well-defined", False, str(exc)))
        return rep
    pi1 = compose(gen.link.m, gen.link.phi)
    pi2 = compose(gen.link.m, gen.link.theta)
    completion = is_biexact(pi1, pi2)
    rep.conclusion_checks.append(
        Check(
            "bi-exact",
            completion.ok,
            None if completion.ok else ",".join(completion.failures()),
        )
    )
    val = validate_link(gen.link)
    if not val.ok:
        rep.conclusion_checks.append(Check("valid-link", False, val.failures[0].line()))
        return rep
    if semigroup_w is None:
        res = check_associative(gen.link)
        rep.conclusion_checks.append(
            Check("associative", res.ok, None if res.ok else f"{res.failure}: {res.witness}")
        )
    return rep


def _joint_mono_checks(link: Link) -> list[Check]:
    checks = []
    for name, other in [("m-with-m.theta", link.theta), ("m-with-m.phi", link.phi)]:
        w = joint_mono_witness(link.m, compose(link.m, other))
        checks.append(Check(name, w is None, None if w is None else f"{w[0]},{w[1]}"))
    return checks


def check_prop5(s: MagmaSystem) -> PropReport:
    """A unital base magma with separating fibers gives a unital link."""
    rep = PropReport("prop5")
    rep.hypothesis_checks = _standing_hypotheses(s)
    unital_w = _is_unital_magma(s)
    rep.hypothesis_checks.append(Check("unital-magma", unital_w is None, unital_w))
    if not rep.hypotheses_met:
        return rep
    try:
        gen = _raw_link(s)
    except (NotClosed, NotWellDefined) as exc:
        rep.conclusion_checks.append(Check("well-defined", False, str(exc)))
        return rep
    mono = _joint_mono_checks(gen.link)
    rep.hypothesis_checks.extend(mono)
    if not all(c.ok for c in mono):
        return rep
    val = validate_link(gen.link)
    if not val.ok:
        rep.conclusion_checks.append(Check("valid-link", False, val.failures[0].line()))
        return rep
    res = check_unital(gen.link)
    rep.conclusion_checks.append(
        Check("unital", res.ok, None if res.ok else f"{res.failure}: {res.witness}")
    )
    return rep


def check_prop6(s: MagmaSystem) -> PropReport:
    """A monoid base gives a unital associative link whose groupoid has the
    advertised object part: objects match B, source drops the base
    component, target is the action map, identities are unit pairs."""
    from .equivalence import from_link  # local import to avoid a cycle

    rep = PropReport("prop6")
    rep.hypothesis_checks = _standing_hypotheses(s)
    unital_w = _is_unital_magma(s)
    semigroup_w = _is_semigroup(s)
    rep.hypothesis_checks.append(Check("unital-magma", unital_w is None, unital_w))
    rep.hypothesis_checks.append(Check("semigroup", semigroup_w is None, semigroup_w))
    if not rep.hypotheses_met:
        return rep
    try:
        gen = _raw_link(s)
    except (NotClosed, NotWellDefined) as exc:
        rep.conclusion_checks.append(Check("well-defined", False, str(exc)))
        return rep
    mono = _joint_mono_checks(gen.link)
    rep.hypothesis_checks.extend(mono)
    if not all(c.ok for c in mono):
        return rep
    val = validate_link(gen.link)
    if not val.ok:
        rep.conclusion_checks.append(Check("valid-link", False, val.failures[0].line()))
        return rep
    unital = check_unital(gen.link)
    rep.conclusion_checks.append(
        Check("unital", unital.ok, None if unital.ok else f"{unital.failure}: {unital.witness}")
    )
    assoc = check_associative(gen.link)
    rep.conclusion_checks.append(
        Check("associative", assoc.ok, None if assoc.ok else f"{assoc.failure}: {assoc.witness}")
    )
    if not (unital.ok and assoc.ok):
        return rep

    grp = from_link(gen.link)
    beta: dict[str, str] = {}
    consistent = True
    witness = None
    for x, bb in gen.pairs:
        lab = tuple_label(x, bb)
        for cls, val in ((grp.d(lab), bb), (grp.c(lab), s.gv(x, bb))):
            if cls in beta and beta[cls] != val:
                consistent, witness = False, f"{cls}: {beta[cls]} vs {val}"
            beta[cls] = val
    bijective = (
        consistent
        and set(beta) == set(grp.c0.elements)
        and len(set(beta.values())) == len(beta)
        and set(beta.values()) <= set(s.b.elements)
    )
    rep.conclusion_checks.append(
        Check("objects-match-point-set", consistent and bijective, witness)
    )
    if consistent and bijective:
        w = next(
            (
                tuple_label(x, bb)
                for x, bb in gen.pairs
                if beta[grp.d(tuple_label(x, bb))] != bb
            ),
            None,
        )
        rep.conclusion_checks.append(Check("source-is-point-component", w is None, w))
        w = next(
            (
                tuple_label(x, bb)
                for x, bb in gen.pairs
                if beta[grp.c(tuple_label(x, bb))] != s.gv(x, bb)
            ),
            None,
        )
        rep.conclusion_checks.append(Check("target-is-action", w is None, w))
        inv_beta = {v: k for k, v in beta.items()}
        w = next(
            (
                bb
                for bb in s.b
                if bb in inv_beta and grp.e(inv_beta[bb]) != tuple_label(s.unit, bb)
            ),
            None,
        )
        rep.conclusion_checks.append(Check("identity-is-unit-pair", w is None, w))
    return rep


def _is_group(s: MagmaSystem) -> str | None:
    w = _is_semigroup(s)
    if w is not None:
        return f"associativity at {w}"
    w = _is_unital_magma(s)
    if w is not None:
        return f"unit fails at {w}"
    for a in s.x:
        if not any(s.mul(a, bb) == s.unit and s.mul(bb, a) == s.unit for bb in s.x):
            return f"no inverse for {a}"
    return None


def _prop7_preconditions(s: MagmaSystem) -> list[Check]:
    checks: list[Check] = []
    group_w = _is_group(s)
    checks.append(Check("group-base", group_w is None, group_w))
    if group_w is None:
        w = next(
            (
                a
                for a in s.x
                if s.mul(a, s.barv(a)) != s.unit or s.mul(s.barv(a), a) != s.unit
            ),
            None,
        )
        checks.append(Check("bar-is-inverse", w is None, w))
    checks.append(Check("addition-present", s.plus is not None))
    if s.plus is not None:
        w = next(
            (
                f"{bb},{b2}"
                for bb, b2 in product(s.b, s.b)
                if s.fv(s.unit, bb, s.unit, b2) != s.unit
            ),
            None,
        )
        checks.append(Check("unit-pairing-collapses", w is None, w))
    return checks


def check_prop7(s: MagmaSystem) -> PropReport:
    """Sum-splitting of g is equivalent to the generated maps being
    homomorphisms for the componentwise operations on C1 and C2."""
    rep = PropReport("prop7")
    rep.hypothesis_checks = _prop7_preconditions(s)
    if not rep.hypotheses_met:
        return rep

    pairs = c1_pairs(s)
    triples = c2_triples(s)
    pair_set, triple_set = set(pairs), set(triples)

    def add_pair(p: tuple[str, str], q: tuple[str, str]) -> tuple[str, str]:
        return (s.fv(*p, *q), s.addv(p[1], q[1]))

    def add_triple(t: tuple[str, str, str], u: tuple[str, str, str]):
        y, x, bb = t
        y2, x2, b2 = u
        return (
            s.fv(y, s.gv(x, bb), y2, s.gv(x2, b2)),
            s.fv(x, bb, x2, b2),
            s.addv(bb, b2),
        )

    w = next(
        (
            f"{p}+{q}"
            for p in pairs
            for q in pairs
            if s.gv(s.fv(*p, *q), s.addv(p[1], q[1]))
            != s.addv(s.gv(*p), s.gv(*q))
        ),
        None,
    )
    sum_splitting = w is None
    rep.conclusion_checks.append(Check("sum-splitting", sum_splitting, w))

    def hom_witness(formula, out_sum, out_members) -> str | None:
        for t in triples:
            for u in triples:
                tu = add_triple(t, u)
                if tu not in triple_set:
                    return f"sum {t}+{u} escapes the triple carrier"
                lhs = formula(s, tu)
                rhs = out_sum(formula(s, t), formula(s, u))
                if rhs not in out_members:
                    return f"image sum at {t}+{u} escapes its carrier"
                if lhs != rhs:
                    return f"{t}+{u}"
        return None

    w = hom_witness(_m_formula, add_pair, pair_set)
    m_hom = w is None
    rep.conclusion_checks.append(Check("m-homomorphism", m_hom, w))
    w = hom_witness(_theta_formula, add_triple, triple_set)
    th_hom = w is None
    rep.conclusion_checks.append(Check("theta-homomorphism", th_hom, w))
    w = hom_witness(_phi_formula, add_triple, triple_set)
    ph_hom = w is None
    rep.conclusion_checks.append(Check("phi-homomorphism", ph_hom, w))

    rep.conclusion_checks.append(
        Check("equivalence", sum_splitting == (m_hom and th_hom and ph_hom))
    )
    if all((x, s.zero) in pair_set for x in s.x):
        w = next(
            (
                f"({x},{bb})"
                for x, bb in pairs
                if s.gv(x, bb) != s.addv(s.gv(x, s.zero), bb)
            ),
            None,
        )
        rep.conclusion_checks.append(Check("translation-form", w is None, w))
    return rep


@dataclass
class CrossedModuleReport:
    report: ValidationReport
    xi: dict[tuple[str, str], str]
    boundary: dict[str, str]

    @property
    def ok(self) -> bool:
        return self.report.ok


def extract_crossed_module(s: MagmaSystem) -> CrossedModuleReport:
    """Read off boundary and action data when both carriers are groups.

    The action candidate is xi(b, x) = f(1, b, x, 0) and the boundary is
    g(-, 0).  Conditions are derived mechanically from the structural laws;
    each is reported on its own line.
    """
    rep = ValidationReport("crossed-module")
    pre = _prop7_preconditions(s)
    for c in pre:
        rep.add("pre:" + c.name, c.ok, c.witness)
    if s.plus is None or not all(c.ok for c in pre):
        raise NotActionForm("preconditions for crossed-module extraction fail")
    w = None
    for bb in s.b:
        if s.addv(s.zero, bb) != bb or s.addv(bb, s.zero) != bb:
            w = f"zero fails at {bb}"
            break
        if not any(s.addv(bb, b3) == s.zero and s.addv(b3, bb) == s.zero for b3 in s.b):
            w = f"no negative for {bb}"
            break
    if w is None:
        w = next(
            (
                f"{b1},{b2},{b3}"
                for b1 in s.b
                for b2 in s.b
                for b3 in s.b
                if s.addv(s.addv(b1, b2), b3) != s.addv(b1, s.addv(b2, b3))
            ),
            None,
        )
    rep.add("point-set-group", w is None, w)
    if w is not None:
        raise NotActionForm("the point set is not a group under addition", witness=w)

    xi = {(bb, x): s.fv(s.unit, bb, x, s.zero) for bb in s.b for x in s.x}
    w = next(
        (
            f"f({x},{bb},{x2},{b2})"
            for x in s.x
            for bb in s.b
            for x2 in s.x
            for b2 in s.b
            if s.fv(x, bb, x2, b2) != s.mul(x, xi[(bb, x2)])
        ),
        None,
    )
    rep.add("action-decomposition", w is None, w)
    if w is not None:
        raise NotActionForm("pairing does not factor through the action", witness=w)

    boundary = {x: s.gv(x, s.zero) for x in s.x}
    neg = {
        bb: next(b3 for b3 in s.b if s.addv(bb, b3) == s.zero) for bb in s.b
    }
    rep.add(
        "action-unit",
        all(xi[(s.zero, x)] == x for x in s.x),
        next((x for x in s.x if xi[(s.zero, x)] != x), None),
    )
    w = next(
        (
            f"{bb},{b2},{x}"
            for bb in s.b
            for b2 in s.b
            for x in s.x
            if xi[(s.addv(bb, b2), x)] != xi[(bb, xi[(b2, x)])]
        ),
        None,
    )
    rep.add("action-chain", w is None, w)
    w = next(
        (
            f"{bb}:{x},{x2}"
            for bb in s.b
            for x in s.x
            for x2 in s.x
            if xi[(bb, s.mul(x, x2))] != s.mul(xi[(bb, x)], xi[(bb, x2)])
        ),
        None,
    )
    rep.add("action-by-endomorphisms", w is None, w)
    w = next(
        (bb for bb in s.b if len({xi[(bb, x)] for x in s.x}) != len(s.x)), None
    )
    rep.add("action-bijective", w is None, w)
    w = next(
        (
            f"{x},{x2}"
            for x in s.x
            for x2 in s.x
            if boundary[s.mul(x, x2)] != s.addv(boundary[x], boundary[x2])
        ),
        None,
    )
    rep.add("boundary-homomorphism", w is None, w)
    w = next(
        (
            f"{bb},{x}"
            for bb in s.b
            for x in s.x
            if boundary[xi[(bb, x)]] != s.addv(s.addv(bb, boundary[x]), neg[bb])
        ),
        None,
    )
    rep.add("equivariance", w is None, w)
    w = next(
        (
            f"{x},{x2}"
            for x in s.x
            for x2 in s.x
            if xi[(boundary[x], x2)] != s.mul(s.mul(x, x2), s.barv(x))
        ),
        None,
    )
    rep.add("peiffer", w is None, w)
    return CrossedModuleReport(report=rep, xi=xi, boundary=boundary)


def _labels(n: int) -> list[str]:
    return [str(k) for k in range(n)]


def enumerate_magmas(
    n: int, kind: str = "all", max_size: int = 3
):
    """Deterministic stream of all n-element systems with a one-point B.

    Every multiplication table (optionally filtered to unital magmas,
    semigroups or groups) is paired with every bar map; the pairing map is
    the product and the action is trivial.  For unfiltered tables the first
    element is the designated unit.
    """
    if n > max_size:
        raise SizeLimitExceeded(f"size {n} exceeds the cap of {max_size}")
    labels = _labels(n)
    for flat in product(labels, repeat=n * n):
        op = {
            (labels[i], labels[j]): flat[i * n + j]
            for i in range(n)
            for j in range(n)
        }
        units = [
            u
            for u in labels
            if all(op[(u, a)] == a and op[(a, u)] == a for a in labels)
        ]
        if kind in ("unital", "group") and not units:
            continue
        if kind in ("semigroup", "group"):
            assoc = all(
                op[(op[(a, bb)], cc)] == op[(a, op[(bb, cc)])]
                for a in labels
                for bb in labels
                for cc in labels
            )
            if not assoc:
                continue
        if kind == "group":
            u = units[0]
            if not all(
                any(op[(a, bb)] == u and op[(bb, a)] == u for bb in labels)
                for a in labels
            ):
                continue
        unit = units[0] if units else labels[0]
        for barflat in product(labels, repeat=n):
            bar = {labels[i]: barflat[i] for i in range(n)}
            yield trivial_point_system(op, unit, bar)
