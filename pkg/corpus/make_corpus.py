#!/usr/bin/env python3
"""Regenerate the document corpus from the library's own constructors.

The broken-* files each corrupt exactly one law of a healthy artifact so
the negative test suite can pin which checker rejects them.
"""

import itertools
import pathlib
import sys

import finlink as fl
from finlink.documents import dumps
from finlink.finset import FinMap, FinSet
from finlink.link import Link
from finlink.magma import MagmaSystem

HERE = pathlib.Path(__file__).parent


def cyclic(n: int) -> dict:
    labels = [str(k) for k in range(n)]
    return {a: {b: str((int(a) + int(b)) % n) for b in labels} for a in labels}


def sym3() -> dict:
    perms = list(itertools.permutations(range(3)))
    lab = {p: "".join(map(str, p)) for p in perms}
    return {
        lab[p]: {lab[q]: lab[tuple(p[q[i]] for i in range(3))] for q in perms}
        for p in perms
    }


def write(name: str, text: str) -> None:
    (HERE / name).write_text(text, encoding="utf-8")
    print("wrote", name)


def main() -> int:
    z2 = fl.from_group(cyclic(2), "0")
    z3 = fl.from_group(cyclic(3), "0")
    s3 = fl.from_group(sym3(), "012")
    pair2 = fl.pair_groupoid(["1", "2"])
    pair3 = fl.pair_groupoid(["1", "2", "3"])
    disc4 = fl.discrete(["a", "b", "c", "d"])
    du = fl.disjoint_union(z2, pair2)

    write("z2.groupoid.json", dumps(z2, metadata={"name": "one-object groupoid of the 2-element cyclic group"}))
    write("z3.groupoid.json", dumps(z3, metadata={"name": "one-object groupoid of the 3-element cyclic group"}))
    write("s3.groupoid.json", dumps(s3, metadata={"name": "one-object groupoid of the symmetric group on 3 letters"}))
    write("pair2.groupoid.json", dumps(pair2, metadata={"name": "pair groupoid on 2 objects"}))
    write("pair3.groupoid.json", dumps(pair3, metadata={"name": "pair groupoid on 3 objects"}))
    write("discrete4.groupoid.json", dumps(disc4, metadata={"name": "discrete groupoid on 4 objects"}))
    write("z2-with-pair2.groupoid.json", dumps(du, metadata={"name": "disjoint union of the z2 and pair2 groupoids"}))

    link = fl.to_link(z2)
    write("z2.link.json", dumps(link, metadata={"name": "link of the z2 groupoid"}))

    # theta corrupted at one point: no longer an involution
    theta_bad = dict(link.theta.table)
    first = link.c2.elements[0]
    second = link.c2.elements[1]
    theta_bad[first] = link.theta(second)
    broken_theta = Link(
        c2=link.c2,
        c1=link.c1,
        theta=FinMap(link.c2, link.c2, theta_bad),
        phi=link.phi,
        m=link.m,
    )
    write("broken-theta.link.json", dumps(broken_theta, metadata={"name": "z2 link with theta corrupted at one point"}))

    # phi replaced by its theta-conjugate: still a valid link, but the
    # theta-fixed/phi-fixed section candidates disappear, so unitality fails
    conj = {
        u: link.theta(link.phi(link.theta(u))) for u in link.c2
    }
    broken_unit = Link(
        c2=link.c2,
        c1=link.c1,
        theta=link.theta,
        phi=FinMap(link.c2, link.c2, conj),
        m=link.m,
    )
    write("broken-unit.link.json", dumps(broken_unit, metadata={"name": "valid link that is not unital"}))

    # z3 with the inversion map replaced by the identity
    broken_inv = fl.Groupoid(
        c0=z3.c0, c1=z3.c1, c2=z3.c2, d=z3.d, c=z3.c, e=z3.e,
        i=fl.identity(z3.c1), pi1=z3.pi1, pi2=z3.pi2, m=z3.m,
    )
    write("broken-inverse.groupoid.json", dumps(broken_inv, metadata={"name": "z3 groupoid with the inversion law broken"}))

    xs = ["0", "1"]
    opz = {(a, b): str((int(a) + int(b)) % 2) for a in xs for b in xs}
    fz = {
        (a, bb, c, dd): str((int(a) + int(c)) % 2)
        for a in xs for bb in xs for c in xs for dd in xs
    }
    gz = {(a, bb): str((int(a) + int(bb)) % 2) for a in xs for bb in xs}
    z2z2 = MagmaSystem(
        x=FinSet(xs), unit="0", op=opz, bar={a: a for a in xs},
        b=FinSet(xs), zero="0", f=fz, g=gz, plus=dict(opz),
    )
    write("z2z2.magma.json", dumps(z2z2, metadata={"name": "order-2 group paired with itself through the identity"}))

    bad_g = dict(gz)
    bad_g[("1", "0")] = "0"
    broken_g = MagmaSystem(
        x=FinSet(xs), unit="0", op=opz, bar={a: a for a in xs},
        b=FinSet(xs), zero="0", f=fz, g=bad_g, plus=dict(opz),
    )
    write("broken-g.magma.json", dumps(broken_g, metadata={"name": "z2z2 system with g corrupted at one point"}))

    # idempotent commutative quasigroup on 3 elements: a fully lawful system
    # whose generated link is valid but not associative
    zs = ["0", "1", "2"]
    op_st = {(a, b): str((-int(a) - int(b)) % 3) for a in zs for b in zs}
    f_st = {
        (a, bb, c, dd): str((int(a) + int(c)) % 3)
        for a in zs for bb in ["0"] for c in zs for dd in ["0"]
    }
    steiner = MagmaSystem(
        x=FinSet(zs), unit="0", op=op_st, bar={a: a for a in zs},
        b=FinSet(["0"]), zero="0", f=f_st,
        g={(a, "0"): "0" for a in zs}, plus={("0", "0"): "0"},
    )
    write("steiner3.magma.json", dumps(steiner, metadata={"name": "non-associative idempotent quasigroup system on 3 elements"}))
    return 0


if __name__ == "__main__":
    sys.exit(main())
