import itertools
import pathlib

import pytest

import finlink as fl

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def cyclic_table(n: int) -> dict:
    labels = [str(k) for k in range(n)]
    return {a: {b: str((int(a) + int(b)) % n) for b in labels} for a in labels}


def sym3_table() -> dict:
    perms = list(itertools.permutations(range(3)))
    lab = {p: "".join(map(str, p)) for p in perms}
    return {
        lab[p]: {lab[q]: lab[tuple(p[q[i]] for i in range(3))] for q in perms}
        for p in perms
    }


@pytest.fixture(scope="session")
def z2():
    return fl.from_group(cyclic_table(2), "0")


@pytest.fixture(scope="session")
def z3():
    return fl.from_group(cyclic_table(3), "0")


@pytest.fixture(scope="session")
def s3():
    return fl.from_group(sym3_table(), "012")


@pytest.fixture(scope="session")
def pair2():
    return fl.pair_groupoid(["1", "2"])


@pytest.fixture(scope="session")
def pair3():
    return fl.pair_groupoid(["1", "2", "3"])


@pytest.fixture(scope="session")
def discrete4():
    return fl.discrete(["a", "b", "c", "d"])


@pytest.fixture(scope="session")
def z2_with_pair2(z2, pair2):
    return fl.disjoint_union(z2, pair2)


@pytest.fixture(scope="session")
def corpus_groupoids(z2, z3, s3, pair2, pair3, discrete4, z2_with_pair2):
    return {
        "z2": z2,
        "z3": z3,
        "s3": s3,
        "pair2": pair2,
        "pair3": pair3,
        "discrete4": discrete4,
        "z2-with-pair2": z2_with_pair2,
    }


@pytest.fixture(scope="session")
def z2z2_system():
    xs = ["0", "1"]
    op = {(a, b): str((int(a) + int(b)) % 2) for a in xs for b in xs}
    f = {
        (a, bb, c, dd): str((int(a) + int(c)) % 2)
        for a in xs
        for bb in xs
        for c in xs
        for dd in xs
    }
    g = {(a, bb): str((int(a) + int(bb)) % 2) for a in xs for bb in xs}
    return fl.MagmaSystem(
        x=fl.FinSet(xs),
        unit="0",
        op=op,
        bar={a: a for a in xs},
        b=fl.FinSet(xs),
        zero="0",
        f=f,
        g=g,
        plus=dict(op),
    )


@pytest.fixture(scope="session")
def steiner_system():
    """Idempotent commutative quasigroup x*y = -(x+y) mod 3; lawful system,
    valid link, non-associative multiplication."""
    zs = ["0", "1", "2"]
    op = {(a, b): str((-int(a) - int(b)) % 3) for a in zs for b in zs}
    f = {
        (a, "0", c, "0"): str((int(a) + int(c)) % 3) for a in zs for c in zs
    }
    return fl.MagmaSystem(
        x=fl.FinSet(zs),
        unit="0",
        op=op,
        bar={a: a for a in zs},
        b=fl.FinSet(["0"]),
        zero="0",
        f=f,
        g={(a, "0"): "0" for a in zs},
        plus={("0", "0"): "0"},
    )
