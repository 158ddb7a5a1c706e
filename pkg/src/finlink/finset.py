"""Finite sets and total maps between them.

Labels are opaque strings.  Element order is part of a FinSet's identity:
canonical constructions (pullbacks, pushouts, disjoint unions) derive their
output order and labels deterministically from it, so identical inputs give
identical objects.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import BoundaryError, CompositionError


def tuple_label(*parts: str) -> str:
    """Deterministic, injective label for an ordered tuple of labels.

    Commas and backslashes inside components are escaped so distinct tuples
    never collide.
    """
    escaped = [p.replace("\\", "\\\\").replace(",", "\\,") for p in parts]
    return "(" + ",".join(escaped) + ")"


class FinSet:
    """Ordered finite set of pairwise-distinct string labels."""

    __slots__ = ("elements", "_pos")

    def __init__(self, elements: Iterable[str]):
        elems = tuple(elements)
        pos: dict[str, int] = {}
        for k, x in enumerate(elems):
            if not isinstance(x, str):
                raise BoundaryError(f"labels must be strings, got {x!r}")
            if x in pos:
                raise BoundaryError(f"duplicate label {x!r}")
            pos[x] = k
        self.elements = elems
        self._pos = pos

    def __contains__(self, label: str) -> bool:
        return label in self._pos

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        return self._pos[label]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"FinSet({list(self.elements)!r})"


class FinMap:
    """Total map between finite sets, stored as an explicit table."""

    __slots__ = ("dom", "cod", "table")

    def __init__(self, dom: FinSet, cod: FinSet, table: Mapping[str, str]):
        missing = [x for x in dom if x not in table]
        if missing:
            raise BoundaryError(f"table undefined at {missing[0]!r}")
        extra = [x for x in table if x not in dom]
        if extra:
            raise BoundaryError(f"table defined at {extra[0]!r} outside the domain")
        for x in dom:
            if table[x] not in cod:
                raise BoundaryError(f"image {table[x]!r} of {x!r} is not in the codomain")
        self.dom = dom
        self.cod = cod
        self.table = {x: table[x] for x in dom}  # domain order

    def __call__(self, label: str) -> str:
        return self.table[label]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FinMap)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, tuple(self.table.items())))

    def __repr__(self) -> str:
        return f"FinMap({self.dom!r} -> {self.cod!r}, {self.table!r})"

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.dom)

    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.cod.elements)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()


def identity(a: FinSet) -> FinMap:
    return FinMap(a, a, {x: x for x in a})


def compose(f: FinMap, g: FinMap) -> FinMap:
    """Pointwise composite f after g."""
    if g.cod != f.dom:
        raise CompositionError(
            f"cannot compose: codomain {g.cod.elements!r} != domain {f.dom.elements!r}"
        )
    return FinMap(g.dom, f.cod, {x: f(g(x)) for x in g.dom})


def constant(dom: FinSet, cod: FinSet, value: str) -> FinMap:
    return FinMap(dom, cod, {x: value for x in dom})


def joint_mono_witness(f: FinMap, g: FinMap) -> tuple[str, str] | None:
    """Pair of distinct points the maps fail to separate, or None."""
    if f.dom != g.dom:
        raise BoundaryError("jointly-mono test needs maps with a common domain")
    seen: dict[tuple[str, str], str] = {}
    for x in f.dom:
        key = (f(x), g(x))
        if key in seen:
            return (seen[key], x)
        seen[key] = x
    return None


def is_jointly_mono(f: FinMap, g: FinMap) -> bool:
    """True iff (f(x), g(x)) = (f(y), g(y)) implies x = y."""
    return joint_mono_witness(f, g) is None
