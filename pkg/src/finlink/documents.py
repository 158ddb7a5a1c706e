"""UTF-8 JSON interchange format for groupoids, links and magma systems.

A document is a mapping with a `kind` discriminator:

* groupoid      -- `sets` c0/c1/c2 and `maps` d, c, e, i, pi1, pi2, m
* link          -- `sets` c2/c1 and `maps` theta, phi, m
* magma-system  -- `sets` x/b, `unit`, `zero`, and tables `op` (x -> x -> x),
                   `bar` (x -> x), `f` (x -> b -> x -> b -> x),
                   `g` (x -> b -> b), optional `plus` (b -> b -> b)

Map tables are explicit label-to-label mappings; multi-argument tables are
nested mappings.  Field order never matters; serialization is deterministic
so equal payloads give byte-identical text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParseError, ResolveError
from .finset import FinMap, FinSet
from .groupoid import Groupoid
from .link import Link
from .magma import MagmaSystem

KINDS = ("groupoid", "link", "magma-system")

_GROUPOID_MAPS = {
    "d": ("c1", "c0"),
    "c": ("c1", "c0"),
    "e": ("c0", "c1"),
    "i": ("c1", "c1"),
    "pi1": ("c2", "c1"),
    "pi2": ("c2", "c1"),
    "m": ("c2", "c1"),
}
_LINK_MAPS = {
    "theta": ("c2", "c2"),
    "phi": ("c2", "c2"),
    "m": ("c2", "c1"),
}


@dataclass
class Document:
    kind: str
    payload: Groupoid | Link | MagmaSystem
    metadata: dict = field(default_factory=dict)


def _expect(mapping, key, kind, where: str):
    if not isinstance(mapping, dict) or key not in mapping:
        raise ParseError(f"missing field {key!r} in {where}")
    value = mapping[key]
    if not isinstance(value, kind):
        raise ParseError(f"field {key!r} in {where} has the wrong type")
    return value


def _parse_set(raw, name: str) -> FinSet:
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise ParseError(f"set {name!r} must be a list of strings")
    if len(set(raw)) != len(raw):
        raise ParseError(f"set {name!r} has duplicate labels")
    return FinSet(raw)


def _parse_map(raw, name: str, sets: dict[str, FinSet], want: tuple[str, str]) -> FinMap:
    dom_name = _expect(raw, "dom", str, f"map {name!r}")
    cod_name = _expect(raw, "cod", str, f"map {name!r}")
    table = _expect(raw, "table", dict, f"map {name!r}")
    for ref in (dom_name, cod_name):
        if ref not in sets:
            raise ResolveError(f"map {name!r} references undeclared set {ref!r}")
    if (dom_name, cod_name) != want:
        raise ParseError(
            f"map {name!r} must go {want[0]} -> {want[1]}, got {dom_name} -> {cod_name}"
        )
    dom, cod = sets[dom_name], sets[cod_name]
    for x in dom:
        if x not in table:
            raise ParseError(f"table of map {name!r} omits element {x!r}")
    for x, y in table.items():
        if x not in dom:
            raise ResolveError(f"table of map {name!r} mentions unknown element {x!r}")
        if not isinstance(y, str) or y not in cod:
            raise ResolveError(f"map {name!r} sends {x!r} to unknown element {y!r}")
    return FinMap(dom, cod, table)


def _parse_nested(raw, name: str, arg_sets: list[FinSet], out: FinSet) -> dict:
    """Nested label table with one level per argument set."""
    table: dict = {}

    def walk(node, sets_left: list[FinSet], prefix: tuple[str, ...]):
        current, rest = sets_left[0], sets_left[1:]
        if not isinstance(node, dict):
            raise ParseError(f"table {name!r} must nest mappings at {prefix!r}")
        for x in current:
            if x not in node:
                raise ParseError(f"table {name!r} omits element {x!r} at {prefix!r}")
        for x, sub in node.items():
            if x not in current:
                raise ResolveError(f"table {name!r} mentions unknown element {x!r}")
            if rest:
                walk(sub, rest, prefix + (x,))
            else:
                if not isinstance(sub, str) or sub not in out:
                    raise ResolveError(
                        f"table {name!r} value {sub!r} at {prefix + (x,)!r} is unknown"
                    )
                key = prefix + (x,)
                table[key if len(key) > 1 else key[0]] = sub

    walk(raw, arg_sets, ())
    return table


def _nest(table: dict, depth: int) -> dict:
    if depth == 1:
        return {k if isinstance(k, str) else k[0]: v for k, v in table.items()}
    out: dict = {}
    for key, v in table.items():
        node = out
        for part in key[:-1]:
            node = node.setdefault(part, {})
        node[key[-1]] = v
    return out


def loads(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(raw, dict):
        raise ParseError("document must be a JSON object")
    kind = _expect(raw, "kind", str, "document")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be an object")
    sets_raw = _expect(raw, "sets", dict, "document")

    if kind in ("groupoid", "link"):
        spec = _GROUPOID_MAPS if kind == "groupoid" else _LINK_MAPS
        wanted_sets = ("c0", "c1", "c2") if kind == "groupoid" else ("c1", "c2")
        sets = {}
        for name in wanted_sets:
            if name not in sets_raw:
                raise ParseError(f"missing set {name!r}")
            sets[name] = _parse_set(sets_raw[name], name)
        maps_raw = _expect(raw, "maps", dict, "document")
        maps = {}
        for name, want in spec.items():
            if name not in maps_raw:
                raise ParseError(f"missing map {name!r}")
            maps[name] = _parse_map(maps_raw[name], name, sets, want)
        if kind == "groupoid":
            payload: Groupoid | Link | MagmaSystem = Groupoid(
                c0=sets["c0"], c1=sets["c1"], c2=sets["c2"], **maps
            )
        else:
            payload = Link(c2=sets["c2"], c1=sets["c1"], **maps)
        return Document(kind=kind, payload=payload, metadata=metadata)

    for name in ("x", "b"):
        if name not in sets_raw:
            raise ParseError(f"missing set {name!r}")
    xset = _parse_set(sets_raw["x"], "x")
    bset = _parse_set(sets_raw["b"], "b")
    unit = _expect(raw, "unit", str, "document")
    zero = _expect(raw, "zero", str, "document")
    if unit not in xset:
        raise ResolveError(f"unit {unit!r} is not an element of x")
    if zero not in bset:
        raise ResolveError(f"zero {zero!r} is not an element of b")
    op = _parse_nested(_expect(raw, "op", dict, "document"), "op", [xset, xset], xset)
    bar = _parse_nested(_expect(raw, "bar", dict, "document"), "bar", [xset], xset)
    f = _parse_nested(
        _expect(raw, "f", dict, "document"), "f", [xset, bset, xset, bset], xset
    )
    g = _parse_nested(_expect(raw, "g", dict, "document"), "g", [xset, bset], bset)
    plus = None
    if "plus" in raw and raw["plus"] is not None:
        plus = _parse_nested(raw["plus"], "plus", [bset, bset], bset)
    payload = MagmaSystem(
        x=xset, unit=unit, op=op, bar=bar, b=bset, zero=zero, f=f, g=g, plus=plus
    )
    return Document(kind="magma-system", payload=payload, metadata=metadata)


def _map_json(f: FinMap, dom_name: str, cod_name: str) -> dict:
    return {"dom": dom_name, "cod": cod_name, "table": dict(f.table)}


def dumps(doc: Document | Groupoid | Link | MagmaSystem, metadata: dict | None = None) -> str:
    if isinstance(doc, Document):
        payload, metadata = doc.payload, {**doc.metadata, **(metadata or {})}
    else:
        payload, metadata = doc, dict(metadata or {})
    if isinstance(payload, Groupoid):
        g = payload
        raw = {
            "kind": "groupoid",
            "sets": {
                "c0": list(g.c0.elements),
                "c1": list(g.c1.elements),
                "c2": list(g.c2.elements),
            },
            "maps": {
                name: _map_json(getattr(g, name), *_GROUPOID_MAPS[name])
                for name in _GROUPOID_MAPS
            },
        }
    elif isinstance(payload, Link):
        link = payload
        raw = {
            "kind": "link",
            "sets": {"c1": list(link.c1.elements), "c2": list(link.c2.elements)},
            "maps": {
                name: _map_json(getattr(link, name), *_LINK_MAPS[name])
                for name in _LINK_MAPS
            },
        }
    elif isinstance(payload, MagmaSystem):
        s = payload
        raw = {
            "kind": "magma-system",
            "sets": {"x": list(s.x.elements), "b": list(s.b.elements)},
            "unit": s.unit,
            "zero": s.zero,
            "op": _nest(s.op, 2),
            "bar": _nest(s.bar, 1),
            "f": _nest(s.f, 4),
            "g": _nest(s.g, 2),
        }
        if s.plus is not None:
            raw["plus"] = _nest(s.plus, 2)
    else:
        raise TypeError(f"cannot serialize {type(payload).__name__}")
    if metadata:
        raw["metadata"] = metadata
    return json.dumps(raw, indent=2, sort_keys=True) + "\n"
