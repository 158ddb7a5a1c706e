"""Command-line front end.

Exit codes: 0 = success / all checks pass, 1 = a property fails,
2 = usage, parse or boundary error.  Output is deterministic for identical
inputs and flags; progress chatter goes to stderr and only with --verbose.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .documents import Document, dumps, loads
from .equivalence import from_link, round_trip, to_link
from .errors import BoundaryError, FinlinkError, ParseError, SizeLimitExceeded
from .groupoid import Groupoid, validate
from .link import Link, check_associative, check_unital, dihedral_order, validate_link
from .magma import (
    MagmaSystem,
    build_link,
    check_prop1,
    check_prop3,
    check_prop4,
    check_prop5,
    check_prop6,
    check_prop7,
    check_system_axioms,
    enumerate_magmas,
)
from .report import ValidationReport
from .sweep import decode_system, prop1_sweep

PASS, FAIL, USAGE = 0, 1, 2

_PROP_CHECKERS = {
    "prop3": check_prop3,
    "prop4": check_prop4,
    "prop5": check_prop5,
    "prop6": check_prop6,
    "prop7": check_prop7,
}


def _load(path: str) -> Document:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report_json(rep: ValidationReport) -> dict:
    return {
        "subject": rep.subject,
        "ok": rep.ok,
        "checks": [
            {"name": c.name, "ok": c.ok, "witness": c.witness} for c in rep.checks
        ],
    }


def _print_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _cmd_validate(args) -> int:
    doc = _load(args.file)
    if isinstance(doc.payload, Groupoid):
        rep = validate(doc.payload)
    elif isinstance(doc.payload, Link):
        rep = validate_link(doc.payload)
    else:
        rep = check_system_axioms(doc.payload)
    if args.json:
        _print_json({"kind": doc.kind, "report": _report_json(rep)})
    else:
        print("\n".join(rep.lines()))
    return PASS if rep.ok else FAIL


def _require(doc: Document, cls, command: str):
    if not isinstance(doc.payload, cls):
        raise ParseError(f"{command} expects a {cls.__name__.lower()} document, got {doc.kind}")
    return doc.payload


def _cmd_to_link(args) -> int:
    g = _require(_load(args.file), Groupoid, "to-link")
    rep = validate(g)
    if not rep.ok:
        print("\n".join(rep.lines()), file=sys.stderr)
        return FAIL
    _emit(dumps(to_link(g)), args.output)
    return PASS


def _cmd_from_link(args) -> int:
    link = _require(_load(args.file), Link, "from-link")
    rep = validate_link(link)
    if not rep.ok:
        print("\n".join(rep.lines()), file=sys.stderr)
        return FAIL
    unital = check_unital(link)
    if not unital.ok:
        print(f"not unital ({unital.failure}): {unital.witness}", file=sys.stderr)
        return FAIL
    assoc = check_associative(link)
    if not assoc.ok:
        print(f"not associative ({assoc.failure}): {assoc.witness}", file=sys.stderr)
        return FAIL
    _emit(dumps(from_link(link)), args.output)
    return PASS


def _cmd_roundtrip(args) -> int:
    g = _require(_load(args.file), Groupoid, "roundtrip")
    rep = validate(g)
    if not rep.ok:
        print("\n".join(rep.lines()), file=sys.stderr)
        return FAIL
    result = round_trip(g)
    if args.json:
        _print_json(
            {
                "ok": result.ok,
                "checks": [
                    {"name": c.name, "ok": c.ok, "witness": c.witness}
                    for c in result.checks
                ],
            }
        )
    else:
        print("\n".join(result.lines()))
    return PASS if result.ok else FAIL


def _cmd_check_link(args) -> int:
    link = _require(_load(args.file), Link, "check-link")
    rep = validate_link(link)
    sections: list[tuple[str, bool, list[str]]] = [
        ("structure", rep.ok, ["  " + c.line() for c in rep.checks])
    ]
    payload: dict = {"structure": _report_json(rep)}
    ok = rep.ok
    if rep.ok:
        order = dihedral_order(link)
        sections.append(("dihedral-order", True, [f"  generated group order: {order}"]))
        payload["dihedral_order"] = order
        unital = check_unital(link)
        lines = (
            ["  unital: yes"]
            if unital.ok
            else [f"  unital: no ({unital.failure}) {unital.witness}"]
        )
        if unital.ok and not unital.certificate.unique:
            lines.append(f"  WARNING: {unital.certificate.solutions} section pairs found")
        sections.append(("unital", unital.ok, lines))
        payload["unital"] = {
            "ok": unital.ok,
            "failure": unital.failure,
            "witness": unital.witness,
        }
        assoc = check_associative(link)
        sections.append(
            (
                "associative",
                assoc.ok,
                ["  associative: yes"]
                if assoc.ok
                else [f"  associative: no ({assoc.failure}) {assoc.witness}"],
            )
        )
        payload["associative"] = {
            "ok": assoc.ok,
            "failure": assoc.failure,
            "witness": assoc.witness,
        }
        ok = rep.ok and unital.ok and assoc.ok
    if args.json:
        payload["ok"] = ok
        _print_json(payload)
    else:
        print("link check: " + ("OK" if ok else "FAIL"))
        for name, sec_ok, lines in sections:
            print(f"[{name}] " + ("pass" if sec_ok else "FAIL"))
            for line in lines:
                print(line)
    return PASS if ok else FAIL


def _prop_reports(s: MagmaSystem) -> tuple[dict, bool]:
    axioms = check_system_axioms(s)
    p1 = check_prop1(s)
    reports = {"axioms": axioms, "prop1": p1}
    violations = not axioms.ok or not p1.ok
    for name, checker in _PROP_CHECKERS.items():
        rep = checker(s)
        reports[name] = rep
        if rep.violation:
            violations = True
    return reports, not violations


def _cmd_magma(args) -> int:
    doc = _load(args.file)
    s = _require(doc, MagmaSystem, "magma")
    if args.action == "build":
        gen = build_link(s)
        _emit(dumps(gen.link), args.output)
        return PASS
    reports, ok = _prop_reports(s)
    if args.json:
        payload = {"ok": ok}
        for name, rep in reports.items():
            if isinstance(rep, ValidationReport):
                payload[name] = _report_json(rep)
            elif name == "prop1":
                payload[name] = {
                    "involutive": rep.involutive,
                    "braid": rep.braid,
                    "cancellation": rep.cancellation,
                    "crossed_cancellation": rep.crossed_cancellation,
                    "action_laws": rep.action_laws,
                    "equiv_involutive": rep.equiv_involutive,
                    "equiv_braid": rep.equiv_braid,
                    "witnesses": rep.witnesses,
                }
            else:
                payload[name] = {
                    "hypotheses_met": rep.hypotheses_met,
                    "conclusions_hold": rep.conclusions_hold,
                    "violation": rep.violation,
                    "hypothesis_checks": [
                        {"name": c.name, "ok": c.ok, "witness": c.witness}
                        for c in rep.hypothesis_checks
                    ],
                    "conclusion_checks": [
                        {"name": c.name, "ok": c.ok, "witness": c.witness}
                        for c in rep.conclusion_checks
                    ],
                }
        _print_json(payload)
    else:
        print("magma verify: " + ("OK" if ok else "FAIL"))
        print("\n".join(reports["axioms"].lines()))
        p1 = reports["prop1"]
        if not p1.action_laws:
            status = "NOT APPLICABLE (action laws fail)"
        elif p1.ok:
            status = "OK"
        else:
            status = "DISCREPANCY"
        print(
            f"prop1: {status}"
            + f" (involutive={p1.involutive} braid={p1.braid}"
            + f" cancellation={p1.cancellation} crossed={p1.crossed_cancellation})"
        )
        for name in _PROP_CHECKERS:
            print("\n".join(reports[name].lines()))
    return PASS if ok else FAIL


def _cmd_enumerate(args) -> int:
    kind = "all"
    if args.unital:
        kind = "unital"
    if args.semigroup:
        kind = "semigroup"
    if args.group:
        kind = "group"
    if args.check == "prop1" and kind == "all":
        result = prop1_sweep(args.size, backend=args.backend, max_size=args.max_size)
        lines = [result.summary()]
        details = []
        for ti, bi in result.witness_codes:
            rep = check_prop1(decode_system(args.size, ti, bi))
            details.append(
                {"table": ti, "bar": bi, "witnesses": rep.witnesses}
            )
            lines.append(f"  discrepancy at table={ti} bar={bi}: {rep.witnesses}")
        if args.json:
            _print_json(
                {
                    "size": result.size,
                    "systems": result.systems,
                    "backend": result.backend,
                    "discrepancies": result.discrepancies,
                    "witnesses": details,
                }
            )
        else:
            print("\n".join(lines))
        return PASS if result.discrepancies == 0 else FAIL

    total = met = confirmed = violations = 0
    witnesses: list[str] = []
    if args.check == "prop1":
        for s in enumerate_magmas(args.size, kind=kind, max_size=args.max_size):
            total += 1
            rep1 = check_prop1(s)
            met += 1
            if rep1.ok:
                confirmed += 1
            else:
                violations += 1
                if len(witnesses) < 5:
                    witnesses.append(str(rep1.witnesses))
            if args.verbose and total % 5000 == 0:
                print(f"...{total} systems", file=sys.stderr)
    else:
        checker = _PROP_CHECKERS[args.check]
        for s in enumerate_magmas(args.size, kind=kind, max_size=args.max_size):
            total += 1
            rep = checker(s)
            if rep.hypotheses_met:
                met += 1
                if rep.conclusions_hold:
                    confirmed += 1
                else:
                    violations += 1
                    if len(witnesses) < 5:
                        bad = [c for c in rep.conclusion_checks if not c.ok]
                        witnesses.append(bad[0].line() if bad else "?")
            if args.verbose and total % 5000 == 0:
                print(f"...{total} systems", file=sys.stderr)
    if args.json:
        _print_json(
            {
                "check": args.check,
                "size": args.size,
                "filter": kind,
                "systems": total,
                "hypotheses_met": met,
                "confirmed": confirmed,
                "discrepancies": violations,
                "witnesses": witnesses,
            }
        )
    else:
        print(
            f"{args.check} over size {args.size} ({kind}): "
            f"{total} systems, {met} hypotheses met, {confirmed} confirmed, "
            f"{violations} discrepancies"
        )
        for w in witnesses:
            print("  " + w)
    return PASS if violations == 0 else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finlink",
        description="Validate, convert and brute-force groupoid and link documents.",
    )
    parser.add_argument("--version", action="version", version=f"finlink {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--verbose", action="store_true", help="progress on stderr")
        p.add_argument(
            "--max-size", type=int, default=3, help="cap for exhaustive enumeration"
        )

    p = sub.add_parser("validate", help="run the validator for the document kind")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("to-link", help="contract a groupoid document to a link document")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=_cmd_to_link)

    p = sub.add_parser("from-link", help="rebuild a groupoid from a unital associative link")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=_cmd_from_link)

    p = sub.add_parser("roundtrip", help="contract and rebuild, then compare")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("check-link", help="structure, dihedral order, unital, associative")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_check_link)

    p = sub.add_parser("magma", help="build the generated link or verify the law suites")
    p.add_argument("action", choices=["build", "verify"])
    p.add_argument("file")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=_cmd_magma)

    p = sub.add_parser("enumerate", help="brute-force a law suite over all small systems")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--check", required=True, choices=["prop1"] + sorted(_PROP_CHECKERS))
    p.add_argument("--unital", action="store_true")
    p.add_argument("--semigroup", action="store_true")
    p.add_argument("--group", action="store_true")
    p.add_argument("--backend", choices=["auto", "numba", "numpy"], default=None)
    common(p)
    p.set_defaults(func=_cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, BoundaryError, SizeLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except FinlinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
