"""Check results: a named pass/fail line with an optional witness."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One verified condition.  `witness` names the offending element(s) on failure."""

    name: str
    ok: bool
    witness: str | None = None

    def line(self) -> str:
        if self.ok:
            return f"PASS {self.name}"
        if self.witness is None:
            return f"FAIL {self.name}"
        return f"FAIL {self.name}  witness={self.witness}"


@dataclass
class ValidationReport:
    """Ordered list of checks; collects every failure instead of stopping early."""

    subject: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: str | None = None) -> None:
        self.checks.append(Check(name, ok, witness))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        return [f"{self.subject}: " + ("OK" if self.ok else "INVALID")] + [
            "  " + c.line() for c in self.checks
        ]

    def __str__(self) -> str:
        return "\n".join(self.lines())
