"""Check records and the report container shared by every verifier."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .exact import Eisenstein, format_scalar

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"
NOTE = "note"
STATUSES = (PASS, FAIL, FLAGGED, NOTE)


def render(value: Any) -> Any:
    """JSON-ready form: rationals become ``"p/q"`` strings, containers recurse."""
    if isinstance(value, (Fraction, Eisenstein)):
        return format_scalar(value)
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if hasattr(value, "coords"):
        return render(value.coords)
    return str(value)


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    lhs: Any = None
    rhs: Any = None
    anchor: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "anchor": self.anchor,
        }


def compare(name: str, lhs: Any, rhs: Any, anchor: str = "") -> Check:
    return Check(name, PASS if lhs == rhs else FAIL, lhs, rhs, anchor)


def expect(name: str, ok: bool, lhs: Any = None, rhs: Any = None, anchor: str = "") -> Check:
    return Check(name, PASS if ok else FAIL, lhs, rhs, anchor)


@dataclass
class Report:
    """Ordered list of checks grouped into named sections."""

    sections: dict[str, list[Check]] = field(default_factory=dict)

    def add(self, section: str, check: Check) -> Check:
        self.sections.setdefault(section, []).append(check)
        return check

    def extend(self, section: str, checks: Iterable[Check]) -> None:
        for c in checks:
            self.add(section, c)

    def merge(self, other: Report) -> None:
        for sec, checks in other.sections.items():
            self.extend(sec, checks)

    @property
    def checks(self) -> list[Check]:
        return [c for cs in self.sections.values() for c in cs]

    def with_status(self, status: str) -> list[Check]:
        return [c for c in self.checks if c.status == status]

    @property
    def failures(self) -> list[Check]:
        return self.with_status(FAIL)

    @property
    def flagged(self) -> list[Check]:
        return self.with_status(FLAGGED)

    def ok(self, strict: bool = False) -> bool:
        if self.failures:
            return False
        return not (strict and self.flagged)

    def summary(self) -> dict[str, int]:
        return {s: len(self.with_status(s)) for s in STATUSES}

    def as_dict(self) -> dict:
        return {
            "summary": self.summary(),
            "sections": {k: [c.as_dict() for c in v] for k, v in self.sections.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False)

    def to_markdown(self, title: str = "Verification report") -> str:
        lines = [f"# {title}", ""]
        s = self.summary()
        lines.append(", ".join(f"{k}: {v}" for k, v in s.items()))
        for sec, checks in self.sections.items():
            lines += ["", f"## {sec}", "", "| check | status | lhs | rhs | anchor |", "|---|---|---|---|---|"]
            for c in checks:
                d = c.as_dict()
                lines.append(
                    f"| {d['name']} | {d['status']} | {_cell(d['lhs'])} | {_cell(d['rhs'])} | {d['anchor']} |"
                )
        return "\n".join(lines) + "\n"


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    return json.dumps(v, ensure_ascii=False).replace("|", "\\|")
