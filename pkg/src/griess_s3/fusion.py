"""Fusion rings stored as multiplicity tensors N_{ab}^c.

The built-in tables are transcribed row by row from the source tables (cells ``"x:y:z"``
mean x + y + z with multiplicity one).  Each table carries a sha256 of its
transcription and every ring is verified when it is loaded.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping

from .report import Check, Report, expect

Q = Fraction


class UnknownLabelError(KeyError):
    pass


class TableChecksumError(ValueError):
    pass


class InvalidRingError(ValueError):
    """A ring failed unit, commutativity or associativity checks at load."""

    def __init__(self, name: str, report: Report) -> None:
        self.report = report
        super().__init__(f"fusion ring {name!r} failed verification: {len(report.failures)} violations")


@dataclass(frozen=True)
class FusionRing:
    labels: tuple[str, ...]
    unit: str
    table: Mapping[tuple[str, str, str], int]
    weights: Mapping[str, Fraction | None] | None = None
    name: str = ""

    def __post_init__(self) -> None:
        known = set(self.labels)
        if len(known) != len(self.labels):
            raise ValueError("duplicate labels")
        if self.unit not in known:
            raise UnknownLabelError(self.unit)
        for (a, b, c), mult in self.table.items():
            for x in (a, b, c):
                if x not in known:
                    raise UnknownLabelError(x)
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"multiplicity for {(a, b, c)} must be a non-negative int, got {mult!r}")
        # keep only nonzero entries, frozen
        object.__setattr__(self, "table", dict((k, v) for k, v in self.table.items() if v))

    def N(self, a: str, b: str, c: str) -> int:
        return self.table.get((a, b, c), 0)

    def _check(self, *xs: str) -> None:
        for x in xs:
            if x not in self.labels:
                raise UnknownLabelError(x)

    def fuse(self, a: str, b: str) -> Counter:
        self._check(a, b)
        return Counter({c: self.N(a, b, c) for c in self.labels if self.N(a, b, c)})

    def with_entry(self, a: str, b: str, c: str, mult: int) -> FusionRing:
        """Copy with one multiplicity replaced (for mutation testing)."""
        self._check(a, b, c)
        table = dict(self.table)
        table[(a, b, c)] = mult
        return FusionRing(self.labels, self.unit, table, self.weights, self.name)

    def to_json_dict(self) -> dict:
        entries = [
            [a, b, c, self.N(a, b, c)]
            for a in self.labels for b in self.labels for c in self.labels if self.N(a, b, c)
        ]
        return {"labels": list(self.labels), "unit": self.unit, "N": entries}

    @classmethod
    def from_json_dict(cls, data: dict, name: str = "") -> FusionRing:
        try:
            labels = tuple(data["labels"])
            unit = data["unit"]
            raw = data["N"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed fusion ring: {exc}") from None
        table: dict[tuple[str, str, str], int] = {}
        for entry in raw:
            if not isinstance(entry, list) or len(entry) != 4:
                raise ValueError(f"malformed N entry {entry!r}")
            a, b, c, mult = entry
            if (a, b, c) in table:
                raise ValueError(f"duplicate N entry for {(a, b, c)}")
            table[(a, b, c)] = mult
        return cls(labels, unit, table, None, name)


def fuse(ring: FusionRing, a: str, b: str) -> Counter:
    return ring.fuse(a, b)


def verify(ring: FusionRing) -> Report:
    """Unit, commutativity and associativity by exhaustive enumeration.

    Every violated instance becomes a failing check naming its indices; a
    clean section gets a single passing check with the instance count.
    """
    report = Report()
    L, u, N = ring.labels, ring.unit, ring.N

    bad = []
    for a, c in product(L, L):
        want = 1 if a == c else 0
        for lhs_name, got in ((f"N[{u},{a}]^{c}", N(u, a, c)), (f"N[{a},{u}]^{c}", N(a, u, c))):
            if got != want:
                bad.append(Check(lhs_name, "fail", got, want, "unit"))
    _section(report, "unit", bad, len(L) ** 2)

    bad = []
    for a, b, c in product(L, L, L):
        if N(a, b, c) != N(b, a, c):
            bad.append(Check(f"N[{a},{b}]^{c} = N[{b},{a}]^{c}", "fail", N(a, b, c), N(b, a, c), "commutativity"))
    _section(report, "commutativity", bad, len(L) ** 3)

    bad = []
    for a, b, c, d in product(L, L, L, L):
        left = sum(N(a, b, e) * N(e, c, d) for e in L)
        right = sum(N(b, c, f) * N(a, f, d) for f in L)
        if left != right:
            bad.append(Check(f"(({a} x {b}) x {c})[{d}] = ({a} x ({b} x {c}))[{d}]", "fail", left, right,
                             "associativity"))
    _section(report, "associativity", bad, len(L) ** 4)
    return report


def _section(report: Report, name: str, bad: list[Check], count: int) -> None:
    if bad:
        report.extend(name, bad)
    else:
        report.add(name, expect(f"{name}: {count} instances", True, count, count, name))


def closure(ring: FusionRing, start: Iterable[str]) -> set[str]:
    """Smallest label set containing ``start`` and the unit closed under fusion."""
    todo = set(start)
    if not todo:
        raise ValueError("closure needs a nonempty starting set")
    ring._check(*todo)
    closed = todo | {ring.unit}
    while True:
        new = {c for a in closed for b in closed for c in ring.fuse(a, b)} - closed
        if not new:
            return closed
        closed |= new


def subring(ring: FusionRing, keep: Iterable[str], name: str = "") -> FusionRing:
    keep = set(keep)
    if closure(ring, keep) != keep | {ring.unit}:
        raise ValueError(f"labels {sorted(keep)} are not closed under fusion")
    labels = tuple(x for x in ring.labels if x in keep)
    table = {k: v for k, v in ring.table.items() if set(k) <= keep}
    weights = {x: ring.weights[x] for x in labels} if ring.weights else None
    return FusionRing(labels, ring.unit, table, weights, name)


def relabel(ring: FusionRing, mapping: Mapping[str, str]) -> FusionRing:
    m = {x: mapping.get(x, x) for x in ring.labels}
    table = {(m[a], m[b], m[c]): v for (a, b, c), v in ring.table.items()}
    return FusionRing(tuple(m[x] for x in ring.labels), m[ring.unit], table, None, ring.name)


def same_table(r1: FusionRing, r2: FusionRing) -> bool:
    return set(r1.labels) == set(r2.labels) and r1.unit == r2.unit and r1.table == r2.table


def grading_violations(ring: FusionRing, grade: Mapping[str, int], modulus: int) -> list[Check]:
    """Fusion channels a x b -> c with grade(c) != grade(a) + grade(b) mod ``modulus``."""
    bad = []
    for a, b in product(ring.labels, ring.labels):
        for c in ring.fuse(a, b):
            want = (grade[a] + grade[b]) % modulus
            if grade[c] % modulus != want:
                bad.append(Check(f"grade({a} x {b} -> {c})", "fail", grade[c] % modulus, want, "grading"))
    return bad


# ---------------------------------------------------------------- tables

def _w(x: str) -> Fraction:
    return Q(x)


_ISING = {
    "labels": ["0", "1/2", "1/16"],
    "rows": {
        "1/2": ["0", "1/16"],
        "1/16": ["1/16", "0:1/2"],
    },
}

_VIR_4_5 = {
    "labels": ["0", "2/5", "1/40", "7/5", "21/40", "1/15", "3", "13/8", "2/3", "1/8"],
    "rows": {
        "2/5": ["0:7/5", "1/8:21/40", "2/5:3", "1/40:13/8", "1/15:2/3", "7/5", "21/40", "1/15", "1/40"],
        "1/40": ["1/8:21/40", "0:7/5:2/3:1/15", "1/40:13/8", "2/5:3:1/15:2/3", "1/40:13/8:21/40:1/8",
                 "21/40", "7/5:1/15", "21/40:1/40", "1/15:2/5"],
        "7/5": ["2/5:3", "1/40:13/8", "0:7/5", "1/8:21/40", "2/3:1/15", "2/5", "1/40", "1/15", "21/40"],
        "21/40": ["1/40:13/8", "2/5:3:1/15:2/3", "1/8:21/40", "0:7/5:2/3:1/15", "1/8:21/40:13/8:1/40",
                  "1/40", "2/5:1/15", "1/40:21/40", "1/15:7/5"],
        "1/15": ["1/15:2/3", "1/40:13/8:21/40:1/8", "2/3:1/15", "1/8:21/40:13/8:1/40",
                 "0:7/5:2/3:1/15:3:2/5", "1/15", "1/40:21/40", "2/5:1/15:7/5", "1/40:21/40"],
        "3": ["7/5", "21/40", "2/5", "1/40", "1/15", "0", "1/8", "2/3", "13/8"],
        "13/8": ["21/40", "7/5:1/15", "1/40", "2/5:1/15", "1/40:21/40", "1/8", "0:2/3", "1/8:13/8", "2/3:3"],
        "2/3": ["1/15", "21/40:1/40", "1/15", "1/40:21/40", "2/5:1/15:7/5", "2/3", "1/8:13/8", "0:2/3:3",
                "1/8:13/8"],
        "1/8": ["1/40", "1/15:2/5", "21/40", "1/15:7/5", "1/40:21/40", "13/8", "2/3:3", "1/8:13/8", "0:2/3"],
    },
}

_W3_4_5 = {
    "labels": ["W(0)", "W(2/5)", "W(2/3,+)", "W(1/15,+)", "W(2/3,-)", "W(1/15,-)"],
    "rows": {
        "W(2/5)": ["W(0):W(2/5)", "W(1/15,+)", "W(1/15,+):W(2/3,+)", "W(1/15,-)", "W(1/15,-):W(2/3,-)"],
        "W(2/3,+)": ["W(1/15,+)", "W(2/3,-)", "W(1/15,-)", "W(0)", "W(2/5)"],
        "W(1/15,+)": ["W(1/15,+):W(2/3,+)", "W(1/15,-)", "W(1/15,-):W(2/3,-)", "W(2/5)", "W(0):W(2/5)"],
        "W(2/3,-)": ["W(1/15,-)", "W(0)", "W(2/5)", "W(2/3,+)", "W(1/15,+)"],
        "W(1/15,-)": ["W(1/15,-):W(2/3,-)", "W(2/5)", "W(0):W(2/5)", "W(1/15,+)", "W(1/15,+):W(2/3,+)"],
    },
}

_VIR_6_7_SUB = {
    "labels": ["0", "4/3", "5"],
    "rows": {
        "4/3": ["0:4/3:5", "4/3"],
        "5": ["4/3", "0"],
    },
}

_W3_WEIGHTS = {"W(0)": Q(0), "W(2/5)": Q(2, 5), "W(2/3,+)": Q(2, 3), "W(1/15,+)": Q(1, 15),
               "W(2/3,-)": Q(2, 3), "W(1/15,-)": Q(1, 15)}

# label -> grade mod 3 for the W-algebra ring
W3_GRADING = {"W(0)": 0, "W(2/5)": 0, "W(2/3,+)": 1, "W(1/15,+)": 1, "W(2/3,-)": 2, "W(1/15,-)": 2}

_TABLES = {
    "ising": (_ISING, "ad5facb5f9d7b10f2e4dc9ed5fa0a78c6528f928009a51289e758458f2d50de6"),
    "vir_4_5": (_VIR_4_5, "028f6ccf30d3fb041c2575b18a4251ff16445279478394801b35a8af1d9fde95"),
    "w3_4_5": (_W3_4_5, "31c91144084a92dd7cb7abd70f794b46f75675fba198d3adcd8cb2c3e8b517d5"),
    "vir_6_7_sub": (_VIR_6_7_SUB, "7b2dbd280a203698782209461c42493f3949413b932de78adeda48207b3afc16"),
}

BUILTIN_NAMES = tuple(_TABLES)


def table_checksum(source: dict) -> str:
    canonical = json.dumps(source, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def parse_table(source: dict, name: str = "") -> FusionRing:
    """Build a ring from a header-row table: ``rows[x][j]`` is x times the j-th non-unit label."""
    labels = source["labels"]
    unit, others = labels[0], labels[1:]
    table: dict[tuple[str, str, str], int] = {}
    for x in labels:
        table[(unit, x, x)] = 1
        table[(x, unit, x)] = 1
    for row, cells in source["rows"].items():
        if len(cells) != len(others):
            raise ValueError(f"row {row!r} has {len(cells)} cells, expected {len(others)}")
        for col, cell in zip(others, cells):
            for c in cell.split(":"):
                key = (row, col, c)
                table[key] = table.get(key, 0) + 1
    if all(not x.startswith("W(") for x in labels):
        weights = {x: _w(x) for x in labels}
    else:
        weights = {x: _W3_WEIGHTS.get(x) for x in labels}
    return FusionRing(tuple(labels), unit, table, weights, name)


def builtin(name: str) -> FusionRing:
    if name not in _TABLES:
        raise KeyError(f"unknown fusion ring {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    source, digest = _TABLES[name]
    if table_checksum(source) != digest:
        raise TableChecksumError(f"transcribed table {name!r} does not match its checksum")
    ring = parse_table(source, name)
    report = verify(ring)
    if not report.ok():
        raise InvalidRingError(name, report)
    return ring
