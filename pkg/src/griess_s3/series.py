"""Unitary Virasoro discrete series and the counting arguments built on it.

c_m = 1 - 6/((m+2)(m+3)) and h^m_{r,s} = (((m+3)r - (m+2)s)^2 - 1) / (4(m+2)(m+3))
for 1 <= s <= r <= m+1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact import format_rational

Q = Fraction


def central_charge(m: int) -> Fraction:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return 1 - Q(6, (m + 2) * (m + 3))


def find_m(c) -> int | None:
    """Inverse of central_charge; None when c is not a discrete-series value."""
    c = Q(c)
    if c < 0 or c >= 1:
        return None
    n = 6 / (1 - c)  # (m+2)(m+3)
    if n.denominator != 1:
        return None
    # (m+2)(m+3) = n  <=>  2m + 5 = sqrt(4n + 1)
    disc = 4 * n.numerator + 1
    root = math.isqrt(disc)
    if root * root != disc or (root - 5) % 2:
        return None
    return (root - 5) // 2


def weight(m: int, r: int, s: int) -> Fraction:
    if not 1 <= s <= r <= m + 1:
        raise ValueError(f"(r, s) = ({r}, {s}) outside 1 <= s <= r <= {m + 1}")
    p, q = m + 2, m + 3
    return Q((q * r - p * s) ** 2 - 1, 4 * p * q)


def weight_table(m: int) -> dict[tuple[int, int], Fraction]:
    """Highest weight for every Kac cell (r, s), 1 <= s <= r <= m+1."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return {(r, s): weight(m, r, s) for r in range(1, m + 2) for s in range(1, r + 1)}


def weights(m: int) -> set[Fraction]:
    return set(weight_table(m).values())


@dataclass(frozen=True)
class MinimalModelTable:
    m: int
    c: Fraction
    cells: dict[tuple[int, int], Fraction]

    @classmethod
    def of(cls, m: int) -> MinimalModelTable:
        return cls(m, central_charge(m), weight_table(m))

    @property
    def weights(self) -> list[Fraction]:
        return sorted(set(self.cells.values()))

    def as_dict(self) -> dict:
        return {"m": self.m, "c": format_rational(self.c), "weights": [format_rational(h) for h in self.weights]}


def integer_weight_pairs(ws1: Iterable, ws2: Iterable) -> set[tuple[Fraction, Fraction]]:
    """Pairs (h, k) whose total weight h + k is a non-negative integer."""
    out = set()
    for h in ws1:
        for k in ws2:
            total = Q(h) + Q(k)
            if total.denominator == 1 and total >= 0:
                out.add((Q(h), Q(k)))
    return out


def _t(m: int) -> Fraction:
    return Q(1, (m + 2) * (m + 3))


def _m_for_t(t: Fraction) -> int | None:
    if t <= 0 or t.numerator != 1:
        return None
    return find_m(1 - 6 * t)


def series_charges(lower, upper, limit: int = 200) -> list[Fraction]:
    """Discrete-series charges in [lower, upper], scanning m up to ``limit``."""
    lower, upper = Q(lower), Q(upper)
    return [c for c in (central_charge(m) for m in range(limit + 1)) if lower <= c <= upper]


def decompose_charge(c, lower, upper) -> set[tuple[Fraction, ...]]:
    """Every multiset of discrete-series charges in [lower, upper] summing to c.

    Multisets come back as ascending tuples. A sum of k charges equals c
    exactly when the t(m) = 1/((m+2)(m+3)) add up to (k - c)/6; the search
    runs over nondecreasing m, and since t decreases in m the branch can stop
    once the remaining parts can no longer reach the target.
    """
    c, lower, upper = Q(c), Q(lower), Q(upper)
    if lower <= 0:
        raise ValueError("lower bound must be positive")
    if c <= 0 or upper < lower:
        return set()
    # c_m >= lower  <=>  t(m) <= (1 - lower)/6 ; c_m <= upper  <=>  t(m) >= (1 - upper)/6
    t_max = (1 - lower) / 6
    t_min = (1 - upper) / 6
    if t_max <= 0:
        return set()
    m_start = 0
    while _t(m_start) > t_max:
        m_start += 1

    found: set[tuple[Fraction, ...]] = set()

    def allowed(m: int) -> bool:
        return _t(m) >= t_min

    def search(remaining: Fraction, parts: int, m_from: int, acc: list[int]) -> None:
        if parts == 1:
            m = _m_for_t(remaining)
            if m is not None and m >= m_from and allowed(m):
                found.add(tuple(sorted(central_charge(x) for x in acc + [m])))
            return
        m = m_from
        while parts * _t(m) >= remaining:
            t = _t(m)
            if t < t_min:
                break
            if t < remaining:
                search(remaining - t, parts - 1, m, acc + [m])
            m += 1

    max_parts = math.ceil(c / lower)
    for k in range(1, max_parts + 1):
        target = (k - c) / 6
        if target > 0:
            search(target, k, m_start, [])
    return found


# Modules of the type A_2 algebras over L(4/5,0) (x) L(6/7,0).


@dataclass(frozen=True)
class Summand:
    left: str
    right: str
    h: Fraction
    k: Fraction

    @property
    def plain(self) -> bool:
        return self.left.startswith("L(") and self.right.startswith("L(") and "^" not in self.right

    @property
    def total_weight(self) -> Fraction:
        return self.h + self.k

    def label(self) -> str:
        if self.plain:
            return f"({self.h},{self.k})"
        return f"{self.left} x {self.right}"


@dataclass(frozen=True)
class Decomposition:
    case: int
    summands: tuple[Summand, ...]
    annotation: str = ""

    def plain_pairs(self) -> list[tuple[Fraction, Fraction]]:
        return [(s.h, s.k) for s in self.summands if s.plain]


def _plain(h, k) -> Summand:
    return Summand(f"L(4/5,{Q(h)})", f"L(6/7,{Q(k)})", Q(h), Q(k))


def _twisted(left: str, sign: str | None) -> Summand:
    right = "L(6/7,4/3)" if sign is None else f"L(6/7,4/3)^{sign}"
    return Summand(left, right, Q(2, 3), Q(4, 3))


_W_PLUS, _W_MINUS = "W(2/3,+)", "W(2/3,-)"

_TYPE_A2 = (
    Decomposition(1, (_plain(0, 0), _plain(3, 0), _twisted(_W_PLUS, None), _twisted(_W_MINUS, None))),
    Decomposition(2, (_plain(0, 0), _plain(0, 5), _twisted("L(4/5,2/3)", "+1"), _twisted("L(4/5,2/3)", "-1"))),
    Decomposition(3, (_plain(0, 0), _plain(3, 5), _twisted(_W_PLUS, "+1"), _twisted(_W_MINUS, "+1"))),
    Decomposition(
        4,
        (_plain(0, 0), _plain(3, 0), _plain(0, 5), _plain(3, 5),
         _twisted("W(2/3,±)", "+1"), _twisted("W(2/3,∓)", "-1")),
        "3-State Potts model",
    ),
)


def summand_weight_failures(d: Decomposition) -> list[Summand]:
    """Plain summands whose total weight is not an integer."""
    return [s for s in d.summands if s.plain and s.total_weight.denominator != 1]


def type_a2_decompositions() -> list[Decomposition]:
    """The four possible decompositions of the lam = 13/256 vertex algebra."""
    for d in _TYPE_A2:
        bad = summand_weight_failures(d)
        if bad:
            raise AssertionError(f"case {d.case}: non-integral summands {[s.label() for s in bad]}")
    return list(_TYPE_A2)
