"""Univariate polynomials and rational functions over Q."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Iterable


class PoleError(ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Polynomial with ascending rational coefficients; zero is ``()``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        self.coeffs = _strip(coeffs)

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> Poly:
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @staticmethod
    def _lift(other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        raise TypeError(f"cannot use {type(other).__name__} as a polynomial")

    def __add__(self, other) -> Poly:
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        o = self._lift(other)
        if self.is_zero() or o.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return reduce(lambda acc, _: acc * self, range(n), Poly.const(1))

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            shift = len(rem) - 1 - d
            factor = rem[-1] / other.lead
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(q), Poly(rem)

    def __floordiv__(self, other) -> Poly:
        return self.divmod(self._lift(other))[0]

    def __mod__(self, other) -> Poly:
        return self.divmod(self._lift(other))[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return Poly(c / self.lead for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def primitive_integer_form(self) -> tuple[int, ...]:
        """Integer coefficients with content 1 and positive leading term."""
        if self.is_zero():
            return ()
        lcm = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.coeffs), 1)
        ints = [int(c * lcm) for c in self.coeffs]
        g = reduce(gcd, (abs(i) for i in ints))
        sign = 1 if ints[-1] > 0 else -1
        return tuple(sign * i // g for i in ints)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_root_candidates(p: Poly) -> set[Fraction]:
    """Every ``±u/v`` allowed by the rational-root theorem, plus 0 if p(0)=0."""
    ints = list(p.primitive_integer_form())
    out: set[Fraction] = set()
    if ints and ints[0] == 0:
        out.add(Fraction(0))
    while ints and ints[0] == 0:
        ints.pop(0)
    if len(ints) <= 1:
        return out
    for u in _divisors(ints[0]):
        for v in _divisors(ints[-1]):
            out.add(Fraction(u, v))
            out.add(Fraction(-u, v))
    return out


def rational_roots(p: Poly) -> set[Fraction]:
    """Exact set of rational roots of a nonzero polynomial."""
    if p.is_zero():
        raise ValueError("indeterminate roots: zero polynomial")
    return {r for r in rational_root_candidates(p) if p(r) == 0}


class RationalFn:
    """Quotient num/den of polynomials, kept coprime with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None) -> None:
        num = Poly._lift(num)
        den = Poly.const(1) if den is None else Poly._lift(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        scale = den.lead
        self.num = Poly(c / scale for c in num.coeffs)
        self.den = Poly(c / scale for c in den.coeffs)

    @classmethod
    def x(cls) -> RationalFn:
        return cls(Poly.x())

    def __repr__(self) -> str:
        return f"RationalFn({self.num!r}, {self.den!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    @staticmethod
    def _lift(other) -> RationalFn:
        if isinstance(other, RationalFn):
            return other
        return RationalFn(other)

    def __add__(self, other) -> RationalFn:
        o = self._lift(other)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFn:
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> RationalFn:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> RationalFn:
        return self._lift(other) - self

    def __mul__(self, other) -> RationalFn:
        o = self._lift(other)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFn:
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RationalFn:
        return self._lift(other) / self

    def __pow__(self, n: int) -> RationalFn:
        if n < 0:
            return RationalFn(1) / (self ** (-n))
        return RationalFn(self.num ** n, self.den ** n)

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise PoleError(f"pole at {x}")
        return Fraction(self.num(x)) / d

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def roots(self) -> set[Fraction]:
        """Rational zeros (numerator roots; num/den are coprime)."""
        return rational_roots(self.num)


def lam_linear(a, b) -> RationalFn:
    """``a + b*lam`` as a rational function."""
    return RationalFn(Poly((a, b)))
