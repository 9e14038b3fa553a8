from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, "Eisenstein"]


class Eisenstein:
    """An element ``re + zc*zeta3`` of Q(zeta3), with ``zeta3**2 = -1 - zeta3``."""

    __slots__ = ("_re", "_zc")

    def __init__(self, re: int | Fraction = 0, zc: int | Fraction = 0) -> None:
        self._re = Fraction(re)
        self._zc = Fraction(zc)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def zc(self) -> Fraction:
        return self._zc

    @classmethod
    def coerce(cls, x: Scalar) -> Eisenstein:
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot embed {type(x).__name__} into Q(zeta3)")

    def __repr__(self) -> str:
        return f"Eisenstein({self._re!s}, {self._zc!s})"

    def __str__(self) -> str:
        return f"{self._re.numerator}/{self._re.denominator}{'+' if self._zc >= 0 else '-'}" \
               f"{abs(self._zc.numerator)}/{self._zc.denominator}*zeta3"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Eisenstein):
            return self._re == other._re and self._zc == other._zc
        if isinstance(other, (int, Fraction)):
            return self._zc == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._zc == 0:
            return hash(self._re)
        return hash((self._re, self._zc))

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._zc)

    def __add__(self, other: Scalar) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return Eisenstein(self._re + o._re, self._zc + o._zc)

    __radd__ = __add__

    def __neg__(self) -> Eisenstein:
        return Eisenstein(-self._re, -self._zc)

    def __sub__(self, other: Scalar) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return Eisenstein(self._re - o._re, self._zc - o._zc)

    def __rsub__(self, other: Scalar) -> Eisenstein:
        return (-self) + other

    def __mul__(self, other: Scalar) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._re, self._zc, o._re, o._zc
        # (a + b z)(c + d z) with z^2 = -1 - z
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self) -> Eisenstein:
        return Eisenstein(self._re - self._zc, -self._zc)

    def norm(self) -> Fraction:
        return self._re * self._re - self._re * self._zc + self._zc * self._zc

    def inverse(self) -> Eisenstein:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta3)")
        c = self.conjugate()
        return Eisenstein(c._re / n, c._zc / n)

    def __truediv__(self, other: Scalar) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> Eisenstein:
        return Eisenstein.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> Eisenstein:
        if n < 0:
            return self.inverse() ** (-n)
        result = Eisenstein(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


ZETA3 = Eisenstein(0, 1)


def conj(x: Scalar) -> Scalar:
    """Complex conjugate; the identity on rationals."""
    if isinstance(x, Eisenstein):
        return x.conjugate()
    return x
