"""Canonical text form for rationals.

``fractions.Fraction`` already stores values reduced with a positive
denominator, so it is used directly as the rational scalar type.  This module
only fixes the ``"p/q"`` wire format.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str | int | Fraction, *, strict: bool = False) -> Fraction:
    """Parse ``"p/q"`` (or a bare integer) into a Fraction.

    With ``strict=True`` the text must already be canonical: ``q > 0`` and
    ``gcd(p, q) = 1``.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    value = Fraction(num, den)
    if strict and (value.numerator != num or value.denominator != den):
        raise ValueError(f"rational not in lowest terms: {text!r}")
    return value


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    """Render a Fraction or an Eisenstein number canonically."""
    from .eisenstein import Eisenstein

    if isinstance(x, Eisenstein):
        if x.zc == 0:
            return format_rational(x.re)
        return str(x)
    return format_rational(x)
