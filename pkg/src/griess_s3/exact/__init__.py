"""Exact scalars, polynomials and linear algebra over Q and Q(zeta3)."""

from .eisenstein import ZETA3, Eisenstein
from .matrix import (
    Matrix,
    NotDiagonalizableError,
    inverse,
    is_positive_definite,
    kernel,
    rank,
    solve_in_span,
    split_eigenspaces,
)
from .poly import PoleError, Poly, RationalFn, rational_roots
from .rational import format_rational, parse_rational, format_scalar

__all__ = [
    "ZETA3",
    "Eisenstein",
    "Matrix",
    "NotDiagonalizableError",
    "PoleError",
    "Poly",
    "RationalFn",
    "format_rational",
    "format_scalar",
    "is_positive_definite",
    "inverse",
    "kernel",
    "rank",
    "solve_in_span",
    "parse_rational",
    "rational_roots",
    "split_eigenspaces",
]
