"""Finite-dimensional commutative algebras with an invariant form.

A :class:`GriessAlgebra` is given by a structure tensor ``S`` with
``(x*y)_k = sum_ij S[i][j][k] x_i y_j`` and a Gram matrix.  Elements may carry
Eisenstein coordinates (the algebra constants themselves stay rational).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .exact import (
    Eisenstein,
    Matrix,
    format_rational,
    inverse,
    is_positive_definite,
    parse_rational,
    solve_in_span,
    split_eigenspaces,
)
from .exact.eisenstein import conj
from .report import Check, Report, expect

HALF = Fraction(1, 2)
SIXTEENTH = Fraction(1, 16)
# Only possible spectrum of ad(x) for a central-charge-1/2 conformal vector x.
SPECTRUM = (Fraction(2), Fraction(0), HALF, SIXTEENTH)


class AlgebraMismatchError(ValueError):
    pass


class NotConformalError(ValueError):
    pass


class GriessAlgebra:
    def __init__(
        self,
        basis_names: Sequence[str],
        structure: Sequence[Sequence[Sequence]],
        gram: Matrix | Sequence[Sequence],
    ) -> None:
        n = len(basis_names)
        if len(set(basis_names)) != n:
            raise ValueError("duplicate basis names")
        if len(structure) != n or any(len(r) != n or any(len(c) != n for c in r) for r in structure):
            raise ValueError(f"structure tensor must be {n}x{n}x{n}")
        gram = gram if isinstance(gram, Matrix) else Matrix(gram)
        if (gram.rows, gram.cols) != (n, n):
            raise ValueError(f"gram matrix must be {n}x{n}")
        self.dim = n
        self.basis_names = tuple(basis_names)
        self.structure = tuple(
            tuple(tuple(Fraction(x) for x in cell) for cell in row) for row in structure
        )
        self.gram = gram

    @classmethod
    def from_products(
        cls,
        basis_names: Sequence[str],
        products: Mapping[tuple[str, str], Sequence],
        gram: Matrix | Sequence[Sequence],
    ) -> GriessAlgebra:
        """Build from a table ``{(x, y): coords of x*y}``; unlisted products are 0."""
        n = len(basis_names)
        idx = {name: i for i, name in enumerate(basis_names)}
        s = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (x, y), coords in products.items():
            i, j = idx[x], idx[y]
            s[i][j] = [Fraction(c) for c in coords]
            s[j][i] = [Fraction(c) for c in coords]
        return cls(basis_names, s, gram)

    def __repr__(self) -> str:
        return f"GriessAlgebra(dim={self.dim}, basis={list(self.basis_names)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GriessAlgebra):
            return NotImplemented
        return (
            self.basis_names == other.basis_names
            and self.structure == other.structure
            and self.gram == other.gram
        )

    def __hash__(self) -> int:
        return hash((self.basis_names, self.structure, self.gram))

    def element(self, coords: Sequence) -> AlgebraElement:
        return AlgebraElement(self, coords)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, [0] * self.dim)

    def basis(self) -> list[AlgebraElement]:
        return [self.basis_element(i) for i in range(self.dim)]

    def basis_element(self, which: int | str) -> AlgebraElement:
        i = self.basis_names.index(which) if isinstance(which, str) else which
        return AlgebraElement(self, [1 if k == i else 0 for k in range(self.dim)])

    def has(self, name: str) -> bool:
        return name in self.basis_names

    def combo(self, **coeffs) -> AlgebraElement:
        """Linear combination by basis name.

        Names missing from the basis stand for vectors that vanish in this
        algebra (b in the 3-dimensional case) and are skipped.
        """
        coords = [Fraction(0)] * self.dim
        for name, c in coeffs.items():
            if name in self.basis_names:
                coords[self.basis_names.index(name)] = c
        return AlgebraElement(self, coords)

    def __getitem__(self, name: str) -> AlgebraElement:
        return self.basis_element(name)


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: GriessAlgebra, coords: Iterable) -> None:
        coords = tuple(_canon(c) if isinstance(c, Eisenstein) else Fraction(c) for c in coords)
        if len(coords) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def __repr__(self) -> str:
        terms = [f"{c}*{n}" for c, n in zip(self.coords, self.algebra.basis_names) if c != 0]
        return " + ".join(terms) if terms else "0"

    def _check(self, other: AlgebraElement) -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatchError("elements belong to different algebras")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.coords)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, [-a for a in self.coords])

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return product(self, other)
        if isinstance(other, (int, Fraction, Eisenstein)):
            return AlgebraElement(self.algebra, [a * other for a in self.coords])
        return NotImplemented

    def __rmul__(self, other) -> AlgebraElement:
        if isinstance(other, (int, Fraction, Eisenstein)):
            return AlgebraElement(self.algebra, [other * a for a in self.coords])
        return NotImplemented

    def __truediv__(self, other) -> AlgebraElement:
        return self * (1 / Fraction(other) if not isinstance(other, Eisenstein) else other.inverse())

    def is_rational(self) -> bool:
        return all(not isinstance(c, Eisenstein) or c.zc == 0 for c in self.coords)

    def rational_coords(self) -> tuple[Fraction, ...]:
        if not self.is_rational():
            raise ValueError("element has non-rational coordinates")
        return tuple(c.re if isinstance(c, Eisenstein) else c for c in self.coords)

    def conjugate(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, [conj(c) for c in self.coords])

    def inner(self, other: AlgebraElement):
        return inner(self, other)


def _canon(x):
    if isinstance(x, Eisenstein) and x.zc == 0:
        return x.re
    return x


def product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    a = x.algebra
    n = a.dim
    out = [Fraction(0)] * n
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        for j, yj in enumerate(y.coords):
            if yj == 0:
                continue
            w = xi * yj
            cell = a.structure[i][j]
            for k in range(n):
                if cell[k] != 0:
                    out[k] = out[k] + cell[k] * w
    return AlgebraElement(a, [_canon(c) for c in out])


def inner(x: AlgebraElement, y: AlgebraElement):
    """Gram pairing, conjugate-linear in the second argument."""
    x._check(y)
    g = x.algebra.gram
    acc = Fraction(0)
    yc = [conj(c) for c in y.coords]
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        for j, yj in enumerate(yc):
            if yj != 0 and g[i, j] != 0:
                acc = acc + xi * g[i, j] * yj
    return _canon(acc)


def adjoint_matrix(x: AlgebraElement) -> Matrix:
    """Matrix of ``y -> x*y``; column j is ``x * basis_j``."""
    x.rational_coords()
    cols = [product(x, b).coords for b in x.algebra.basis()]
    return Matrix.from_columns(cols)


def eigenbasis(x: AlgebraElement) -> dict[Fraction, list[tuple]]:
    spaces = split_eigenspaces(adjoint_matrix(x), SPECTRUM)
    return dict(zip(SPECTRUM, spaces))


def _change_of_basis(spaces: Mapping[Fraction, list[tuple]]) -> tuple[Matrix, list[Fraction]]:
    cols, labels = [], []
    for mu, vecs in spaces.items():
        for v in vecs:
            cols.append(v)
            labels.append(mu)
    return Matrix.from_columns(cols), labels


def decompose_wrt(v: AlgebraElement, x: AlgebraElement) -> dict[Fraction, AlgebraElement]:
    """Components of ``v`` in the eigenspaces of ``ad(x)``, keyed by eigenvalue."""
    v._check(x)
    spaces = eigenbasis(x)
    p, labels = _change_of_basis(spaces)
    coeffs = inverse(p).apply(v.coords)
    a = v.algebra
    parts = {mu: [Fraction(0)] * a.dim for mu in SPECTRUM}
    for coeff, mu, k in zip(coeffs, labels, range(len(labels))):
        if coeff == 0:
            continue
        col = p.column(k)
        parts[mu] = [s + coeff * c for s, c in zip(parts[mu], col)]
    return {mu: AlgebraElement(a, [_canon(c) for c in parts[mu]]) for mu in SPECTRUM}


def is_conformal(v: AlgebraElement) -> bool:
    return bool(v) and product(v, v) == 2 * v


def central_charge(v: AlgebraElement) -> Fraction:
    if not is_conformal(v):
        raise NotConformalError(f"{v!r} is not conformal (v*v != 2v)")
    return 2 * inner(v, v)


def is_virasoro(w: AlgebraElement) -> bool:
    """True iff ``w`` acts as 2 on every basis element."""
    return all(product(w, b) == 2 * b for b in w.algebra.basis())


class Involution:
    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix) -> None:
        if not matrix.is_square or matrix @ matrix != Matrix.identity(matrix.rows):
            raise ValueError("matrix does not square to the identity")
        self.matrix = matrix

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(x.algebra, self.matrix.apply(x.coords))

    def __matmul__(self, other: Involution | Matrix) -> Matrix:
        m = other.matrix if isinstance(other, Involution) else other
        return self.matrix @ m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Involution):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"Involution({self.matrix!r})"


def tau_involution(x: AlgebraElement) -> Involution:
    """+1 on the 2, 0 and 1/2 eigenspaces of ad(x), -1 on the 1/16 one."""
    spaces = eigenbasis(x)
    p, labels = _change_of_basis(spaces)
    d = Matrix.diag([-1 if mu == SIXTEENTH else 1 for mu in labels])
    return Involution(p @ d @ inverse(p))


def automorphism_check(a: GriessAlgebra, m: Matrix) -> bool:
    """M(x*y) = Mx*My and <Mx, My> = <x, y> on all basis pairs."""
    if (m.rows, m.cols) != (a.dim, a.dim):
        return False
    basis = a.basis()
    images = [a.element(m.apply(b.coords)) for b in basis]
    for i in range(a.dim):
        for j in range(i, a.dim):
            xy = product(basis[i], basis[j])
            if a.element(m.apply(xy.coords)) != product(images[i], images[j]):
                return False
            if inner(images[i], images[j]) != inner(basis[i], basis[j]):
                return False
    return True


def verify_axioms(a: GriessAlgebra) -> Report:
    """Commutativity, symmetric form, invariance on basis triples, positivity.

    Only failing identities become report entries, plus one summary line per
    axiom family.
    """
    report = Report()
    sec = "axioms"
    names = a.basis_names
    bad = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if a.structure[i][j] != a.structure[j][i]:
                bad.append(Check(f"commutativity {names[i]}*{names[j]}", "fail",
                                 a.structure[i][j], a.structure[j][i]))
    report.extend(sec, bad)
    report.add(sec, expect("commutativity", not bad, anchor="commutative product"))

    sym = a.gram.is_symmetric()
    report.add(sec, expect("form symmetric", sym, anchor="symmetric bilinear form"))

    basis = a.basis()
    bad = []
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            xy = product(x, y)
            for k, z in enumerate(basis):
                lhs = inner(xy, z)
                rhs = inner(y, product(x, z))
                if lhs != rhs:
                    bad.append(Check(f"invariance <{names[i]}{names[j]},{names[k]}> = "
                                     f"<{names[j]},{names[i]}{names[k]}>", "fail", lhs, rhs))
    report.extend(sec, bad)
    report.add(sec, expect("invariance", not bad, anchor="<xy,z> = <y,xz>"))

    pd = sym and is_positive_definite(a.gram)
    minors = [a.gram.submatrix(k).det() for k in range(1, a.dim + 1)]
    report.add(sec, expect("positive definite", pd, minors, None, anchor="definite invariant form"))
    return report


def verify_fusion_grading(a: GriessAlgebra, x: AlgebraElement, label: str = "x") -> Report:
    """The four Ising-type containment rules for the eigenspaces of ad(x)."""
    report = Report()
    sec = f"fusion grading wrt {label}"
    spaces = eigenbasis(x)
    p, labels = _change_of_basis(spaces)
    pinv = inverse(p)

    def vecs(*mus):
        return [(mu, a.element(v)) for mu in mus for v in spaces[mu]]

    def outside(v: AlgebraElement, allowed) -> list[Fraction]:
        coeffs = pinv.apply(v.coords)
        return sorted({mu for c, mu in zip(coeffs, labels) if c != 0 and mu not in allowed})

    two, zero, half, sixteenth = SPECTRUM
    # (left eigenvalues, right eigenvalues, allowed target; None = same as right)
    rules = [
        ("(Re+E0)*Eh in Eh", (two, zero), SPECTRUM, None),
        ("E1/2*E1/2 in Re+E0", (half,), (half,), (two, zero)),
        ("(Re+E0+E1/2)*E1/16 in E1/16", (two, zero, half), (sixteenth,), (sixteenth,)),
        ("E1/16*E1/16 in Re+E0+E1/2", (sixteenth,), (sixteenth,), (two, zero, half)),
    ]
    for name, left, right, allowed in rules:
        bad = []
        for mu_l, u in vecs(*left):
            for mu_r, w in vecs(*right):
                stray = outside(product(u, w), (mu_r,) if allowed is None else allowed)
                if stray:
                    bad.append([format_rational(mu_l), format_rational(mu_r),
                                [format_rational(s) for s in stray]])
        report.add(sec, expect(name, not bad, bad or None, None, anchor="Ising fusion rules"))
    report.add(sec, Check("eigenspace dims", "pass",
                          [len(spaces[mu]) for mu in SPECTRUM], [format_rational(mu) for mu in SPECTRUM]))
    return report


def find_virasoro(a: GriessAlgebra) -> AlgebraElement | None:
    """The element acting as 2 on the whole algebra, solved for directly."""
    n = a.dim
    columns = []
    for i in range(n):
        columns.append([a.structure[i][j][k] for j in range(n) for k in range(n)])
    target = [2 if j == k else 0 for j in range(n) for k in range(n)]
    coords = solve_in_span(columns, target)
    return None if coords is None else a.element(coords)


def eigenspaces_orthogonal(x: AlgebraElement) -> bool:
    spaces = eigenbasis(x)
    a = x.algebra
    for mu in SPECTRUM:
        for nu in SPECTRUM:
            if mu < nu:
                for u in spaces[mu]:
                    for v in spaces[nu]:
                        if inner(a.element(u), a.element(v)) != 0:
                            return False
    return True


def is_self_adjoint(m: Matrix, gram: Matrix) -> bool:
    """``<m y, z> = <y, m z>``, i.e. ``m^T G = G m``."""
    return m.transpose() @ gram == gram @ m


# -- JSON file format -------------------------------------------------------


def to_json_dict(a: GriessAlgebra) -> dict:
    triples = []
    for i in range(a.dim):
        for j in range(i, a.dim):
            for k in range(a.dim):
                v = a.structure[i][j][k]
                if v != 0:
                    triples.append([i, j, k, format_rational(v)])
    return {
        "basis": list(a.basis_names),
        "structure": triples,
        "gram": [[format_rational(a.gram[i, j]) for j in range(a.dim)] for i in range(a.dim)],
    }


def from_json_dict(doc: Mapping) -> GriessAlgebra:
    """Parse the sparse JSON form; raises ValueError on any malformed field."""
    if not isinstance(doc, Mapping):
        raise ValueError("algebra document must be a JSON object")
    try:
        basis = doc["basis"]
        triples = doc["structure"]
        gram_rows = doc["gram"]
    except KeyError as exc:
        raise ValueError(f"missing key {exc.args[0]!r}") from None
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis) or not basis:
        raise ValueError("'basis' must be a non-empty list of names")
    n = len(basis)
    s = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    if not isinstance(triples, list):
        raise ValueError("'structure' must be a list")
    for t in triples:
        if not (isinstance(t, list) and len(t) == 4 and all(isinstance(v, int) and not isinstance(v, bool)
                                                            for v in t[:3])):
            raise ValueError(f"bad structure entry {t!r}")
        i, j, k, val = t
        if not (0 <= i <= j < n and 0 <= k < n):
            raise ValueError(f"structure indices out of range or i > j: {t!r}")
        if (i, j, k) in seen:
            raise ValueError(f"duplicate structure entry {t!r}")
        seen.add((i, j, k))
        v = parse_rational(val, strict=True)
        s[i][j][k] = v
        s[j][i][k] = v
    if not isinstance(gram_rows, list) or len(gram_rows) != n:
        raise ValueError(f"'gram' must have {n} rows")
    gram = []
    for row in gram_rows:
        if not isinstance(row, list) or len(row) != n:
            raise ValueError(f"'gram' rows must have {n} entries")
        gram.append([parse_rational(v, strict=True) for v in row])
    return GriessAlgebra(basis, s, gram)


def dump_algebra(a: GriessAlgebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_json_dict(a), indent=2) + "\n")


def load_algebra(path: str | Path) -> GriessAlgebra:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return from_json_dict(doc)


__all__ = [
    "SPECTRUM",
    "AlgebraElement",
    "AlgebraMismatchError",
    "GriessAlgebra",
    "Involution",
    "NotConformalError",
    "adjoint_matrix",
    "automorphism_check",
    "central_charge",
    "decompose_wrt",
    "dump_algebra",
    "eigenspaces_orthogonal",
    "find_virasoro",
    "from_json_dict",
    "inner",
    "is_conformal",
    "is_self_adjoint",
    "is_virasoro",
    "load_algebra",
    "product",
    "tau_involution",
    "to_json_dict",
    "verify_axioms",
    "verify_fusion_grading",
]
