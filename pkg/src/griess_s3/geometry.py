"""The S3 generated by tau_e and tau_f and the computations it supports.

theta = tau_e tau_f has order three and permutes e -> f -> f^tau_e -> e.
For lam = 13/256 its fixed space is spanned by two orthogonal conformal
vectors of central charges 4/5 and 6/7.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ansatz import distinguished_pair, virasoro_formula
from .exact import ZETA3, Eisenstein, Matrix, kernel, rank
from .griess import (
    AlgebraElement,
    GriessAlgebra,
    Involution,
    automorphism_check,
    central_charge,
    inner,
    is_conformal,
    product,
    tau_involution,
)
from .report import Check, Report, compare, expect

Q = Fraction
TYPE_A2_LAMBDA = Q(13, 256)


class NotS3Error(ArithmeticError):
    pass


class IdentityError(AssertionError):
    """A claimed identity failed; carries both sides."""

    def __init__(self, name: str, lhs, rhs) -> None:
        self.name, self.lhs, self.rhs = name, lhs, rhs
        super().__init__(f"{name}: {lhs!r} != {rhs!r}")


def _raise_failures(checks: list[Check]) -> None:
    for c in checks:
        if c.status == "fail":
            raise IdentityError(c.name, c.lhs, c.rhs)


@dataclass(frozen=True)
class S3Action:
    tau_e: Involution
    tau_f: Involution
    theta: Matrix

    def apply_theta(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(x.algebra, self.theta.apply(x.coords))


def action_checks(a: GriessAlgebra) -> tuple[S3Action, list[Check]]:
    lam, e, f = distinguished_pair(a)
    te, tf = tau_involution(e), tau_involution(f)
    theta = te @ tf
    ident = Matrix.identity(a.dim)
    act = S3Action(te, tf, theta)
    fte = te(f)
    checks = [
        compare("tau_e^2 = 1", te @ te, ident, "tau_e is an involution"),
        compare("tau_f^2 = 1", tf @ tf, ident, "tau_f is an involution"),
        compare("(tau_e tau_f)^3 = 1", theta**3, ident, "G = <tau_e, tau_f> is S3"),
        expect("tau_e tau_f != 1", theta != ident, anchor="G = <tau_e, tau_f> is S3"),
        compare("tau_e tau_f tau_e = tau_f tau_e tau_f", te.matrix @ tf.matrix @ te.matrix,
                tf.matrix @ te.matrix @ tf.matrix, "braid relation"),
        expect("tau_e is an automorphism", automorphism_check(a, te.matrix), anchor="G acts on the algebra"),
        expect("tau_f is an automorphism", automorphism_check(a, tf.matrix), anchor="G acts on the algebra"),
        compare("theta(e) = f", act.apply_theta(e), f, "e^theta = f"),
        compare("theta(f) = f^tau_e", act.apply_theta(f), fte, "f^theta = f^tau_e"),
        compare("f^tau_e = e^tau_f", fte, tf(e), "f^tau_e = e^tau_f"),
        compare("tau_e tau_f tau_e swaps e and f", (te(tf(te(e))), te(tf(te(f)))), (f, e),
                "tau_e^-1 tau_f tau_e (e) = f"),
    ]
    return act, checks


def build_action(a: GriessAlgebra) -> S3Action:
    act, checks = action_checks(a)
    if act.theta ** 3 != Matrix.identity(a.dim) or act.theta == Matrix.identity(a.dim):
        raise NotS3Error("not S3: tau_e tau_f does not have order 3")
    _raise_failures(checks)
    return act


def orbit_of_e(a: GriessAlgebra, act: S3Action | None = None) -> list[AlgebraElement]:
    act = act or build_action(a)
    e = a["e"]
    first = act.apply_theta(e)
    return [e, first, act.apply_theta(first)]


def _require_type_a2(a: GriessAlgebra) -> Fraction:
    lam = distinguished_pair(a)[0]
    if lam != TYPE_A2_LAMBDA or a.dim != 4:
        raise ValueError(f"needs the 4-dimensional lam = 13/256 algebra, got lam = {lam}")
    return lam


def _f_minus(a: GriessAlgebra, lam: Fraction) -> AlgebraElement:
    return a.combo(e=lam, a=1, b=1, c=-1)


def alpha_beta_checks(a: GriessAlgebra):
    lam = _require_type_a2(a)
    _, e, f = distinguished_pair(a)
    alpha = e + f + _f_minus(a, lam)
    beta = Q(16, 3) * alpha
    omega = virasoro_formula(a, lam)
    anchor = "theta-fixed vectors"
    checks = [
        compare("alpha = (2 lam + 1) e + 2a + 2b", alpha, a.combo(e=2 * lam + 1, a=2, b=2), anchor),
        compare("alpha*alpha = 57/16 alpha - 315/256 omega", alpha * alpha,
                Q(57, 16) * alpha - Q(315, 256) * omega, anchor),
        compare("beta*beta = 19 beta - 35 omega", beta * beta, 19 * beta - 35 * omega, anchor),
        compare("<beta,beta> = 47/2", inner(beta, beta), Q(47, 2), anchor),
        compare("<beta,omega> = 4", inner(beta, omega), Q(4), anchor),
        compare("<omega,omega> = 29/35", inner(omega, omega), Q(29, 35), anchor),
    ]
    return alpha, beta, omega, checks


def alpha_beta(a: GriessAlgebra) -> tuple[AlgebraElement, AlgebraElement]:
    alpha, beta, _, checks = alpha_beta_checks(a)
    _raise_failures(checks)
    return alpha, beta


def conformal_split_checks(a: GriessAlgebra):
    alpha, beta, omega, _ = alpha_beta_checks(a)
    w2 = Q(2, 9) * (7 * omega - beta)
    w3 = omega - w2
    anchor = "conformal splitting of omega"
    checks = [
        expect("omega_2 conformal", is_conformal(w2), w2 * w2, 2 * w2, anchor),
        expect("omega_3 conformal", is_conformal(w3), w3 * w3, 2 * w3, anchor),
        compare("omega_2*omega_3 = 0", w2 * w3, a.zero(), anchor),
        compare("<omega_2,omega_3> = 0", inner(w2, w3), Q(0), anchor),
        compare("charge(omega_2) = 4/5", 2 * inner(w2, w2), Q(4, 5), anchor),
        compare("charge(omega_3) = 6/7", 2 * inner(w3, w3), Q(6, 7), anchor),
        compare("charge(omega) = charge(omega_2) + charge(omega_3)", 2 * inner(omega, omega),
                2 * inner(w2, w2) + 2 * inner(w3, w3), anchor),
        compare("2(7 omega - beta)/9 = 2(21 omega - 16 alpha)/27", w2,
                Q(2, 27) * (21 * omega - 16 * alpha), anchor),
    ]
    return w2, w3, checks


def conformal_split(a: GriessAlgebra) -> tuple[AlgebraElement, AlgebraElement]:
    w2, w3, checks = conformal_split_checks(a)
    _raise_failures(checks)
    return w2, w3


def gamma(a: GriessAlgebra) -> AlgebraElement:
    """e + zeta3 f + zeta3^2 f^tau_e."""
    lam = _require_type_a2(a)
    _, e, f = distinguished_pair(a)
    return e + ZETA3 * f + (ZETA3 * ZETA3) * _f_minus(a, lam)


def gamma_checks(a: GriessAlgebra) -> list[Check]:
    act = build_action(a)
    alpha, beta, omega, _ = alpha_beta_checks(a)
    w2, _, _ = conformal_split_checks(a)
    g = gamma(a)
    anchor = "theta-eigenvector gamma"
    return [
        expect("gamma != 0", bool(g), g, None, anchor),
        compare("theta(gamma) = zeta3^-1 gamma", act.apply_theta(g), ZETA3.inverse() * g, anchor),
        compare("alpha*gamma = 33/16 gamma", alpha * g, Q(33, 16) * g, anchor),
        compare("beta*gamma = 11 gamma", beta * g, 11 * g, anchor),
        compare("omega_2*gamma = 2/3 gamma", w2 * g, Q(2, 3) * g, anchor),
        compare("omega_2*conj(gamma) = 2/3 conj(gamma)", w2 * g.conjugate(), Q(2, 3) * g.conjugate(), anchor),
        compare("omega*gamma = 2 gamma", omega * g, 2 * g, anchor),
        expect("<gamma,gamma> real and positive",
               not isinstance(inner(g, g), Eisenstein) and inner(g, g) > 0, inner(g, g), None, anchor),
    ]


def gamma_relations(a: GriessAlgebra) -> Report:
    checks = gamma_checks(a)
    _raise_failures(checks)
    report = Report()
    report.extend("gamma relations", checks)
    return report


def theta_fixed_subspace(a: GriessAlgebra) -> list[AlgebraElement]:
    act = build_action(a)
    return [a.element(v) for v in kernel(act.theta - Matrix.identity(a.dim))]


def theta_eigenspace(a: GriessAlgebra, eigenvalue) -> list[AlgebraElement]:
    """Kernel of theta - eigenvalue over Q(zeta3)."""
    act = build_action(a)
    m = act.theta - Matrix.identity(a.dim) * Eisenstein.coerce(eigenvalue)
    return [a.element(v) for v in kernel(m)]


def orbit_checks(a: GriessAlgebra) -> list[Check]:
    lam = distinguished_pair(a)[0]
    orbit = orbit_of_e(a)
    checks = [expect("orbit of e has 3 distinct elements", len(set(orbit)) == 3, anchor="e^theta = f")]
    for i, x in enumerate(orbit):
        checks.append(compare(f"charge(theta^{i} e) = 1/2", central_charge(x) if is_conformal(x) else None,
                              Q(1, 2), "orbit members are Ising vectors"))
        for j in range(i + 1, len(orbit)):
            checks.append(compare(f"<theta^{i} e, theta^{j} e> = lam/4", inner(x, orbit[j]), lam / 4,
                                  "<e,f> = lam/4"))
    return checks


def type_a2_checks(a: GriessAlgebra) -> Report:
    """All theta-related identities for the lam = 13/256 algebra, as report entries."""
    report = Report()
    _, _, _, checks = alpha_beta_checks(a)
    report.extend("alpha and beta", checks)
    _, _, checks = conformal_split_checks(a)
    report.extend("conformal splitting", checks)
    report.extend("gamma relations", gamma_checks(a))
    fixed = theta_fixed_subspace(a)
    w2, w3, _ = conformal_split_checks(a)
    span_rank = rank(Matrix.from_columns([v.coords for v in fixed] + [w2.coords, w3.coords]))
    report.add("theta-fixed space", compare("dim fixed space", len(fixed), 2, "fixed space = C omega_2 + C omega_3"))
    report.add("theta-fixed space", compare("fixed space = span(omega_2, omega_3)", span_rank, 2,
                                            "fixed space = C omega_2 + C omega_3"))
    return report
