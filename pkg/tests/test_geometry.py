from __future__ import annotations

from fractions import Fraction

import pytest

from griess_s3.ansatz import distinguished_pair, virasoro_formula
from griess_s3.exact import ZETA3, Matrix, solve_in_span
from griess_s3.geometry import (
    action_checks,
    alpha_beta,
    build_action,
    conformal_split,
    gamma,
    gamma_relations,
    orbit_checks,
    orbit_of_e,
    theta_eigenspace,
    theta_fixed_subspace,
    type_a2_checks,
)
from griess_s3.griess import automorphism_check, central_charge, inner

Q = Fraction


def test_s3_relations(built):
    _, alg = built
    act = build_action(alg)
    ident = Matrix.identity(alg.dim)
    assert act.tau_e @ act.tau_e == ident == act.tau_f @ act.tau_f
    assert act.theta**3 == ident and act.theta != ident
    assert automorphism_check(alg, act.tau_e.matrix)
    assert automorphism_check(alg, act.tau_f.matrix)
    _, checks = action_checks(alg)
    assert all(c.status == "pass" for c in checks)


def test_theta_orbit_of_e(alg_a2):
    lam, e, f = distinguished_pair(alg_a2)
    orbit = orbit_of_e(alg_a2)
    act = build_action(alg_a2)
    assert orbit == [e, f, act.tau_e(f)]
    assert act.tau_e(f) == alg_a2.combo(e=lam, a=1, b=1, c=-1)
    for i in range(3):
        assert central_charge(orbit[i]) == Q(1, 2)
        for j in range(i + 1, 3):
            assert inner(orbit[i], orbit[j]) == Q(13, 1024)
    assert all(c.status == "pass" for c in orbit_checks(alg_a2))


def test_alpha_beta_identities(alg_a2):
    alpha, beta = alpha_beta(alg_a2)
    omega = virasoro_formula(alg_a2, Q(13, 256))
    assert alpha == alg_a2.combo(e=Q(13, 128) + 1, a=2, b=2)
    assert alpha * alpha == Q(57, 16) * alpha - Q(315, 256) * omega
    assert beta * beta == 19 * beta - 35 * omega
    assert inner(beta, beta) == Q(47, 2)
    assert inner(beta, omega) == 4
    assert inner(omega, omega) == Q(29, 35)


def test_alpha_square_expanded(alg_a2):
    # the b-part of alpha*alpha - 2 alpha is 25/8
    alpha, _ = alpha_beta(alg_a2)
    rem = alpha * alpha - 2 * alpha
    assert rem == alg_a2.combo(e=Q(1005, 2048), a=Q(1, 8), b=Q(25, 8))


def test_conformal_split(alg_a2):
    w2, w3 = conformal_split(alg_a2)
    omega = virasoro_formula(alg_a2, Q(13, 256))
    assert w2 + w3 == omega
    assert central_charge(w2) == Q(4, 5)
    assert central_charge(w3) == Q(6, 7)
    assert w2 * w3 == alg_a2.zero()
    assert inner(w2, w3) == 0


def test_gamma_relations(alg_a2):
    g = gamma(alg_a2)
    alpha, beta = alpha_beta(alg_a2)
    w2, _ = conformal_split(alg_a2)
    act = build_action(alg_a2)
    assert act.apply_theta(g) == ZETA3.inverse() * g
    assert alpha * g == Q(33, 16) * g
    assert beta * g == 11 * g
    assert w2 * g == Q(2, 3) * g
    assert gamma_relations(alg_a2).ok()


def test_gamma_spans_the_zeta_inverse_eigenspace(alg_a2):
    space = theta_eigenspace(alg_a2, ZETA3**2)
    assert len(space) == 1
    assert solve_in_span([space[0].coords], gamma(alg_a2).coords) is not None
    conj_space = theta_eigenspace(alg_a2, ZETA3)
    assert solve_in_span([conj_space[0].coords], gamma(alg_a2).conjugate().coords) is not None


def test_theta_fixed_space(alg_a2, alg_b):
    fixed = theta_fixed_subspace(alg_a2)
    w2, w3 = conformal_split(alg_a2)
    assert len(fixed) == 2
    coords = [v.coords for v in fixed]
    assert solve_in_span(coords, w2.coords) is not None
    assert solve_in_span(coords, w3.coords) is not None
    assert len(theta_fixed_subspace(alg_b)) == 1


def test_type_a2_only_functions_reject_lam_b(alg_b):
    with pytest.raises(ValueError):
        alpha_beta(alg_b)


def test_type_a2_report(alg_a2):
    report = type_a2_checks(alg_a2)
    assert report.ok() and not report.flagged
    assert len(report.checks) >= 20
