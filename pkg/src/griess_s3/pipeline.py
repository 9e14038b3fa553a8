"""End-to-end verification runs assembled from the library checks.

``verify_algebra`` certifies one algebra file; ``full_report`` reproduces
every quantitative claim about both admissible algebras, the discrete-series
tables and the fusion rings, followed by the audit of tabulated constants.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import fusion, series
from .ansatz import (
    admissible_lambdas,
    audit_tabulated_constants,
    build_algebra,
    candidate_lambdas,
    derived_frame,
    distinguished_pair,
    norm_roots,
    omega_1,
    virasoro_formula,
)
from .exact import format_rational
from .geometry import action_checks, conformal_split, orbit_checks, type_a2_checks
from .griess import (
    GriessAlgebra,
    adjoint_matrix,
    central_charge,
    eigenspaces_orthogonal,
    find_virasoro,
    inner,
    is_conformal,
    is_self_adjoint,
    product,
    verify_axioms,
    verify_fusion_grading,
)
from .report import FAIL, Check, Report, compare, expect

Q = Fraction
TYPE_A2_LAMBDA = Q(13, 256)

# central charges of omega_1 and omega for each admissible lam
EXPECTED_CHARGES = {
    Q(1, 64): (Q(21, 22), Q(16, 11)),
    Q(13, 256): (Q(81, 70), Q(58, 35)),
}


def _guarded(report: Report, section: str, run: Callable[[], list[Check] | Report]) -> None:
    """Run one block of checks; an exception becomes a failing entry instead of a crash."""
    try:
        out = run()
    except Exception as exc:  # noqa: BLE001 - any error here is a verification failure
        report.add(section, Check(f"{section} raised", FAIL, f"{type(exc).__name__}: {exc}", None, section))
        return
    if isinstance(out, Report):
        for name, checks in out.sections.items():
            report.extend(section if len(out.sections) == 1 else f"{section}: {name}", checks)
    else:
        report.extend(section, out)


def ab_c_coefficient(lam: Fraction) -> Fraction:
    """Scalar by which a + b acts on c."""
    return Q(93, 256) * (3 - 16 * lam) + Q(23, 256) * (64 * lam - 1)


def _basics(alg: GriessAlgebra) -> list[Check]:
    lam, e, f = distinguished_pair(alg)
    a_plus_b = alg.combo(a=1, b=1)
    c = alg["c"]
    return [
        expect("lam admissible", lam in admissible_lambdas(), lam, sorted(admissible_lambdas()),
               "<e,f> in {1/2^8, 13/2^10}"),
        compare("e*e = 2e", e * e, 2 * e, "e is conformal"),
        compare("f*f = 2f", f * f, 2 * f, "f is conformal"),
        compare("<e,e> = 1/4", inner(e, e), Q(1, 4), "central charge 1/2"),
        compare("<f,f> = 1/4", inner(f, f), Q(1, 4), "central charge 1/2"),
        compare("<e,f> = lam/4", inner(e, f), lam / 4, "<e,f> = lam/4"),
        compare("(a+b)c = k(lam) c", product(a_plus_b, c), ab_c_coefficient(lam) * c, "(a+b) acts on c by a scalar"),
    ]


def _adjoint_checks(alg: GriessAlgebra) -> list[Check]:
    _, e, f = distinguished_pair(alg)
    checks = []
    for name, x in (("e", e), ("f", f)):
        checks.append(expect(f"ad({name}) self-adjoint", is_self_adjoint(adjoint_matrix(x), alg.gram),
                             anchor="invariant form"))
        checks.append(expect(f"eigenspaces of ad({name}) orthogonal", eigenspaces_orthogonal(x),
                             anchor="invariant form"))
    return checks


def _virasoro_checks(alg: GriessAlgebra) -> list[Check]:
    lam, e, f = distinguished_pair(alg)
    w = find_virasoro(alg)
    w_formula = virasoro_formula(alg, lam)
    w1 = omega_1(alg, lam)
    checks = [
        expect("Virasoro element exists", w is not None, anchor="omega acts as 2 on the algebra"),
        compare("omega = e + 16/(9 - 48 lam) a", w, w_formula, "omega = e + omega_1"),
        expect("omega_1 conformal", is_conformal(w1), w1 * w1, 2 * w1, "omega_1 conformal"),
        compare("e*omega_1 = 0", e * w1, alg.zero(), "e and omega_1 orthogonal"),
        compare("charge(e) = 1/2", central_charge(e), Q(1, 2), "central charge 1/2"),
        compare("charge(f) = 1/2", central_charge(f), Q(1, 2), "central charge 1/2"),
    ]
    if lam in EXPECTED_CHARGES:
        c1, c = EXPECTED_CHARGES[lam]
        checks.append(compare(f"charge(omega_1) = {format_rational(c1)}", central_charge(w1), c1,
                              "central charge of omega_1"))
        checks.append(compare(f"charge(omega) = {format_rational(c)}", central_charge(w_formula), c,
                              "central charge of omega"))
    checks.append(compare("charge(omega) = charge(e) + charge(omega_1)", central_charge(w_formula),
                          central_charge(e) + central_charge(w1), "omega = e + omega_1"))
    return checks


def _orbit_and_action(alg: GriessAlgebra) -> list[Check]:
    _, checks = action_checks(alg)
    return checks + orbit_checks(alg)


def verify_algebra(alg: GriessAlgebra) -> Report:
    report = Report()
    _guarded(report, "axioms", lambda: verify_axioms(alg))
    _guarded(report, "frame", lambda: _basics(alg))
    _guarded(report, "adjoint", lambda: _adjoint_checks(alg))
    _guarded(report, "fusion grading e", lambda: verify_fusion_grading(alg, distinguished_pair(alg)[1], "e"))
    _guarded(report, "fusion grading f", lambda: verify_fusion_grading(alg, distinguished_pair(alg)[2], "f"))
    _guarded(report, "virasoro", lambda: _virasoro_checks(alg))
    _guarded(report, "S3 action", lambda: _orbit_and_action(alg))
    try:
        type_a2 = alg.dim == 4 and distinguished_pair(alg)[0] == TYPE_A2_LAMBDA
    except Exception:  # noqa: BLE001 - already reported above
        type_a2 = False
    if type_a2:
        _guarded(report, "theta-fixed identities", lambda: type_a2_checks(alg))
    return report


def lambda_summary() -> dict:
    adm = sorted(admissible_lambdas())
    return {
        "candidates": sorted(candidate_lambdas()),
        "norm_roots": sorted(norm_roots()),
        "admissible": adm,
        "inner_products": [lam / 4 for lam in adm],
        "rejected": {
            format_rational(lam): ("norm <f,f> != 1/4" if lam not in norm_roots() else "not a compatibility root")
            for lam in sorted((candidate_lambdas() | norm_roots()) - set(adm))
        },
    }


def _classification_checks() -> list[Check]:
    s = lambda_summary()
    anchor = "classification of <e,f>"
    return [
        compare("candidate lam", s["candidates"], sorted([Q(3, 16), Q(1, 64), Q(13, 256)]), anchor),
        compare("admissible lam", s["admissible"], [Q(1, 64), Q(13, 256)], anchor),
        compare("<e,f> values", s["inner_products"], [Q(1, 256), Q(13, 1024)], anchor),
    ]


def _derived_frame_checks() -> list[Check]:
    checks = []
    for lam in sorted(admissible_lambdas()):
        try:
            derived_frame(lam)
            checks.append(expect(f"lam={format_rational(lam)}: g, h, i match eigen-projection", True,
                                 anchor="components of e along ad(f)"))
        except Exception as exc:  # noqa: BLE001
            checks.append(expect(f"lam={format_rational(lam)}: g, h, i match eigen-projection", False,
                                 str(exc), None, "components of e along ad(f)"))
    return checks


def _sorted_pairs(pairs) -> list[list[Fraction]]:
    return [list(p) for p in sorted(pairs)]


def _series_checks() -> list[Check]:
    w9, w4 = series.weights(9), series.weights(4)
    six = {(0, 0), (0, 8), (Q(1, 2), Q(7, 2)), (Q(1, 2), Q(45, 2)), (Q(1, 16), Q(31, 16)), (Q(1, 16), Q(175, 16))}
    five = {(0, 0), (0, 5), (Q(2, 3), Q(4, 3)), (3, 0), (3, 5)}
    six = {(Q(h), Q(k)) for h, k in six}
    five = {(Q(h), Q(k)) for h, k in five}
    expected_w4 = {Q(0), Q(1, 56), Q(1, 21), Q(5, 56), Q(1, 7), Q(3, 8), Q(10, 21), Q(33, 56), Q(5, 7), Q(4, 3),
                   Q(85, 56), Q(12, 7), Q(23, 8), Q(22, 7), Q(5)}
    return [
        compare("find_m(21/22)", series.find_m(Q(21, 22)), 9, "c = 21/22 is c_9"),
        compare("find_m(4/5)", series.find_m(Q(4, 5)), 3, "c = 4/5 is c_3"),
        compare("find_m(6/7)", series.find_m(Q(6, 7)), 4, "c = 6/7 is c_4"),
        compare("3/2 in weights(9)", Q(3, 2) in w9, False, "no weight 3/2 at c = 21/22"),
        compare("weights(4)", sorted(w4), sorted(expected_w4), "weights at c = 6/7"),
        compare("integer-weight pairs, c = 1/2 and 21/22",
                _sorted_pairs(series.integer_weight_pairs(series.weights(1), w9)), _sorted_pairs(six),
                "six candidate modules"),
        compare("integer-weight pairs, {0,2/3,3} and {0,4/3,5}",
                _sorted_pairs(series.integer_weight_pairs({Q(0), Q(2, 3), Q(3)}, {Q(0), Q(4, 3), Q(5)})),
                _sorted_pairs(five), "five candidate modules"),
        compare("81/70 as a sum of charges in [1/2, 23/35]",
                sorted(series.decompose_charge(Q(81, 70), Q(1, 2), Q(23, 35))), [], "81/70 is not such a sum"),
        compare("58/35 as a sum of charges in [1/2, 1]",
                [list(x) for x in sorted(series.decompose_charge(Q(58, 35), Q(1, 2), Q(1)))],
                [[Q(4, 5), Q(6, 7)]], "58/35 = 4/5 + 6/7"),
    ]


def _decomposition_checks() -> list[Check]:
    checks = []
    for d in series.type_a2_decompositions():
        checks.append(expect(f"case ({d.case}) summands", not series.summand_weight_failures(d),
                             [s.label() for s in d.summands], d.annotation or None,
                             "decompositions of the lam = 13/256 algebra"))
    return checks


def _fusion_checks() -> list[Check]:
    checks = []
    for name in fusion.BUILTIN_NAMES:
        ring = fusion.builtin(name)
        rep = fusion.verify(ring)
        checks.append(expect(f"{name}: unit, commutativity, associativity", rep.ok(), len(ring.labels),
                             rep.summary(), "fusion rules"))
    vir = fusion.builtin("vir_4_5")
    checks.append(compare("closure of 2/3 in vir_4_5", sorted(fusion.closure(vir, {"2/3"})), sorted({"0", "2/3", "3"}),
                          "closure of L(4/5,2/3)"))
    sub = fusion.relabel(fusion.subring(vir, {"0", "2/3", "3"}), {"2/3": "4/3", "3": "5"})
    checks.append(expect("vir_4_5 on {0,2/3,3} matches vir_6_7_sub", fusion.same_table(sub, fusion.builtin("vir_6_7_sub")),
                         anchor="same fusion shape"))
    w3 = fusion.builtin("w3_4_5")
    bad = fusion.grading_violations(w3, fusion.W3_GRADING, 3)
    checks.append(expect("w3_4_5 Z/3 grading", not bad, len(bad), 0, "Z/3 grading of W-modules"))
    return checks


def full_report() -> Report:
    report = Report()
    _guarded(report, "lambda classification", _classification_checks)
    for lam in sorted(admissible_lambdas()):
        label = f"lam = {format_rational(lam)}"
        try:
            alg = build_algebra(lam)
        except Exception as exc:  # noqa: BLE001
            report.add(label, Check("build", FAIL, str(exc), None, label))
            continue
        report.add(label, compare("dimension", alg.dim, 4 if lam == TYPE_A2_LAMBDA else 3, label))
        report.merge(_prefixed(verify_algebra(alg), label))
    _guarded(report, "derived frame", _derived_frame_checks)
    _guarded(report, "discrete series", _series_checks)
    _guarded(report, "type A2 decompositions", _decomposition_checks)
    _guarded(report, "fusion rings", _fusion_checks)
    report.merge(_prefixed(audit_tabulated_constants(), "audit"))
    return report


def _prefixed(report: Report, prefix: str) -> Report:
    return Report({f"{prefix}: {k}": v for k, v in report.sections.items()})


def highlights() -> list[str]:
    """One-line statements of the headline numbers, computed afresh."""
    alg = build_algebra(TYPE_A2_LAMBDA)
    w2, w3 = conformal_split(alg)
    lines = [
        "admissible <e,f>: " + ", ".join(format_rational(lam / 4) for lam in sorted(admissible_lambdas())),
    ]
    for lam in sorted(admissible_lambdas()):
        a = build_algebra(lam)
        lines.append(
            f"lam = {format_rational(lam)}: dim {a.dim}, charge(ω₁)={format_rational(central_charge(omega_1(a, lam)))}, "
            f"charge(ω)={format_rational(central_charge(virasoro_formula(a, lam)))}"
        )
    lines.append(f"charge(ω₂)={format_rational(central_charge(w2))}, charge(ω₃)={format_rational(central_charge(w3))}")
    return lines
