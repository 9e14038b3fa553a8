from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings

from conftest import LAM_A2, LAM_B, element_coords
from griess_s3.exact import Matrix
from griess_s3.griess import (
    SPECTRUM,
    GriessAlgebra,
    Involution,
    NotConformalError,
    adjoint_matrix,
    automorphism_check,
    central_charge,
    decompose_wrt,
    eigenbasis,
    eigenspaces_orthogonal,
    find_virasoro,
    from_json_dict,
    inner,
    is_self_adjoint,
    is_virasoro,
    load_algebra,
    dump_algebra,
    product,
    tau_involution,
    to_json_dict,
    verify_axioms,
    verify_fusion_grading,
)

Q = Fraction
PROPERTY = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])


def gram_diagonal_formula(lam):
    return [
        Q(1, 4),
        3 * (1 - lam) * (3 - 16 * lam) / 64,
        Q(23, 128) * (1 - lam) * (64 * lam - 1) / (128 * lam + 5),
        (1 - lam) / 8,
    ]


def test_gram_at_type_a2(alg_a2):
    # literal values for lam = 13/256
    expected = [Q(1, 4), Q(25515, 262144), Q(2187, 65536), Q(243, 2048)]
    assert alg_a2.gram == Matrix.diag(expected)
    assert expected == gram_diagonal_formula(LAM_A2)


def test_gram_at_lam_b_drops_null_vector(alg_b):
    full = gram_diagonal_formula(LAM_B)
    assert full[2] == 0
    assert alg_b.basis_names == ("e", "a", "c")
    assert alg_b.gram == Matrix.diag([full[0], full[1], full[3]])


def test_e_eigenvalues_on_frame(built):
    _, alg = built
    e = alg["e"]
    assert e * e == 2 * e
    assert e * alg["a"] == alg.zero()
    assert e * alg["c"] == Q(1, 16) * alg["c"]
    if alg.has("b"):
        assert e * alg["b"] == Q(1, 2) * alg["b"]


def test_axioms_hold(built):
    _, alg = built
    report = verify_axioms(alg)
    assert report.ok(), report.failures


@PROPERTY
@given(data=element_coords(4))
def test_adjoint_is_self_adjoint_type_a2(alg_a2, data):
    x = alg_a2.element(data)
    assert is_self_adjoint(adjoint_matrix(x), alg_a2.gram)


@PROPERTY
@given(data=element_coords(3))
def test_adjoint_is_self_adjoint_lam_b(alg_b, data):
    x = alg_b.element(data)
    assert is_self_adjoint(adjoint_matrix(x), alg_b.gram)


@PROPERTY
@given(xs=element_coords(4), ys=element_coords(4), zs=element_coords(4))
def test_invariance_on_random_triples(alg_a2, xs, ys, zs):
    # bilinear-form evaluation, independent of the matrix route above
    x, y, z = (alg_a2.element(v) for v in (xs, ys, zs))
    assert inner(x * y, z) == inner(y, x * z)
    assert x * y == y * x


@PROPERTY
@given(data=element_coords(4))
def test_decompose_wrt_resums_exactly(alg_a2, data):
    v = alg_a2.element(data)
    for x in (alg_a2["e"], alg_a2.combo(e=LAM_A2, a=1, b=1, c=1)):
        parts = decompose_wrt(v, x)
        total = alg_a2.zero()
        for mu, part in parts.items():
            assert x * part == mu * part
            total = total + part
        assert total == v


def test_eigenspaces_orthogonal(built):
    lam, alg = built
    f = alg.combo(e=lam, a=1, b=1, c=1)
    assert eigenspaces_orthogonal(alg["e"])
    assert eigenspaces_orthogonal(f)


def test_eigenspace_dimensions(alg_a2, alg_b):
    dims = lambda a: [len(eigenbasis(a["e"])[mu]) for mu in SPECTRUM]
    assert dims(alg_a2) == [1, 1, 1, 1]
    assert dims(alg_b) == [1, 1, 0, 1]


def test_tau_involution(built):
    lam, alg = built
    for x in (alg["e"], alg.combo(e=lam, a=1, b=1, c=1)):
        tau = tau_involution(x)
        assert tau @ tau == Matrix.identity(alg.dim)
        assert automorphism_check(alg, tau.matrix)
        for v in eigenbasis(x)[Q(1, 16)]:
            w = alg.element(v)
            assert tau(w) == -w
        for mu in SPECTRUM[:3]:
            for v in eigenbasis(x)[mu]:
                assert tau(alg.element(v)) == alg.element(v)


def test_involution_rejects_non_involution():
    with pytest.raises(ValueError):
        Involution(Matrix([[1, 1], [0, 1]]))


def test_automorphism_check_rejects_scaling(alg_a2):
    assert not automorphism_check(alg_a2, Matrix.identity(4) * 2)


def test_fusion_grading(built):
    lam, alg = built
    for x in (alg["e"], alg.combo(e=lam, a=1, b=1, c=1)):
        report = verify_fusion_grading(alg, x)
        assert report.ok(), report.failures


def test_virasoro_element(built):
    lam, alg = built
    w = find_virasoro(alg)
    assert w is not None and is_virasoro(w)
    assert w == alg["e"] + 16 / (9 - 48 * lam) * alg["a"]


def test_central_charge_needs_conformal(alg_a2):
    assert central_charge(alg_a2["e"]) == Q(1, 2)
    with pytest.raises(NotConformalError):
        central_charge(alg_a2["a"])


def test_mixed_algebras_rejected(alg_a2, alg_b):
    with pytest.raises(ValueError):
        product(alg_a2["e"], alg_b["e"])


# -- JSON form ---------------------------------------------------------------

def test_json_roundtrip(built, tmp_path):
    _, alg = built
    path = tmp_path / "alg.json"
    dump_algebra(alg, path)
    assert load_algebra(path) == alg
    doc = json.loads(path.read_text())
    assert all(t[0] <= t[1] for t in doc["structure"])
    assert all("/" in v for row in doc["gram"] for v in row)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("gram"),
        lambda d: d.update(basis=[]),
        lambda d: d["structure"].append([1, 0, 0, "1/1"]),
        lambda d: d["structure"].append([0, 0, 9, "1/1"]),
        lambda d: d["structure"].append(d["structure"][0]),
        lambda d: d["gram"][0].__setitem__(0, "2/8"),
        lambda d: d["gram"][0].__setitem__(0, "x"),
        lambda d: d["gram"].pop(),
    ],
    ids=["no-gram", "empty-basis", "i>j", "k-range", "duplicate", "non-canonical", "garbage", "short-gram"],
)
def test_json_malformed(alg_a2, mutate):
    doc = to_json_dict(alg_a2)
    mutate(doc)
    with pytest.raises(ValueError):
        from_json_dict(doc)


def test_from_products_symmetrizes():
    alg = GriessAlgebra.from_products(["x", "y"], {("x", "y"): [1, 0]}, [[1, 0], [0, 1]])
    assert alg["y"] * alg["x"] == alg["x"]
