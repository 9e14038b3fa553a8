from __future__ import annotations

import copy
from collections import Counter
from fractions import Fraction

import pytest

from griess_s3 import fusion
from griess_s3.fusion import (
    BUILTIN_NAMES,
    W3_GRADING,
    FusionRing,
    TableChecksumError,
    UnknownLabelError,
    builtin,
    closure,
    fuse,
    grading_violations,
    relabel,
    same_table,
    subring,
    verify,
)

Q = Fraction


def kac_fusion(m: int) -> dict[tuple[Fraction, Fraction], Counter]:
    """Minimal-model fusion from the Kac table as a product of two truncated su(2) rings.

    Independent of the transcribed tables: labels are highest weights
    h_{r,s} and each cell (r, s) fuses coordinatewise.
    """
    p, q = m + 2, m + 3

    def su2(a, b, top):
        return range(abs(a - b) + 1, min(a + b - 1, 2 * top - a - b - 1) + 1, 2)

    def h(r, s):
        return Q((q * r - p * s) ** 2 - 1, 4 * p * q)

    rep = {}
    for r in range(1, p):
        for s in range(1, q):
            rep.setdefault(h(r, s), (r, s))
    table = {}
    for x, (r1, s1) in rep.items():
        for y, (r2, s2) in rep.items():
            table[x, y] = Counter({h(r, s): 1 for r in su2(r1, r2, p) for s in su2(s1, s2, q)})
    return table


def as_weights(c: Counter) -> Counter:
    return Counter({Q(k): v for k, v in c.items()})


@pytest.mark.parametrize("name, m", [("ising", 1), ("vir_4_5", 3)])
def test_tables_match_kac_oracle(name, m):
    ring = builtin(name)
    oracle = kac_fusion(m)
    assert {Q(x) for x in ring.labels} == {x for x, _ in oracle}
    for a in ring.labels:
        for b in ring.labels:
            assert as_weights(ring.fuse(a, b)) == oracle[Q(a), Q(b)], (a, b)


def test_potts_subring_matches_kac_oracle():
    ring = builtin("vir_6_7_sub")
    oracle = kac_fusion(4)
    for a in ring.labels:
        for b in ring.labels:
            assert as_weights(ring.fuse(a, b)) == oracle[Q(a), Q(b)]


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtin_rings_verify(name):
    report = verify(builtin(name))
    assert report.ok() and not report.failures


@pytest.mark.parametrize(
    "name, a, b, expected",
    [
        ("ising", "1/16", "1/16", {"0": 1, "1/2": 1}),
        ("ising", "1/2", "1/16", {"1/16": 1}),
        ("vir_4_5", "2/3", "2/3", {"0": 1, "2/3": 1, "3": 1}),
        ("vir_4_5", "3", "3", {"0": 1}),
        ("w3_4_5", "W(2/3,+)", "W(2/3,+)", {"W(2/3,-)": 1}),
        ("vir_6_7_sub", "4/3", "4/3", {"0": 1, "4/3": 1, "5": 1}),
        ("vir_6_7_sub", "5", "5", {"0": 1}),
    ],
)
def test_fuse_examples(name, a, b, expected):
    assert fuse(builtin(name), a, b) == Counter(expected)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_unit_fuses_trivially(name):
    ring = builtin(name)
    for x in ring.labels:
        assert ring.fuse(ring.unit, x) == Counter({x: 1})


def test_unknown_label_and_ring():
    with pytest.raises(UnknownLabelError):
        builtin("ising").fuse("0", "3/2")
    with pytest.raises(KeyError):
        builtin("monster")


def test_closure():
    assert closure(builtin("vir_4_5"), {"2/3"}) == {"0", "2/3", "3"}
    assert closure(builtin("ising"), {"1/16"}) == {"0", "1/2", "1/16"}
    for name in BUILTIN_NAMES:
        ring = builtin(name)
        assert closure(ring, {ring.unit}) == {ring.unit}
    with pytest.raises(ValueError):
        closure(builtin("ising"), set())


def test_w3_grading_holds_across_table():
    ring = builtin("w3_4_5")
    assert grading_violations(ring, W3_GRADING, 3) == []
    # the grading is not vacuous: every pair of grades is realised
    seen = {(W3_GRADING[a], W3_GRADING[b]) for a in ring.labels for b in ring.labels if ring.fuse(a, b)}
    assert len(seen) == 9


def test_wrong_grading_is_detected():
    bad = dict(W3_GRADING, **{"W(2/3,-)": 1})
    assert grading_violations(builtin("w3_4_5"), bad, 3)


def test_vir_4_5_subring_has_potts_shape():
    sub = subring(builtin("vir_4_5"), {"0", "2/3", "3"})
    assert same_table(relabel(sub, {"2/3": "4/3", "3": "5"}), builtin("vir_6_7_sub"))
    with pytest.raises(ValueError):
        subring(builtin("vir_4_5"), {"0", "2/5"})


# -- mutation tests ----------------------------------------------------------

def test_corrupted_cell_breaks_associativity_at_that_cell():
    ring = builtin("vir_4_5").with_entry("2/3", "2/3", "3", 0)
    report = verify(ring)
    assert not report.ok()
    assoc = [c for c in report.sections["associativity"] if c.status == "fail"]
    assert assoc and all("2/3" in c.name for c in assoc)
    assert all(c.status == "pass" for c in report.sections["commutativity"])


def test_asymmetric_cell_reported_with_indices():
    ring = builtin("vir_4_5").with_entry("2/5", "1/40", "1/8", 0)
    report = verify(ring)
    names = {c.name for c in report.sections["commutativity"] if c.status == "fail"}
    assert names == {"N[2/5,1/40]^1/8 = N[1/40,2/5]^1/8", "N[1/40,2/5]^1/8 = N[2/5,1/40]^1/8"}


def test_broken_unit_reported():
    ring = builtin("ising").with_entry("0", "1/2", "1/16", 1)
    assert any(c.status == "fail" for c in verify(ring).sections["unit"])


def test_checksum_guards_transcription(monkeypatch):
    source, digest = fusion._TABLES["ising"]
    tampered = copy.deepcopy(source)
    tampered["rows"]["1/16"][1] = "0"
    monkeypatch.setitem(fusion._TABLES, "ising", (tampered, digest))
    with pytest.raises(TableChecksumError):
        builtin("ising")


def test_invalid_table_rejected_at_load(monkeypatch):
    source, _ = fusion._TABLES["ising"]
    tampered = copy.deepcopy(source)
    tampered["rows"]["1/16"][1] = "0"
    monkeypatch.setitem(fusion._TABLES, "ising", (tampered, fusion.table_checksum(tampered)))
    with pytest.raises(fusion.InvalidRingError):
        builtin("ising")


# -- JSON --------------------------------------------------------------------

@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_json_roundtrip(name):
    ring = builtin(name)
    doc = ring.to_json_dict()
    assert set(doc) == {"labels", "unit", "N"}
    assert all(isinstance(e[3], int) for e in doc["N"])
    assert same_table(FusionRing.from_json_dict(doc), ring)


@pytest.mark.parametrize(
    "doc",
    [
        {"labels": ["0"], "unit": "0"},
        {"labels": ["0"], "unit": "1", "N": []},
        {"labels": ["0"], "unit": "0", "N": [["0", "0", "x", 1]]},
        {"labels": ["0"], "unit": "0", "N": [["0", "0", "0", -1]]},
        {"labels": ["0"], "unit": "0", "N": [["0", "0", "0"]]},
    ],
)
def test_json_malformed(doc):
    with pytest.raises((ValueError, KeyError)):
        FusionRing.from_json_dict(doc)
