import collections

import numpy as np
import pytest

from slocc4 import (
    FamilyId,
    FamilyParams,
    ProductState,
    UnclassifiableParams,
    apply_quad,
    classify_params,
    make_representative,
    match_signature,
    params,
    reduce_params,
    signature,
    states_equal,
    verify_class_membership,
)
from slocc4.classifier import LABELS, ROW_BY_ID, ROWS, classify, row_for, sample_row_params
from slocc4.core import random_quad

from conftest import structured_values


@pytest.mark.parametrize("p,label", [
    (params("Gabcd", 1, 0, 0, 1j), "A1.2"),
    (params("Lab3", 1, 1), "R1.2"),
    (params("Lab3", 1, -1), "R1.3"),
    (params("La2b2", 1, 0), "V4"),
    (params("Gabcd", 1, 0, 0, 1), "A1.1"),
    (params("Lab3", 0, 0), "R1.1"),
    (params("Labc2", 0, 1, 1j / np.sqrt(2)), "B5.3"),
    (params("L0_5p3"), "L0_5p3"),
])
def test_classify_examples(p, label):
    assert classify_params(p).id == label


def test_phi4_alias_and_citation():
    lab = classify_params(params("Gabcd", 1, 0, 0, 1j))
    assert lab.alias == "φ4"
    assert lab.citation == "Table I(1) row A1.2"


def test_starred_rows_flagged():
    starred = {r.label.id for r in ROWS if r.label.starred}
    assert {"A1.3", "A2.2", "A3.2", "B1.4", "B4.1", "B5.4", "V3", "R3.1"} <= starred
    assert not ({"A1.1", "A1.2", "B5.3", "R1.1", "V2"} & starred)


def test_printed_patterns_spot_checks():
    assert row_for("A1.1").expected == ("≠0", "0", "0", "0")
    assert row_for("A1.2").expected == ("0", "0", "Δ", "0")
    assert row_for("B1.5").expected == ("≠0", "0", "Δ", "0")
    assert row_for("R1.1").expected == ("0", "0", "0", "0")
    assert row_for("La4_a0").expected == ("0", "Δ", "0", "0")


def test_row_lookup_errors():
    with pytest.raises(KeyError):
        row_for("Z9.9")


def test_product_states_rejected():
    with pytest.raises(ProductState):
        classify_params(params("La2b2", 0, 0))
    with pytest.raises(UnclassifiableParams):
        classify_params(params("Gabcd", 0, 0, 0, 0))


def test_r32_branch_annotation():
    plus = classify_params(params("Lab3", 1, np.sqrt(3) * 1j))
    minus = classify_params(params("Lab3", 1, -np.sqrt(3) * 1j))
    assert plus.id == minus.id == "R3.2"
    assert {plus.branch, minus.branch} == {"+", "-"}


def test_match_signature_examples():
    ghz = make_representative(params("Gabcd", 1, 0, 0, 1))
    assert "A1.1" in {l.id for l in match_signature(signature(ghz))}
    s = signature(make_representative(params("L0_5p3")))
    ids = {l.id for l in match_signature(s)}
    assert {"L0_5p3", "R1.1"} <= ids
    narrowed = {l.id for l in match_signature(s, s.f_zero)}
    assert "L0_5p3" in narrowed and "R1.1" not in narrowed


def test_all_delta_signature_is_not_unique():
    s = signature(make_representative(params("Gabcd", 0.3, 0.5 + 0.1j, -0.7, 0.2j)))
    assert len(match_signature(s)) > 1


def test_membership_examples(rng):
    ghz = make_representative(params("Gabcd", 1, 0, 0, 1))
    for _ in range(20):
        assert verify_class_membership("A1.1", apply_quad(random_quad(rng, sl=True), ghz))
    assert not verify_class_membership("R1.1", make_representative(params("La4", 0)))
    assert verify_class_membership("V2", make_representative(params("La2b2", 1, 1j)))


def test_every_row_has_a_sampler(rng):
    for row_id in ROW_BY_ID:
        p = sample_row_params(row_id, rng)
        assert classify_params(p).id == row_id


def test_partition_is_total_and_consistent():
    """Structured draws land in exactly one row, or are recognised product states."""
    rng = np.random.default_rng(2024)
    seen = collections.Counter()
    draws = 0
    for fam in FamilyId:
        n = 1500 if fam in (FamilyId.Gabcd, FamilyId.Labc2) else (1000 if fam.value in ("La2b2", "Lab3") else 200)
        for _ in range(n):
            p = FamilyParams(fam, structured_values(rng, fam))
            draws += 1
            try:
                label = classify_params(p)
            except ProductState:
                continue
            seen[label.id] += 1
            psi = apply_quad(random_quad(rng, sl=True), make_representative(p))
            assert verify_class_membership(label, psi), (str(p), label.id)
    assert draws >= 5000
    assert set(seen) == set(LABELS)


def test_reduction_operators_replay():
    rng = np.random.default_rng(99)
    checked = 0
    for fam in (FamilyId.Gabcd, FamilyId.Labc2):
        for _ in range(1500):
            p = FamilyParams(fam, structured_values(rng, fam))
            try:
                red = reduce_params(p)
            except ProductState:
                continue
            lhs = make_representative(p)
            rhs = apply_quad(red.operator(), make_representative(red.params))
            assert states_equal(lhs, rhs), (str(p), str(red.params))
            checked += 1
    assert checked > 2000


def test_reduction_lands_in_the_row_subtable():
    for row_id in ("A2.1", "A3.2", "B4.1", "B5.2"):
        p = sample_row_params(row_id, np.random.default_rng(1))
        assert classify(p).reduction.subtable == row_for(row_id).subtable


def test_label_serialization():
    doc = classify_params(params("Lab3", 0, 0)).to_dict()
    assert doc["id"] == "R1.1" and doc["alias"] == "W" and "citation" in doc
