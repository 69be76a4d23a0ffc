import json

import numpy as np
import pytest

from slocc4 import params
from slocc4.core import SX, I2, NonInvertibleOperator
from slocc4.witnesses import (
    catalog,
    catalog_json,
    class_preserved,
    get_witness,
    identity_witness,
    iv0_ratio,
    replay_printed,
    verify_witness,
)

REQUIRED = ("sec3.1-item1", "sec7.1-La4-scale", "sec5-V4-alt", "sec4.1-B1.3-swap")


def test_catalog_size_and_required_ids():
    ids = [w.id for w in catalog()]
    assert len(ids) == 68
    assert len(set(ids)) == len(ids)
    for rid in REQUIRED:
        assert rid in ids


def test_item1_operator():
    op = get_witness("sec3.1-item1").operator({"b": 1, "c": 1})
    for got, want in zip(op.mats, (SX, I2, I2, SX)):
        assert np.array_equal(got, want)


def test_la4_scale_operator():
    a = 0.5 + 0.2j
    op = get_witness("sec7.1-La4-scale").operator({"a": a})
    want = (np.diag([1, a * a]), np.diag([1, a]), np.diag([1, 1 / (a * a)]), np.diag([a, 1]))
    for got, w in zip(op.mats, want):
        assert np.allclose(got, w)


def test_v4_alt_endpoints():
    w = get_witness("sec5-V4-alt")
    assert w.source.params == ("0", "1") and w.target.params == ("1", "0")
    assert verify_witness(w, 1).status == "exact"


def test_item1_exact():
    assert verify_witness(get_witness("sec3.1-item1"), 20).status == "exact"


def test_identity_witness_exact():
    w = identity_witness(params("Labc2", 0.3, -1j, 2))
    assert verify_witness(w, 3).status == "exact"


def test_b13_swap_replays_as_printed():
    assert verify_witness(get_witness("sec4.1-B1.3-swap"), 5).status in ("exact", "proportional")


def test_w_witness_holds_up_to_scalar():
    rep = verify_witness(get_witness("sec6.1-R1.1"), 3)
    assert rep.status == "proportional"
    lam = rep.samples[0].lam
    assert abs(lam - 1j / np.sqrt(2)) < 1e-12


def test_b53_swap_needs_corrected_first_factor():
    w = get_witness("sec4.3-B5.3-swap")
    assert replay_printed(w).status == "failed"
    assert verify_witness(w, 3).status == "exact"


def test_replay_printed_requires_a_printed_variant():
    with pytest.raises(ValueError):
        replay_printed(get_witness("sec3.1-item1"))


def test_whole_catalog_replays():
    for w in catalog():
        rep = verify_witness(w, 20, seed=3)
        assert rep.ok, w.id


def test_bookkeeping_and_class_preservation():
    rng = np.random.default_rng(5)
    for w in catalog():
        for _ in range(3):
            vals = {k: complex(rng.uniform(0.3, 1), rng.uniform(-1, 1)) for k in w.free}
            src, tgt = iv0_ratio(w, vals)
            assert abs(abs(src) - abs(tgt)) <= 1e-8 * max(1.0, abs(src)), w.id
            assert class_preserved(w, vals), w.id


def test_domain_violation_raises():
    with pytest.raises(NonInvertibleOperator):
        from slocc4.core import apply_quad
        w = get_witness("sec4.1-B1.1")
        apply_quad(w.operator({"a": 0}), w.states({"a": 1})[1])


def test_samples_must_be_positive():
    with pytest.raises(ValueError):
        verify_witness(get_witness("sec3.1-item1"), 0)


def test_catalog_json_schema():
    doc = json.loads(catalog_json())
    rec = {r["id"]: r for r in doc["records"]}["sec3.1-item1"]
    assert rec["source"]["family"] == "Gabcd"
    assert len(rec["matrices"]) == 4 and rec["matrices"][0][0][1] == [1.0, 0.0]
    assert rec["orientation"] == "derived"
