import json

import numpy as np
import pytest

from slocc4 import FamilyId, FamilyParams, WrongArity, evaluate_regime, make_representative, params
from slocc4.core import from_terms
from slocc4.families import ARITY, named_state, regime
from slocc4.invariants import invariant_vector
from slocc4.witnesses import get_witness, verify_witness


def test_nine_families():
    assert len(FamilyId) == 9
    assert sum(ARITY.values()) == 4 + 3 + 2 + 2 + 1 + 1


def test_arity_enforced():
    with pytest.raises(WrongArity):
        params("L0_5p3", 1)
    with pytest.raises(WrongArity):
        params("Gabcd", 1, 2, 3)


def test_non_finite_params_rejected():
    with pytest.raises(ValueError):
        params("La4", float("nan"))


def test_ghz_representative():
    assert np.array_equal(make_representative(params("Gabcd", 1, 0, 0, 1)),
                          from_terms([(1, "0000"), (1, "1111")]))


def test_l071_representative():
    want = from_terms([(1, "0000"), (1, "1011"), (1, "1101"), (1, "1110")])
    assert np.array_equal(make_representative(params("L0_7p1")), want)


def test_lab3_at_origin_is_w_up_to_a_scalar():
    assert verify_witness(get_witness("sec6.1-R1.1"), samples=1).status == "proportional"
    psi = make_representative(params("Lab3", 0, 0))
    assert np.count_nonzero(psi) == 4


def test_params_round_trip_json():
    p = params("Labc2", 1 + 2j, -0.5, 3j)
    doc = json.loads(json.dumps(p.to_json()))
    assert FamilyParams.from_json(doc) == p


def test_from_json_rejects_unknown_and_missing():
    with pytest.raises(WrongArity):
        FamilyParams.from_json({"family": "La4", "params": {"b": [1, 0]}})
    with pytest.raises(WrongArity):
        FamilyParams.from_json({"family": "La2b2", "params": {"a": [1, 0]}})


def test_regime_examples():
    r = regime(params("Gabcd", 1, 0, 0, 1))
    assert r["a=±d"] and r["b=c=0"]
    assert regime(params("Labc2", 0, 1, 1j / np.sqrt(2)))["b²+2c²=0"]
    assert regime(params("Lab3", 1, np.sqrt(3) * 1j))["3a²+b²=0"]


def test_regime_reports_inputs():
    preds = evaluate_regime(params("La2b2", 1, -1))
    hit = next(x for x in preds if x.name == "a=-b")
    assert hit.holds and hit.inputs == ("a+b",)


def test_regime_tolerance_scales_with_parameters():
    big = 1e6
    assert regime(params("La2b2", big, big + 1e-5))["a=b"]
    assert not regime(params("La2b2", 1, 1 + 1e-5))["a=b"]


def test_all_equal_gabcd_is_two_epr_pairs(rng):
    for _ in range(50):
        a = complex(*rng.uniform(-1, 1, 2))
        psi = make_representative(params("Gabcd", a, a, a, a))
        inv = invariant_vector(psi)
        scale = max(1, abs(a)) ** 4
        assert np.all(np.abs(inv.D[1:]) <= 1e-12 * scale)
        assert abs(inv.D[0] - a ** 4) <= 1e-12 * scale
        assert np.all(np.abs(inv.F[:8]) <= 1e-12 * scale)
        # a(|00>+|11>)_13 (|00>+|11>)_24
        m = psi.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
        assert np.linalg.matrix_rank(m, tol=1e-12) == 1


def test_la2b2_origin_is_a_product():
    psi = make_representative(params("La2b2", 0, 0))
    assert np.array_equal(psi, from_terms([(1, "0110"), (1, "0011")]))
    # |01>_13 (|01>+|10>)_24: amplitude matrix over (q1 q3) x (q2 q4) has rank one
    m = psi.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    assert np.linalg.matrix_rank(m) == 1


def test_la2_0_3p1_at_zero_factors_off_qubit_one():
    psi = make_representative(params("La2_0_3p1", 0))
    assert set(np.flatnonzero(psi)) == {3, 5, 6}


def test_named_states_are_copies():
    s = named_state("W")
    s[:] = 0
    assert np.count_nonzero(named_state("W")) == 4
