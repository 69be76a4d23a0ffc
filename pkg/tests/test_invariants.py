import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slocc4 import apply_quad, basis_ket, invariant_D, invariant_F, invariant_I, params, signature
from slocc4.core import random_quad, random_state
from slocc4.families import make_representative, named_state
from slocc4.invariants import invariant_vector, is_negligible, zero_scale


def rep(*args):
    return make_representative(params(*args))


def test_basis_state_has_all_zero_invariants():
    psi = basis_ket(0, 0, 0, 0)
    assert invariant_I(psi) == 0
    assert np.all(invariant_D(psi) == 0)
    assert np.all(invariant_F(psi) == 0)


def test_ghz_has_unit_I():
    assert invariant_I(rep("Gabcd", 1, 0, 0, 1)) == pytest.approx(1)


def test_lab3_I_at_one_two():
    # brute-force value; the closed form is (3a^2 + b^2)/2
    assert invariant_I(rep("Lab3", 1, 2)) == pytest.approx(3.5)


def test_gabcd_D_examples():
    assert invariant_D(rep("Gabcd", 1, 2, 3, 4))[1] == pytest.approx(-12.5)
    assert invariant_D(rep("Gabcd", 1, 1, 1, 1))[0] == pytest.approx(1)


def test_gabcd_F9_F10():
    f = invariant_F(rep("Gabcd", 1, 2, 3, 4))
    assert f[8] == pytest.approx(16) and f[9] == pytest.approx(36)


def test_la2b2_F_values():
    f = invariant_F(rep("La2b2", 1, 2))
    assert f[0] == pytest.approx(8) and f[5] == pytest.approx(8)
    assert f[8] == pytest.approx(1) and f[9] == pytest.approx(16)
    for k in (1, 2, 3, 4, 6, 7):
        assert abs(f[k]) < 1e-12


def test_signature_ghz_and_w_rows():
    s = signature(rep("Gabcd", 1, 0, 0, 1))
    assert not s.i_zero and s.d_zero == (True, True, True)
    s = signature(rep("Lab3", 0, 0))
    assert s.i_zero and s.d_zero == (True, True, True)


def test_la4_a0_D1_vanishes_at_the_representative_but_not_on_the_orbit(rng):
    psi = rep("La4", 0)
    s = signature(psi)
    assert s.i_zero and s.d_zero == (True, True, True)
    seen = [not signature(apply_quad(random_quad(rng, sl=True), psi)).d_zero[0] for _ in range(20)]
    assert any(seen)


def test_signature_rejects_bad_tol():
    with pytest.raises(ValueError):
        signature(basis_ket(0, 0, 0, 0), 0)


def test_zero_test_is_degree_aware():
    psi = 1000 * named_state("GHZ")
    assert zero_scale(psi, 4) == pytest.approx(zero_scale(psi, 2) ** 2)
    assert is_negligible(1e-2, psi, 4)
    assert not is_negligible(1e-2, psi, 2)


def test_transformation_law_of_I(rng):
    for _ in range(300):
        psi, op = random_state(rng), random_quad(rng)
        want = invariant_I(psi) * op.det_factors().T
        got = invariant_I(apply_quad(op, psi))
        assert abs(abs(got) - abs(want)) <= 1e-8 * abs(want)


def test_ghz_I_constant_on_sl_orbit(rng):
    psi = named_state("GHZ")
    for _ in range(100):
        assert abs(invariant_I(apply_quad(random_quad(rng, sl=True), psi))) == pytest.approx(1, abs=1e-9)


def test_zero_I_stays_zero(rng):
    psi = rep("Lab3", 0, 0)
    for _ in range(50):
        assert abs(invariant_I(apply_quad(random_quad(rng), psi))) < 1e-12


_c = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


@settings(max_examples=80, deadline=None)
@given(st.lists(_c, min_size=16, max_size=16), _c)
def test_degree_homogeneity(amps, lam):
    psi = np.array(amps)
    v, w = invariant_vector(psi), invariant_vector(lam * psi)
    s2, s4 = zero_scale(psi, 2), zero_scale(psi, 4)
    assert abs(w.I - lam ** 2 * v.I) <= 1e-12 * s2 * max(1, abs(lam) ** 2) * 10
    assert np.all(np.abs(w.D - lam ** 4 * v.D) <= 1e-12 * s4 * max(1, abs(lam) ** 4) * 10)
    assert np.all(np.abs(w.F - lam ** 4 * v.F) <= 1e-12 * s4 * max(1, abs(lam) ** 4) * 10)


def test_invariant_vector_serializes():
    doc = invariant_vector(named_state("GHZ")).to_dict()
    assert doc["I"] == [1.0, 0.0] and len(doc["D"]) == 3 and len(doc["F"]) == 10
