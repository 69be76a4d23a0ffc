import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slocc4 import (
    NonInvertibleOperator,
    QuadOperator,
    ZeroState,
    apply_quad,
    basis_ket,
    from_terms,
    params,
    states_equal,
    states_proportional,
)
from slocc4.core import I2, SX, random_quad, random_state
from slocc4.families import make_representative


def diag(x, y):
    return np.diag([x, y]).astype(complex)


@pytest.mark.parametrize("bits,index", [((0, 0, 0, 0), 0), ((0, 1, 1, 0), 6), ((1, 0, 1, 0), 10)])
def test_basis_ket_index(bits, index):
    psi = basis_ket(*bits)
    assert psi[index] == 1
    assert np.count_nonzero(psi) == 1


def test_from_terms_matches_basis_kets():
    assert np.array_equal(from_terms([(1, "0110")]), basis_ket(0, 1, 1, 0))


def test_basis_ket_rejects_non_bits():
    with pytest.raises(ValueError):
        basis_ket(0, 2, 0, 0)


def test_identity_quad_is_identity(rng):
    psi = random_state(rng)
    assert states_equal(apply_quad(QuadOperator.identity(), psi), psi)


def test_bit_flips_on_qubits_one_and_four():
    op = QuadOperator(SX, I2, I2, SX)
    assert np.array_equal(apply_quad(op, basis_ket(0, 0, 0, 0)), basis_ket(1, 0, 0, 1))


def test_phase_operator_maps_a_eq_c_b_eq_d_onto_a_eq_b_c_eq_d(rng):
    # G(a,a,b,b) = diag(i,1) x diag(-i,1) x diag(-i,1) x diag(i,1) . G(a,b,a,b)
    op = QuadOperator(diag(1j, 1), diag(-1j, 1), diag(-1j, 1), diag(1j, 1))
    for _ in range(20):
        a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
        out = apply_quad(op, make_representative(params("Gabcd", a, b, a, b)))
        assert states_equal(out, make_representative(params("Gabcd", a, a, b, b)))


def test_states_equal_examples(rng):
    psi = random_state(rng)
    assert states_equal(psi, psi, 1e-9)
    assert not states_equal(basis_ket(0, 0, 0, 0), basis_ket(1, 1, 1, 1), 1e-9)
    assert states_equal(psi, psi + 1e-12 * basis_ket(0, 1, 1, 0), 1e-9)


def test_states_proportional_examples(rng):
    psi = random_state(rng)
    assert states_proportional(2 * psi, psi)
    assert states_proportional(1j * psi, psi)
    ghz_plus = from_terms([(1, "0000"), (1, "1111")])
    ghz_minus = from_terms([(1, "0000"), (-1, "1111")])
    assert not states_proportional(ghz_plus, ghz_minus)


def test_proportional_rejects_zero_state():
    with pytest.raises(ZeroState):
        states_proportional(np.zeros(16), basis_ket(0, 0, 0, 0))


def test_tolerance_must_be_positive():
    with pytest.raises(ValueError):
        states_equal(basis_ket(0, 0, 0, 0), basis_ket(0, 0, 0, 0), 0)


def test_singular_operator_rejected():
    op = QuadOperator(np.zeros((2, 2)), I2, I2, I2)
    with pytest.raises(NonInvertibleOperator):
        apply_quad(op, basis_ket(0, 0, 0, 0))


def test_bad_shapes_rejected():
    with pytest.raises(ValueError):
        apply_quad(QuadOperator.identity(), np.zeros(15))
    with pytest.raises(ValueError):
        QuadOperator(np.eye(3), I2, I2, I2)
    with pytest.raises(ValueError):
        QuadOperator.identity().of(I2, I2, I2)


def test_non_finite_rejected():
    psi = np.zeros(16, dtype=complex)
    psi[3] = np.nan
    with pytest.raises(ValueError):
        apply_quad(QuadOperator.identity(), psi)


def test_det_factors_recompute(rng):
    for _ in range(50):
        op = random_quad(rng)
        da, db, dc, dd = (np.linalg.det(m) for m in op.mats)
        f = op.det_factors()
        want = (da * db * dc * dd, (db * dc * dd) ** 2, (da * dc * dd) ** 2, (da * db * dd) ** 2, (da * db * dc) ** 2)
        for got, w in zip(f, want):
            assert abs(got - w) <= 1e-12 * abs(w)


def test_apply_is_multiplicative(rng):
    for _ in range(200):
        op1, op2, psi = random_quad(rng), random_quad(rng), random_state(rng)
        lhs = apply_quad(op2, apply_quad(op1, psi))
        rhs = apply_quad(op2 @ op1, psi)
        assert np.linalg.norm(lhs - rhs) <= 1e-10 * np.linalg.norm(rhs)


def test_inverse_round_trip(rng):
    for _ in range(200):
        op, psi = random_quad(rng), random_state(rng)
        back = apply_quad(op.inverse(), apply_quad(op, psi))
        assert np.linalg.norm(back - psi) <= 1e-9 * np.linalg.norm(psi)


def test_apply_matches_kronecker_product(rng):
    op, psi = random_quad(rng), random_state(rng)
    assert np.allclose(apply_quad(op, psi), op.matrix() @ psi, rtol=0, atol=1e-12)


def test_sl_normalized_has_unit_determinants(rng):
    for _ in range(50):
        op = random_quad(rng, sl=True)
        assert np.all(np.abs(op.dets() - 1) <= 1e-12)


_c = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(st.lists(_c, min_size=16, max_size=16), st.lists(_c, min_size=16, max_size=16), _c, _c)
def test_linearity(u, v, a, b):
    rng = np.random.default_rng(7)
    op = random_quad(rng)
    psi, phi = np.array(u), np.array(v)
    lhs = apply_quad(op, a * psi + b * phi)
    rhs = a * apply_quad(op, psi) + b * apply_quad(op, phi)
    scale = max(1.0, abs(a) * np.linalg.norm(apply_quad(op, psi)) + abs(b) * np.linalg.norm(apply_quad(op, phi)))
    assert np.linalg.norm(lhs - rhs) <= 1e-10 * scale
