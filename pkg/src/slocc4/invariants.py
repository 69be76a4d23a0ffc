"""The SLOCC invariant I and the semi-invariants D1..D3, F1..F10.

All polynomials are written out over the amplitudes a0..a15 exactly as they
are usually printed, so every index can be audited against the source by eye.
"""
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, as_state


def invariant_I(psi) -> complex:
    a = as_state(psi)
    return complex(
        (a[0] * a[15] - a[1] * a[14])
        - (a[2] * a[13] - a[3] * a[12])
        - (a[4] * a[11] - a[5] * a[10])
        + (a[6] * a[9] - a[7] * a[8])
    )


def invariant_D(psi) -> np.ndarray:
    a = as_state(psi)
    d1 = (a[1] * a[4] - a[0] * a[5]) * (a[11] * a[14] - a[10] * a[15]) - (a[3] * a[6] - a[2] * a[7]) * (
        a[9] * a[12] - a[8] * a[13]
    )
    d2 = (a[4] * a[7] - a[5] * a[6]) * (a[8] * a[11] - a[9] * a[10]) - (a[0] * a[3] - a[1] * a[2]) * (
        a[12] * a[15] - a[13] * a[14]
    )
    d3 = (a[3] * a[5] - a[1] * a[7]) * (a[10] * a[12] - a[8] * a[14]) - (a[2] * a[4] - a[0] * a[6]) * (
        a[11] * a[13] - a[9] * a[15]
    )
    return np.array([d1, d2, d3], dtype=complex)


# Each F_k = (a_i a_j - a_k a_l + a_m a_n - a_o a_p)^2 - 4 (a_r a_s - a_t a_u)(a_v a_w - a_x a_y);
# rows list (i, j, k, l, m, n, o, p, r, s, t, u, v, w, x, y).
F_INDICES = (
    (0, 7, 2, 5, 1, 6, 3, 4, 2, 4, 0, 6, 3, 5, 1, 7),
    (8, 15, 11, 12, 9, 14, 10, 13, 11, 13, 9, 15, 10, 12, 8, 14),
    (0, 11, 2, 9, 1, 10, 3, 8, 2, 8, 0, 10, 3, 9, 1, 11),
    (4, 15, 6, 13, 5, 14, 7, 12, 6, 12, 4, 14, 7, 13, 5, 15),
    (0, 13, 4, 9, 1, 12, 5, 8, 4, 8, 0, 12, 5, 9, 1, 13),
    (2, 15, 6, 11, 3, 14, 7, 10, 6, 10, 2, 14, 7, 11, 3, 15),
    (0, 14, 4, 10, 2, 12, 6, 8, 4, 8, 0, 12, 6, 10, 2, 14),
    (1, 15, 5, 11, 3, 13, 7, 9, 5, 9, 1, 13, 7, 11, 3, 15),
    (0, 15, 2, 13, 1, 14, 3, 12, 0, 14, 2, 12, 1, 15, 3, 13),
    (4, 11, 7, 8, 5, 10, 6, 9, 7, 9, 5, 11, 6, 8, 4, 10),
)


def _quartic(a, idx):
    i, j, k, l, m, n, o, p, r, s, t, u, v, w, x, y = idx
    lead = a[i] * a[j] - a[k] * a[l] + a[m] * a[n] - a[o] * a[p]
    return lead**2 - 4 * (a[r] * a[s] - a[t] * a[u]) * (a[v] * a[w] - a[x] * a[y])


def invariant_F(psi) -> np.ndarray:
    a = as_state(psi)
    return np.array([_quartic(a, idx) for idx in F_INDICES], dtype=complex)


@dataclass(frozen=True, eq=False)
class InvariantVector:
    I: complex
    D: np.ndarray
    F: np.ndarray

    def as_array(self) -> np.ndarray:
        return np.concatenate([[self.I], self.D, self.F])

    def to_dict(self):
        pair = lambda z: [float(z.real), float(z.imag)]
        return {
            "I": pair(self.I),
            "D": [pair(z) for z in self.D],
            "F": [pair(z) for z in self.F],
        }


def invariant_vector(psi) -> InvariantVector:
    psi = as_state(psi)
    return InvariantVector(invariant_I(psi), invariant_D(psi), invariant_F(psi))


def zero_scale(psi, degree: int) -> float:
    """Magnitude a degree-`degree` polynomial in the amplitudes can reach."""
    n2 = float(np.vdot(psi, psi).real)
    return max(1.0, n2) ** (degree / 2)


def is_negligible(value, psi, degree: int, tol=DEFAULT_TOL) -> bool:
    return bool(abs(value) <= tol * zero_scale(psi, degree))


@dataclass(frozen=True)
class Signature:
    i_zero: bool
    d_zero: tuple
    f_zero: tuple
    tol: float = DEFAULT_TOL

    def to_dict(self):
        return {"iZero": self.i_zero, "dZero": list(self.d_zero), "fZero": list(self.f_zero), "tol": self.tol}


def signature(psi, tol=DEFAULT_TOL, inv: InvariantVector = None) -> Signature:
    """Zero flags with a degree-aware threshold: I is quadratic, D and F quartic."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    psi = as_state(psi)
    inv = inv or invariant_vector(psi)
    s2, s4 = zero_scale(psi, 2), zero_scale(psi, 4)
    return Signature(
        i_zero=bool(abs(inv.I) <= tol * s2),
        d_zero=tuple(bool(abs(x) <= tol * s4) for x in inv.D),
        f_zero=tuple(bool(abs(x) <= tol * s4) for x in inv.F),
        tol=tol,
    )
