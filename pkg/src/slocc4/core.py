"""Four-qubit pure states and local (one-qubit) operators.

A state is a length-16 complex numpy vector.  Amplitude ``psi[i]`` belongs to
the basis ket ``|q1 q2 q3 q4>`` with ``i = 8*q1 + 4*q2 + 2*q3 + q4``, so qubit 1
is the most significant bit.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

DET_TOL = 1e-12
DEFAULT_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


class NonInvertibleOperator(ValueError):
    pass


class ZeroState(ValueError):
    pass


def as_state(psi) -> np.ndarray:
    """Validate and copy anything array-like into a complex 16-vector."""
    v = np.array(psi, dtype=complex).reshape(-1)
    if v.shape != (16,):
        raise ValueError(f"a four-qubit state needs 16 amplitudes, got {v.size}")
    if not np.all(np.isfinite(v)):
        raise ValueError("state has non-finite amplitudes")
    return v


def basis_index(bits: str) -> int:
    if len(bits) != 4 or set(bits) - {"0", "1"}:
        raise ValueError(f"bad basis label {bits!r}")
    return int(bits, 2)


def basis_ket(q1: int, q2: int, q3: int, q4: int) -> np.ndarray:
    for q in (q1, q2, q3, q4):
        if q not in (0, 1):
            raise ValueError("qubit values must be 0 or 1")
    psi = np.zeros(16, dtype=complex)
    psi[8 * q1 + 4 * q2 + 2 * q3 + q4] = 1
    return psi


def from_terms(terms) -> np.ndarray:
    """Build a state from ``(coefficient, "0110")`` pairs; repeated kets add up."""
    psi = np.zeros(16, dtype=complex)
    for coef, bits in terms:
        psi[basis_index(bits)] += coef
    return psi


def norm(psi) -> float:
    return float(np.linalg.norm(psi))


class DetFactors(NamedTuple):
    T: complex
    P: complex
    Q: complex
    R: complex
    S: complex


def _as_local(m) -> np.ndarray:
    m = np.array(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"local operator must be 2x2, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("local operator has non-finite entries")
    return m


def det2(m) -> complex:
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


@dataclass(frozen=True, eq=False)
class QuadOperator:
    """alpha (x) beta (x) gamma (x) delta, acting on qubits 1..4 in that order."""

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    delta: np.ndarray

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            m = _as_local(getattr(self, name))
            m.setflags(write=False)
            object.__setattr__(self, name, m)

    @classmethod
    def identity(cls):
        return cls(I2, I2, I2, I2)

    @classmethod
    def of(cls, *mats):
        if len(mats) == 1:
            mats = tuple(mats[0])
        if len(mats) != 4:
            raise ValueError("a quad operator needs exactly four 2x2 matrices")
        return cls(*mats)

    @property
    def mats(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    def entries(self) -> np.ndarray:
        """4x4 array; row k holds operator k's entries (m11, m12, m21, m22)."""
        return np.array([m.reshape(4) for m in self.mats])

    def dets(self) -> np.ndarray:
        return np.array([det2(m) for m in self.mats])

    def det_factors(self) -> DetFactors:
        da, db, dc, dd = self.dets()
        return DetFactors(
            T=da * db * dc * dd,
            P=(db * dc * dd) ** 2,
            Q=(da * dc * dd) ** 2,
            R=(da * db * dd) ** 2,
            S=(da * db * dc) ** 2,
        )

    def is_invertible(self, tol=DET_TOL) -> bool:
        return bool(np.all(np.abs(self.dets()) > tol))

    def check_invertible(self, tol=DET_TOL):
        dets = self.dets()
        bad = [k + 1 for k, d in enumerate(dets) if abs(d) <= tol]
        if bad:
            raise NonInvertibleOperator(f"operator(s) on qubit(s) {bad} have |det| <= {tol:g}")

    def inverse(self):
        self.check_invertible()
        return QuadOperator(*(np.linalg.inv(m) for m in self.mats))

    def __matmul__(self, other):
        """Componentwise product: (self @ other) acts as other first, then self."""
        if not isinstance(other, QuadOperator):
            return NotImplemented
        return QuadOperator(*(a @ b for a, b in zip(self.mats, other.mats)))

    def sl_normalized(self):
        """Rescale each factor to determinant one (principal square root)."""
        self.check_invertible()
        return QuadOperator(*(m / np.sqrt(det2(m)) for m in self.mats))

    def matrix(self) -> np.ndarray:
        out = self.alpha
        for m in (self.beta, self.gamma, self.delta):
            out = np.kron(out, m)
        return out

    def __eq__(self, other):
        if not isinstance(other, QuadOperator):
            return NotImplemented
        return all(np.array_equal(a, b) for a, b in zip(self.mats, other.mats))

    def __hash__(self):
        return hash(self.entries().tobytes())


def apply_quad(op: QuadOperator, psi) -> np.ndarray:
    op.check_invertible()
    t = as_state(psi).reshape(2, 2, 2, 2)
    out = np.einsum("ai,bj,ck,dl,ijkl->abcd", op.alpha, op.beta, op.gamma, op.delta, t)
    return out.reshape(16)


def states_equal(x, y, tol=DEFAULT_TOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    x, y = as_state(x), as_state(y)
    return bool(np.linalg.norm(x - y) <= tol * max(1.0, np.linalg.norm(y)))


def fit_scalar(x, y) -> complex:
    """Least-squares lambda with x ~ lambda * y."""
    y = as_state(y)
    return complex(np.vdot(y, as_state(x)) / np.vdot(y, y))


def states_proportional(x, y, tol=DEFAULT_TOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    x, y = as_state(x), as_state(y)
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    if nx < tol or ny < tol:
        raise ZeroState("cannot compare directions of a zero state")
    lam = fit_scalar(x, y)
    return bool(lam != 0 and np.linalg.norm(x - lam * y) <= tol * nx)


def random_complex(rng, shape=None):
    """Uniform on the square [-1, 1] x [-1, 1] of the complex plane."""
    return rng.uniform(-1, 1, shape) + 1j * rng.uniform(-1, 1, shape)


def random_local(rng, min_det=0.1, max_cond=100.0) -> np.ndarray:
    while True:
        m = random_complex(rng, (2, 2))
        if abs(det2(m)) >= min_det and np.linalg.cond(m) < max_cond:
            return m


def random_quad(rng, sl=False) -> QuadOperator:
    op = QuadOperator(*(random_local(rng) for _ in range(4)))
    return op.sl_normalized() if sl else op


def random_state(rng) -> np.ndarray:
    return random_complex(rng, 16)
