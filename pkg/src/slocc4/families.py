"""The nine four-qubit representative families and their parameter regimes."""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .core import DEFAULT_TOL, from_terms


class FamilyId(str, Enum):
    Gabcd = "Gabcd"
    Labc2 = "Labc2"
    La2b2 = "La2b2"
    Lab3 = "Lab3"
    La4 = "La4"
    La2_0_3p1 = "La2_0_3p1"
    L0_5p3 = "L0_5p3"
    L0_7p1 = "L0_7p1"
    L0_31b_0_31b = "L0_31b_0_31b"


ARITY = {
    FamilyId.Gabcd: 4,
    FamilyId.Labc2: 3,
    FamilyId.La2b2: 2,
    FamilyId.Lab3: 2,
    FamilyId.La4: 1,
    FamilyId.La2_0_3p1: 1,
    FamilyId.L0_5p3: 0,
    FamilyId.L0_7p1: 0,
    FamilyId.L0_31b_0_31b: 0,
}

NAMES = "abcd"


class WrongArity(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    family: FamilyId
    values: tuple = ()

    def __post_init__(self):
        fam = FamilyId(self.family)
        vals = tuple(complex(v) for v in self.values)
        if len(vals) != ARITY[fam]:
            raise WrongArity(f"{fam.value} takes {ARITY[fam]} parameter(s), got {len(vals)}")
        if not all(np.isfinite(v) for v in vals):
            raise ValueError("parameters must be finite")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "values", vals)

    @property
    def names(self):
        return NAMES[: len(self.values)]

    def as_dict(self):
        return dict(zip(self.names, self.values))

    def __getattr__(self, name):
        if len(name) == 1 and name in NAMES:
            vals = object.__getattribute__(self, "values")
            k = NAMES.index(name)
            if k < len(vals):
                return vals[k]
        raise AttributeError(name)

    def to_json(self):
        return {
            "family": self.family.value,
            "params": {k: [v.real, v.imag] for k, v in self.as_dict().items()},
        }

    @classmethod
    def from_json(cls, doc):
        fam = FamilyId(doc["family"])
        raw = doc.get("params") or {}
        unknown = set(raw) - set(NAMES[: ARITY[fam]])
        if unknown:
            raise WrongArity(f"{fam.value} has no parameter(s) {sorted(unknown)}")
        vals = []
        for name in NAMES[: ARITY[fam]]:
            if name not in raw:
                raise WrongArity(f"{fam.value} is missing parameter {name!r}")
            re, im = raw[name]
            vals.append(complex(float(re), float(im)))
        return cls(fam, tuple(vals))

    def __str__(self):
        inner = ", ".join(f"{k}={_fmt(v)}" for k, v in self.as_dict().items())
        return f"{self.family.value}({inner})"


def _fmt(z):
    if z.imag == 0:
        return f"{z.real:g}"
    return f"{z.real:g}{z.imag:+g}i"


def params(family, *values) -> FamilyParams:
    return FamilyParams(FamilyId(family), tuple(values))


S2 = 1j / np.sqrt(2)


def _gabcd(a, b, c, d):
    return from_terms([
        ((a + d) / 2, "0000"), ((a + d) / 2, "1111"),
        ((a - d) / 2, "0011"), ((a - d) / 2, "1100"),
        ((b + c) / 2, "0101"), ((b + c) / 2, "1010"),
        ((b - c) / 2, "0110"), ((b - c) / 2, "1001"),
    ])


def _labc2(a, b, c):
    return from_terms([
        ((a + b) / 2, "0000"), ((a + b) / 2, "1111"),
        ((a - b) / 2, "0011"), ((a - b) / 2, "1100"),
        (c, "0101"), (c, "1010"),
        (1, "0110"),
    ])


def _la2b2(a, b):
    return from_terms([(a, "0000"), (a, "1111"), (b, "0101"), (b, "1010"), (1, "0110"), (1, "0011")])


def _lab3(a, b):
    return from_terms([
        (a, "0000"), (a, "1111"),
        ((a + b) / 2, "0101"), ((a + b) / 2, "1010"),
        ((a - b) / 2, "0110"), ((a - b) / 2, "1001"),
        (S2, "0001"), (S2, "0010"), (S2, "0111"), (S2, "1011"),
    ])


def _la4(a):
    return from_terms([
        (a, "0000"), (a, "0101"), (a, "1010"), (a, "1111"),
        (1j, "0001"), (1, "0110"), (-1j, "1011"),
    ])


def _la2_0_3p1(a):
    return from_terms([(a, "0000"), (a, "1111"), (1, "0011"), (1, "0101"), (1, "0110")])


_BUILDERS = {
    FamilyId.Gabcd: _gabcd,
    FamilyId.Labc2: _labc2,
    FamilyId.La2b2: _la2b2,
    FamilyId.Lab3: _lab3,
    FamilyId.La4: _la4,
    FamilyId.La2_0_3p1: _la2_0_3p1,
    FamilyId.L0_5p3: lambda: from_terms([(1, "0000"), (1, "0101"), (1, "1000"), (1, "1110")]),
    FamilyId.L0_7p1: lambda: from_terms([(1, "0000"), (1, "1011"), (1, "1101"), (1, "1110")]),
    FamilyId.L0_31b_0_31b: lambda: from_terms([(1, "0000"), (1, "0111")]),
}


def make_representative(p: FamilyParams) -> np.ndarray:
    if not isinstance(p, FamilyParams):
        raise TypeError("expected FamilyParams")
    return _BUILDERS[p.family](*p.values)


# Well-known states that show up next to the family representatives.
NAMED_STATES = {
    "GHZ": from_terms([(1, "0000"), (1, "1111")]),
    "W": from_terms([(1, "0001"), (1, "0010"), (1, "0100"), (1, "1000")]),
    "phi4": from_terms([(0.5, "0000"), (0.5, "0011"), (0.5, "1100"), (-0.5, "1111")]),
}


def named_state(name: str) -> np.ndarray:
    return NAMED_STATES[name].copy()


# Quadratic forms that appear in the classification criteria, per family.
QUADRATICS = {
    FamilyId.Gabcd: {
        "a²+d²": {"a": 1, "d": 1},
        "a²+b²": {"a": 1, "b": 1},
        "2a²+b²+c²": {"a": 2, "b": 1, "c": 1},
        "a²+b²+c²+d²": {"a": 1, "b": 1, "c": 1, "d": 1},
    },
    FamilyId.Labc2: {
        "a²+b²": {"a": 1, "b": 1},
        "a²+c²": {"a": 1, "c": 1},
        "3a²+b²": {"a": 3, "b": 1},
        "a²+b²+2c²": {"a": 1, "b": 1, "c": 2},
        "b²+2c²": {"b": 1, "c": 2},
    },
    FamilyId.La2b2: {"a²+b²": {"a": 1, "b": 1}},
    FamilyId.Lab3: {"3a²+b²": {"a": 3, "b": 1}},
}


@dataclass(frozen=True)
class RegimePredicate:
    name: str
    holds: bool
    inputs: tuple


class Relations:
    """Tolerance-aware equalities among a parameter tuple.

    Linear relations are judged against tol*max(1, m) and quadratic ones against
    tol*max(1, m^2) times the coefficient weight, where m is the largest
    parameter modulus.
    """

    def __init__(self, values, tol=DEFAULT_TOL):
        self.values = tuple(complex(v) for v in values)
        self.tol = tol
        m = max((abs(v) for v in self.values), default=0.0)
        self.lin = tol * max(1.0, m)
        self.quad = tol * max(1.0, m * m)

    def zero(self, x):
        return abs(x) <= self.lin

    def eq(self, x, y):
        return abs(x - y) <= self.lin

    def pm(self, x, y):
        return self.eq(x, y) or self.eq(x, -y)

    def quad_zero(self, value, weight=1.0):
        return abs(value) <= self.quad * weight


def _quad_value(form, env):
    return sum(c * env[k] ** 2 for k, c in form.items())


def evaluate_regime(p: FamilyParams, tol=DEFAULT_TOL) -> list:
    env = p.as_dict()
    rel = Relations(p.values, tol)
    out = []
    for x in p.names:
        out.append(RegimePredicate(f"{x}=0", rel.zero(env[x]), (x,)))
    for x, y in combinations(p.names, 2):
        vx, vy = env[x], env[y]
        plus, minus = rel.eq(vx, vy), rel.eq(vx, -vy)
        out.append(RegimePredicate(f"{x}={y}", plus, (f"{x}-{y}",)))
        out.append(RegimePredicate(f"{x}=-{y}", minus, (f"{x}+{y}",)))
        out.append(RegimePredicate(f"{x}=±{y}", plus or minus, (f"{x}-{y}", f"{x}+{y}")))
        out.append(RegimePredicate(f"{x}={y}=0", rel.zero(vx) and rel.zero(vy), (x, y)))
    for expr, form in QUADRATICS.get(p.family, {}).items():
        weight = sum(abs(c) for c in form.values())
        out.append(RegimePredicate(f"{expr}=0", rel.quad_zero(_quad_value(form, env), weight), (expr,)))
    return out


def regime(p: FamilyParams, tol=DEFAULT_TOL) -> dict:
    return {r.name: r.holds for r in evaluate_regime(p, tol)}
