"""Decision tables that assign a family member to its SLOCC class.

Classification runs in two stages.  ``reduce_params`` first moves a parameter
tuple into the canonical subfamily its table is written for (for instance any
G_abcd with two vanishing parameters becomes G(p, 0, 0, q)).  Then the rows of
that subtable are tested against the regime predicates, and exactly one row
has to match.
"""
from dataclasses import dataclass, field, replace

import numpy as np

from .core import DEFAULT_TOL, HADAMARD, I2, SX, SY, SZ, QuadOperator
from .families import FamilyId, FamilyParams, Relations, regime
from .invariants import Signature, signature


class UnclassifiableParams(ValueError):
    pass


class ProductState(UnclassifiableParams):
    """The parameters give a state that is not genuinely four-partite entangled."""


@dataclass(frozen=True)
class ClassLabel:
    id: str
    family: FamilyId
    table: str
    starred: bool = False
    alias: str = None
    entangled: bool = True
    branch: str = None

    @property
    def citation(self):
        return f"{self.table} row {self.id}"

    def to_dict(self):
        out = {"id": self.id, "family": self.family.value, "starred": self.starred, "citation": self.citation}
        if self.alias:
            out["alias"] = self.alias
        if not self.entangled:
            out["entangled"] = False
        if self.branch:
            out["branch"] = self.branch
        return out


@dataclass(frozen=True)
class FConstraint:
    """A statement about which F_i vanish on every state of a class.

    kind "zero": all listed F_i vanish.  "not_all_zero": at least one of
    F1..F10 is nonzero.  "pairs_nonzero": for each listed i, F_i and F_(i+1)
    do not vanish together.  Indices are 1-based.
    """

    kind: str
    indices: tuple = ()
    source: str = ""

    def holds(self, f_zero) -> bool:
        if self.kind == "zero":
            return all(f_zero[i - 1] for i in self.indices)
        if self.kind == "not_all_zero":
            return not all(f_zero)
        if self.kind == "pairs_nonzero":
            return all(not (f_zero[i - 1] and f_zero[i]) for i in self.indices)
        raise ValueError(f"unknown constraint kind {self.kind!r}")

    def describe(self):
        if self.kind == "zero":
            return "F" + ",".join(map(str, self.indices)) + " = 0"
        if self.kind == "not_all_zero":
            return "some F_i != 0"
        return " and ".join(f"|F{i}|+|F{i + 1}| != 0" for i in self.indices)


@dataclass(frozen=True)
class TableRow:
    label: ClassLabel
    subtable: str
    criteria: tuple
    expected: tuple
    f_constraints: tuple = field(default=())

    def criteria_hold(self, reg: dict) -> bool:
        return all(_clause(c, reg) for c in self.criteria)

    def template_matches(self, s: Signature) -> bool:
        flags = (s.i_zero,) + tuple(s.d_zero)
        for want, is_zero in zip(self.expected, flags):
            if want == "0" and not is_zero:
                return False
            if want == "≠0" and is_zero:
                return False
        return True

    def f_matches(self, f_zero) -> bool:
        return all(c.holds(f_zero) for c in self.f_constraints)


def _clause(clause, reg):
    for lit in clause.split("|"):
        neg = lit.startswith("!")
        name = lit[1:] if neg else lit
        if name not in reg:
            raise KeyError(f"unknown regime predicate {name!r}")
        if reg[name] != neg:
            return True
    return False


F18_ZERO = FConstraint("zero", tuple(range(1, 9)), "F1..F8 carry a vanishing factor")
ALL_F_ZERO = FConstraint("zero", tuple(range(1, 11)), "all F_i vanish on the orbit")
INEQ1 = FConstraint("pairs_nonzero", (1, 3, 5, 7), "no F pair (2k-1, 2k) vanishes together")

_G, _L, _V, _R = FamilyId.Gabcd, FamilyId.Labc2, FamilyId.La2b2, FamilyId.Lab3
NZ, Z, DL = "≠0", "0", "Δ"
ALL_DELTA = (DL, DL, DL)


def _row(id, family, table, subtable, criteria, expected, starred=False, alias=None, entangled=True, f=()):
    label = ClassLabel(id, family, table, starred, alias, entangled)
    return TableRow(label, subtable, tuple(criteria), tuple(expected), tuple(f))


ROWS = (
    # G_abcd with b=c=0, ad != 0
    _row("A1.1", _G, "Table I(1)", "G:b=c=0", ["a=±d"], (NZ, Z, Z, Z), alias="GHZ"),
    _row("A1.2", _G, "Table I(1)", "G:b=c=0", ["!a=±d", "a²+d²=0"], (Z, Z, DL, Z), alias="φ4"),
    _row("A1.3", _G, "Table I(1)", "G:b=c=0", ["!a=±d", "!a²+d²=0"], (NZ, Z, DL, Z), starred=True),
    # G_abcd with a=d, b=±c, a != ±b
    _row("A2.1", _G, "Table I(2.1)", "G:a=d,b=±c", ["b=c", "a²+b²=0"], (Z, DL, Z, Z)),
    _row("A2.2", _G, "Table I(2.1)", "G:a=d,b=±c", ["b=c", "!a²+b²=0"], (NZ, DL, Z, Z), starred=True),
    _row("A3.1", _G, "Table I(2.1)", "G:a=d,b=±c", ["b=-c", "a²+b²=0"], (Z, Z, Z, DL)),
    _row("A3.2", _G, "Table I(2.1)", "G:a=d,b=±c", ["b=-c", "!a²+b²=0"], (NZ, Z, Z, DL), starred=True),
    # G_abcd with a=d, b != ±c
    _row("A4.1", _G, "Table I(2.2)", "G:a=d", ["a=±b|a=±c", "2a²+b²+c²=0"], (Z,) + ALL_DELTA, starred=True, f=[F18_ZERO]),
    _row("A4.2", _G, "Table I(2.2)", "G:a=d", ["a=±b|a=±c", "!2a²+b²+c²=0"], (NZ,) + ALL_DELTA, starred=True, f=[F18_ZERO]),
    _row("A4.3", _G, "Table I(2.2)", "G:a=d", ["!a=±b", "!a=±c", "2a²+b²+c²=0"], (Z,) + ALL_DELTA, starred=True),
    _row("A4.4", _G, "Table I(2.2)", "G:a=d", ["!a=±b", "!a=±c", "!2a²+b²+c²=0"], (NZ,) + ALL_DELTA, starred=True),
    # G_abcd generic
    _row("A4.5", _G, "Table I(2.3)", "G:generic", ["a²+b²+c²+d²=0"], (Z,) + ALL_DELTA, starred=True),
    _row("A4.6", _G, "Table I(2.3)", "G:generic", ["!a²+b²+c²+d²=0"], (NZ,) + ALL_DELTA, starred=True),
    # L_abc2 with c=0
    _row("B1.1", _L, "Table II(1)", "L:c=0", ["a=b", "!a=0"], (NZ, Z, Z, DL)),
    _row("B1.2", _L, "Table II(1)", "L:c=0", ["a=-b", "!a=0"], (NZ, DL, Z, Z)),
    _row("B1.3", _L, "Table II(1)", "L:c=0", ["!a=±b", "a²+b²=0"], (Z,) + ALL_DELTA),
    _row("B1.4", _L, "Table II(1)", "L:c=0", ["!a=±b", "!a=0", "!b=0", "!a²+b²=0"], (NZ,) + ALL_DELTA, starred=True),
    _row("B1.5", _L, "Table II(1)", "L:c=0", ["!a=±b", "a=0|b=0"], (NZ, Z, DL, Z), f=[ALL_F_ZERO]),
    # L_abc2 with abc != 0 and a relation among the parameters
    _row("B2.1", _L, "Table II(2)", "L:abc≠0", ["a=b", "a=±c"], (NZ, DL, Z, Z), f=[F18_ZERO]),
    _row("B2.2", _L, "Table II(2)", "L:abc≠0", ["a=b", "!a=±c", "a²+c²=0"], (Z,) + ALL_DELTA),
    _row("B2.3", _L, "Table II(2)", "L:abc≠0", ["a=b", "!a=±c", "!a²+c²=0"], (NZ,) + ALL_DELTA, starred=True),
    _row("B3.1", _L, "Table II(2)", "L:abc≠0", ["a=-b", "a=±c"], (NZ, Z, Z, DL), f=[F18_ZERO]),
    _row("B3.2", _L, "Table II(2)", "L:abc≠0", ["a=-b", "!a=±c", "a²+c²=0"], (Z,) + ALL_DELTA),
    _row("B3.3", _L, "Table II(2)", "L:abc≠0", ["a=-b", "!a=±c", "!a²+c²=0"], (NZ,) + ALL_DELTA, starred=True),
    _row("B4.1", _L, "Table II(2)", "L:abc≠0", ["!a=±b", "a=c", "3a²+b²=0"], (Z,) + ALL_DELTA, starred=True, f=[INEQ1]),
    _row("B4.2", _L, "Table II(2)", "L:abc≠0", ["!a=±b", "a=c", "!3a²+b²=0"], (NZ,) + ALL_DELTA, starred=True, f=[INEQ1]),
    # L_abc2 with abc != 0 and no relation
    _row("B4.3", _L, "Table II(3)", "L:generic", ["a²+b²+2c²=0"], (Z,) + ALL_DELTA, starred=True),
    _row("B4.4", _L, "Table II(3)", "L:generic", ["!a²+b²+2c²=0"], (NZ,) + ALL_DELTA, starred=True),
    # L_abc2 with c != 0, ab = 0
    _row("B5.1", _L, "Table II(4)", "L:ab=0", ["a=b=0"], (NZ, Z, DL, Z), f=[FConstraint("not_all_zero", (), "F9, F10 cannot vanish together")]),
    _row("B5.2", _L, "Table II(4)", "L:ab=0", ["a=0", "b=c"], (NZ,) + ALL_DELTA, f=[INEQ1]),
    _row("B5.3", _L, "Table II(4)", "L:ab=0", ["a=0", "!b=±c", "b²+2c²=0"], (Z,) + ALL_DELTA),
    _row("B5.4", _L, "Table II(4)", "L:ab=0", ["a=0", "!b=0", "!b=±c", "!b²+2c²=0"], (NZ,) + ALL_DELTA, starred=True),
    # L_a2b2
    _row("V1", _V, "Table III", "V", ["a=±b", "!a=0"], (NZ, DL, Z, Z)),
    _row("V2", _V, "Table III", "V", ["!a=±b", "!a=0", "!b=0", "a²+b²=0"], (Z,) + ALL_DELTA),
    _row("V3", _V, "Table III", "V", ["!a=±b", "!a=0", "!b=0", "!a²+b²=0"], (NZ,) + ALL_DELTA, starred=True),
    _row("V4", _V, "Table III", "V", ["!a=±b", "a=0|b=0"], (NZ,) + ALL_DELTA),
    # L_ab3
    _row("R1.1", _R, "Table IV", "R", ["a=b=0"], (Z, Z, Z, Z), alias="W", f=[ALL_F_ZERO]),
    _row("R1.2", _R, "Table IV", "R", ["a=b", "!a=0"], (NZ, DL, Z, Z), f=[F18_ZERO]),
    _row("R1.3", _R, "Table IV", "R", ["a=-b", "!a=0"], (NZ, Z, Z, DL), f=[F18_ZERO]),
    _row("R2.1", _R, "Table IV", "R", ["a=0", "!b=0"], (NZ,) + ALL_DELTA),
    _row("R2.2", _R, "Table IV", "R", ["!a=0", "b=0"], (NZ,) + ALL_DELTA),
    _row("R3.1", _R, "Table IV", "R", ["!a=±b", "!a=0", "!b=0", "!3a²+b²=0"], (NZ,) + ALL_DELTA, starred=True),
    _row("R3.2", _R, "Table IV", "R", ["!a=±b", "!a=0", "!b=0", "3a²+b²=0"], (Z,) + ALL_DELTA),
    # the five small families
    _row("La4_a0", FamilyId.La4, "Table V", "La4", ["a=0"], (Z, DL, Z, Z)),
    _row("La4_aNonzero", FamilyId.La4, "Table V", "La4", ["!a=0"], (NZ,) + ALL_DELTA),
    _row("La2_0_3p1_a0", FamilyId.La2_0_3p1, "Family La2_0_3p1 note", "La2_0_3p1", ["a=0"], (Z, Z, Z, Z),
         entangled=False, f=[ALL_F_ZERO]),
    _row("La2_0_3p1_aNonzero", FamilyId.La2_0_3p1, "Table VI", "La2_0_3p1", ["!a=0"], (NZ,) + ALL_DELTA),
    _row("L0_5p3", FamilyId.L0_5p3, "Family L0_5p3 facts", "L0_5p3", [], (Z, Z, Z, Z),
         f=[FConstraint("zero", (1, 2), "F1=F2=0"), FConstraint("pairs_nonzero", (3, 5, 7), "printed")]),
    _row("L0_7p1", FamilyId.L0_7p1, "Family L0_7p1 facts", "L0_7p1", [], (Z,) + ALL_DELTA,
         f=[FConstraint("pairs_nonzero", (3, 5, 7), "printed")]),
    _row("L0_31b", FamilyId.L0_31b_0_31b, "Family L0_31b note", "L0_31b", [], (Z, Z, Z, Z),
         entangled=False, f=[FConstraint("zero", (3, 4, 5, 6, 7, 8), "qubit 1 factors out")]),
)

ROW_BY_ID = {r.label.id: r for r in ROWS}
LABELS = {r.label.id: r.label for r in ROWS}


def row_for(label) -> TableRow:
    key = label.id if isinstance(label, ClassLabel) else label
    try:
        return ROW_BY_ID[key]
    except KeyError:
        raise KeyError(f"unknown class label {key!r}") from None


@dataclass(frozen=True)
class Step:
    """One remapping: rep(before) equals op applied to rep(after)."""

    note: str
    op: QuadOperator


@dataclass(frozen=True)
class Reduction:
    subtable: str
    params: FamilyParams
    steps: tuple = ()

    def operator(self) -> QuadOperator:
        """Composite op with rep(original) = op · rep(params)."""
        out = QuadOperator.identity()
        for s in self.steps:
            out = out @ s.op
        return out


def _dg(x, y):
    return np.diag([x, y]).astype(complex)


_Q = QuadOperator
HHHH = _Q(HADAMARD, HADAMARD, HADAMARD, HADAMARD)
XIIX = _Q(SX, I2, I2, SX)
IYYI = _Q(I2, SY, SY, I2)
IXIX = _Q(I2, SX, I2, SX)
IIXX = _Q(I2, I2, SX, SX)
XIXI = _Q(SX, I2, SX, I2)
ZZII = _Q(SZ, SZ, I2, I2)
IZZI = _Q(I2, SZ, SZ, I2)
PHASE_B0 = _Q(_dg(1j, 1), _dg(-1j, 1), _dg(1j, 1), _dg(1j, -1))
PHASE_ALL = _Q(_dg(1, 1j), _dg(1, 1j), _dg(1, 1j), _dg(1, 1j))
MZ_Z = _Q(-SZ, SZ, I2, I2)
PHASE_L = _Q(_dg(1j, 1), _dg(1j, 1), _dg(-1j, 1), _dg(-1j, 1))
IIZ_MZ = _Q(I2, I2, SZ, -SZ)

_H_STEP = Step("c=d=0 -> b=c=0 via H⊗H⊗H⊗H, which swaps b and d", HHHH)
_B0_STEP = Step("b=d=0 -> c=d=0 via diag(i,1)⊗diag(-i,1)⊗diag(i,1)⊗diag(i,-1)", PHASE_B0)


def _g_pair(vals, zeros):
    a, b, c, d = vals
    # Which pair is nonzero decides how the state is carried to G(p, 0, 0, q).
    table = {
        (1, 2): ((a, d), ()),
        (0, 3): ((b, -c), (Step("a=d=0 -> b=c=0 via σx⊗I⊗I⊗σx", XIIX),)),
        (2, 3): ((a, b), (_H_STEP,)),
        (0, 1): ((c, -d), (Step("a=b=0 -> c=d=0 via I⊗σy⊗σy⊗I", IYYI), _H_STEP)),
        (1, 3): ((-a, c), (_B0_STEP, _H_STEP)),
        (0, 2): ((-b, d), (Step("a=c=0 -> b=d=0 via I⊗σx⊗I⊗σx", IXIX), _B0_STEP, _H_STEP)),
    }
    key = tuple(i for i, z in enumerate(zeros) if z)
    return table[key]


def _reduce_g(p, tol):
    rel = Relations(p.values, tol)
    a, b, c, d = p.values
    zeros = [rel.zero(x) for x in p.values]
    nz = sum(zeros)
    if nz == 4:
        raise ProductState("all parameters vanish: the representative is the zero vector")
    if nz == 3:
        raise ProductState("three vanishing parameters give a product of two EPR pairs")
    if nz == 0 and all(rel.pm(x, a) for x in p.values):
        raise ProductState("a=±b=±c=±d gives a product of two EPR pairs")
    if nz == 2:
        (x, y), steps = _g_pair(p.values, zeros)
        return Reduction("G:b=c=0", FamilyParams(_G, (x, 0, 0, y)), steps)

    def nonzero_pm(x, y):
        return not rel.zero(x) and rel.pm(x, y)

    steps = []
    if nonzero_pm(a, d) and nonzero_pm(b, c):
        if not rel.eq(a, d):
            if rel.eq(b, c):
                a, b, c, d = b, a, -a, b
                steps.append(Step("a=-d, b=c -> a=d, b=-c via I⊗σx⊗I⊗σx", IXIX))
            else:
                c, d = -c, -d
                steps.append(Step("a=-d, b=-c -> a=d, b=c via I⊗I⊗σx⊗σx", IIXX))
        return Reduction("G:a=d,b=±c", FamilyParams(_G, (a, b, c, d)), tuple(steps))
    if nonzero_pm(a, c) and nonzero_pm(b, d):
        a, b, c, d = d, -b, -c, a
        steps.append(Step("a=±c, b=±d -> a=±b, c=±d via diag(1,i)⊗diag(1,i)⊗diag(1,i)⊗diag(1,i)", PHASE_ALL))
    if nonzero_pm(a, b) and nonzero_pm(c, d):
        # H⊗4 swaps b and d, giving a=±d, b=±c; then fix the signs.
        target_b = c
        a, b, c, d = a, d, c, b
        steps.append(Step("a=±b, c=±d -> a=±d, b=±c via H⊗H⊗H⊗H", HHHH))
        if not rel.eq(a, d):
            c, d = -c, -d
            steps.append(Step("a=-d -> a=d via I⊗I⊗σx⊗σx", IIXX))
        if not rel.eq(b, target_b):
            b, c = -b, -c
            steps.append(Step("flip the signs of b and c via σz⊗σz⊗I⊗I", ZZII))
        return Reduction("G:a=d,b=±c", FamilyParams(_G, (a, b, c, d)), tuple(steps))
    if nonzero_pm(a, d):
        if not rel.eq(a, d):
            c, d = -c, a
            steps.append(Step("a=-d -> a=d via I⊗I⊗σx⊗σx", IIXX))
        return Reduction("G:a=d", FamilyParams(_G, (a, b, c, d)), tuple(steps))
    if nonzero_pm(b, c):
        if rel.eq(b, c):
            a, b, c, d = b, a, d, b
            steps.append(Step("b=c -> a=d via σx⊗I⊗σx⊗I", XIXI))
        else:
            a, b, c, d = b, a, -d, b
            steps.append(Step("b=-c -> a=d via σx⊗I⊗I⊗σx", XIIX))
        return Reduction("G:a=d", FamilyParams(_G, (a, b, c, d)), tuple(steps))
    return Reduction("G:generic", p)


def _reduce_l(p, tol):
    rel = Relations(p.values, tol)
    a, b, c = p.values
    if rel.zero(a) and rel.zero(b) and rel.zero(c):
        raise ProductState("a=b=c=0 leaves the product ket |0110>")
    if rel.zero(c):
        return Reduction("L:c=0", p)
    if not rel.zero(a) and not rel.zero(b):
        if rel.pm(a, b):
            return Reduction("L:abc≠0", p)
        if not (rel.pm(c, a) or rel.pm(c, b)):
            return Reduction("L:generic", p)
        steps = []
        if rel.eq(c, b) or rel.eq(c, -b):
            a, b, c = b, a, -c
            steps.append(Step("c=±b -> c=∓a via I⊗σz⊗σz⊗I, which swaps a and b and flips c", IZZI))
        if rel.eq(c, -a):
            a, b, c = -a, -b, c
            steps.append(Step("c=-a -> c=a via (-σz)⊗σz⊗I⊗I", MZ_Z))
        return Reduction("L:abc≠0", FamilyParams(_L, (a, b, c)), tuple(steps))
    if rel.zero(a) and rel.zero(b):
        return Reduction("L:ab=0", p)
    steps = []
    if rel.zero(b):
        a, b = 0, a
        steps.append(Step("b=0 -> a=0 via diag(i,1)⊗diag(i,1)⊗diag(-i,1)⊗diag(-i,1)", PHASE_L))
    if rel.eq(b, -c):
        b = -b
        steps.append(Step("b=-c -> b=c via I⊗I⊗σz⊗(-σz)", IIZ_MZ))
    return Reduction("L:ab=0", FamilyParams(_L, (a, b, c)), tuple(steps))


_SIMPLE_SUBTABLE = {
    FamilyId.La2b2: "V",
    FamilyId.Lab3: "R",
    FamilyId.La4: "La4",
    FamilyId.La2_0_3p1: "La2_0_3p1",
    FamilyId.L0_5p3: "L0_5p3",
    FamilyId.L0_7p1: "L0_7p1",
    FamilyId.L0_31b_0_31b: "L0_31b",
}


def reduce_params(p: FamilyParams, tol=DEFAULT_TOL) -> Reduction:
    """Carry p to the canonical subfamily its table is written for.

    The returned steps compose to an operator with
    rep(p) = reduction.operator() · rep(reduction.params).
    """
    if p.family is _G:
        return _reduce_g(p, tol)
    if p.family is _L:
        return _reduce_l(p, tol)
    if p.family is _V:
        rel = Relations(p.values, tol)
        if rel.zero(p.a) and rel.zero(p.b):
            raise ProductState("a=b=0 factors as |01>_13 (|01>+|10>)_24")
    return Reduction(_SIMPLE_SUBTABLE[p.family], p)


@dataclass(frozen=True)
class Classification:
    label: ClassLabel
    reduction: Reduction


def classify(p: FamilyParams, tol=DEFAULT_TOL) -> Classification:
    red = reduce_params(p, tol)
    reg = regime(red.params, tol)
    hits = [r for r in ROWS if r.subtable == red.subtable and r.criteria_hold(reg)]
    if len(hits) != 1:
        ids = [r.label.id for r in hits]
        raise UnclassifiableParams(f"{p} reduced to {red.params} matches rows {ids or 'none'} of {red.subtable}")
    label = hits[0].label
    if label.id == "R3.2":
        a, b = red.params.values
        label = replace(label, branch="+" if (b / a).imag > 0 else "-")
    return Classification(label, red)


def classify_params(p: FamilyParams, tol=DEFAULT_TOL) -> ClassLabel:
    return classify(p, tol).label


def match_signature(s: Signature, f_zero=None) -> list:
    """Every class whose printed (I, D1, D2, D3) column admits `s`.

    With `f_zero` (ten booleans) rows whose F facts contradict it are dropped.
    """
    out = []
    for r in ROWS:
        if not r.template_matches(s):
            continue
        if f_zero is not None and not r.f_matches(f_zero):
            continue
        out.append(r.label)
    return out


def verify_class_membership(label, psi, tol=DEFAULT_TOL) -> bool:
    """False proves psi is outside the class; True is only consistency."""
    row = row_for(label)
    s = signature(psi, tol)
    return row.template_matches(s) and row.f_matches(s.f_zero)


# ---- random members of each row -------------------------------------------

SQRT3 = np.sqrt(3)


def _r(rng):
    while True:
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(z) > 0.2:
            return z


def _s(rng):
    return 1 if rng.random() < 0.5 else -1


def _si(rng):
    return 1j * _s(rng)


_RAW_SAMPLERS = {
    "A1.1": lambda g: (lambda a: (a, 0, 0, _s(g) * a))(_r(g)),
    "A1.2": lambda g: (lambda a: (a, 0, 0, _si(g) * a))(_r(g)),
    "A1.3": lambda g: (_r(g), 0, 0, _r(g)),
    "A2.1": lambda g: (lambda a, b: (a, b, b, a))(*(lambda a: (a, _si(g) * a))(_r(g))),
    "A2.2": lambda g: (lambda a, b: (a, b, b, a))(_r(g), _r(g)),
    "A3.1": lambda g: (lambda a, b: (a, b, -b, a))(*(lambda a: (a, _si(g) * a))(_r(g))),
    "A3.2": lambda g: (lambda a, b: (a, b, -b, a))(_r(g), _r(g)),
    "A4.1": lambda g: (lambda a: (a, _s(g) * a, _si(g) * SQRT3 * a, a) if g.random() < 0.5
                       else (a, _si(g) * SQRT3 * a, _s(g) * a, a))(_r(g)),
    "A4.2": lambda g: (lambda a: (a, _s(g) * a, _r(g), a) if g.random() < 0.5 else (a, _r(g), _s(g) * a, a))(_r(g)),
    "A4.3": lambda g: (lambda a, b: (a, b, _s(g) * np.sqrt(-2 * a * a - b * b), a))(_r(g), _r(g)),
    "A4.4": lambda g: (lambda a: (a, _r(g), _r(g), a))(_r(g)),
    "A4.5": lambda g: (lambda a, b, c: (a, b, c, _s(g) * np.sqrt(-a * a - b * b - c * c)))(_r(g), _r(g), _r(g)),
    "A4.6": lambda g: (_r(g), _r(g), _r(g), _r(g)),
    "B1.1": lambda g: (lambda a: (a, a, 0))(_r(g)),
    "B1.2": lambda g: (lambda a: (a, -a, 0))(_r(g)),
    "B1.3": lambda g: (lambda a: (a, _si(g) * a, 0))(_r(g)),
    "B1.4": lambda g: (_r(g), _r(g), 0),
    "B1.5": lambda g: (_r(g), 0, 0) if g.random() < 0.5 else (0, _r(g), 0),
    "B2.1": lambda g: (lambda a: (a, a, _s(g) * a))(_r(g)),
    "B2.2": lambda g: (lambda a: (a, a, _si(g) * a))(_r(g)),
    "B2.3": lambda g: (lambda a: (a, a, _r(g)))(_r(g)),
    "B3.1": lambda g: (lambda a: (a, -a, _s(g) * a))(_r(g)),
    "B3.2": lambda g: (lambda a: (a, -a, _si(g) * a))(_r(g)),
    "B3.3": lambda g: (lambda a: (a, -a, _r(g)))(_r(g)),
    "B4.1": lambda g: (lambda a: (a, _si(g) * SQRT3 * a, a))(_r(g)),
    "B4.2": lambda g: (lambda a: (a, _r(g), a))(_r(g)),
    "B4.3": lambda g: (lambda a, b: (a, b, _s(g) * np.sqrt(-(a * a + b * b) / 2)))(_r(g), _r(g)),
    "B4.4": lambda g: (_r(g), _r(g), _r(g)),
    "B5.1": lambda g: (0, 0, _r(g)),
    "B5.2": lambda g: (lambda b: (0, b, b))(_r(g)),
    "B5.3": lambda g: (lambda b: (0, b, _si(g) * b / np.sqrt(2)))(_r(g)),
    "B5.4": lambda g: (0, _r(g), _r(g)),
    "V1": lambda g: (lambda a: (a, _s(g) * a))(_r(g)),
    "V2": lambda g: (lambda a: (a, _si(g) * a))(_r(g)),
    "V3": lambda g: (_r(g), _r(g)),
    "V4": lambda g: (_r(g), 0) if g.random() < 0.5 else (0, _r(g)),
    "R1.1": lambda g: (0, 0),
    "R1.2": lambda g: (lambda a: (a, a))(_r(g)),
    "R1.3": lambda g: (lambda a: (a, -a))(_r(g)),
    "R2.1": lambda g: (0, _r(g)),
    "R2.2": lambda g: (_r(g), 0),
    "R3.1": lambda g: (_r(g), _r(g)),
    "R3.2": lambda g: (lambda a: (a, _si(g) * SQRT3 * a))(_r(g)),
    "La4_a0": lambda g: (0,),
    "La4_aNonzero": lambda g: (_r(g),),
    "La2_0_3p1_a0": lambda g: (0,),
    "La2_0_3p1_aNonzero": lambda g: (_r(g),),
    "L0_5p3": lambda g: (),
    "L0_7p1": lambda g: (),
    "L0_31b": lambda g: (),
}


def sample_row_params(row_id: str, rng, tries=200) -> FamilyParams:
    """Random parameters satisfying the row's criteria (checked by classifying them)."""
    row = row_for(row_id)
    for _ in range(tries):
        p = FamilyParams(row.label.family, _RAW_SAMPLERS[row_id](rng))
        try:
            if classify_params(p).id == row_id:
                return p
        except UnclassifiableParams:
            pass
    raise RuntimeError(f"could not draw parameters for {row_id}")
