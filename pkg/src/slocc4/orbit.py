"""Randomized checks of invariant behaviour along local-operator orbits.

Premises of the form "F1F2=0" have measure zero, so they are realized by
construction: the operator entries that multiply a given F_k are forced to
zero (which entry depends on the subfamily), the rest is random, and the
result is kept only if every factor stays invertible.
"""
import functools
import itertools
import zlib
from dataclasses import dataclass, field

import numpy as np

from .classifier import ROW_BY_ID, UnclassifiableParams, classify_params, sample_row_params
from .closed_forms import ORBIT_FORMS, REPRESENTATIVE_FORMS, OpContext, compare
from .core import (
    DEFAULT_TOL,
    QuadOperator,
    apply_quad,
    det2,
    random_complex,
    random_quad,
    random_state,
)
from .families import FamilyParams, make_representative, named_state, params
from .invariants import invariant_I, invariant_vector, signature, zero_scale

MIN_DET = 0.1
# Badly conditioned factors inflate the state norm, and with it the zero
# threshold, until structurally nonzero F's can pass as zero.
MAX_COND = 10.0
# Free entries stay at least this large: F's are quartic in single entries, so
# an entry of 0.01 would push a genuinely nonzero F below the zero threshold.
ENTRY_FLOOR = 0.1


class PremiseInfeasible(ValueError):
    pass


class NotApplicable(ValueError):
    pass


# ---- which operator entry carries which F ---------------------------------
# Entries are (qubit, k) with k = 0..3 row-major: m11, m12, m21, m22.

ENTRY_MAPS = {
    # F_{2q+1} and F_{2q+2} are squares of products of one row of operator q
    "base": {2 * q + 1 + r: ((q, 2 * r), (q, 2 * r + 1)) for q in range(4) for r in range(2)},
    "ca": {1: ((0, 0),), 2: ((0, 2),), 3: ((1, 1),), 4: ((1, 3),),
           5: ((2, 1),), 6: ((2, 3),), 7: ((3, 0),), 8: ((3, 2),)},
    "lab3": {1: ((0, 0),), 2: ((0, 2),), 3: ((1, 0),), 4: ((1, 2),),
             5: ((2, 1),), 6: ((2, 3),), 7: ((3, 1),), 8: ((3, 3),)},
}

_SINGULAR_PAIRS = ({0, 1}, {2, 3}, {0, 2}, {1, 3})


def _zeros_feasible(zeros):
    per = {}
    for q, k in zeros:
        per.setdefault(q, set()).add(k)
    return all(len(s) < 3 and s not in _SINGULAR_PAIRS for s in per.values())


@functools.lru_cache(maxsize=None)
def _premise_options(dnf, entry_map):
    """All invertibility-compatible sets of forced zeros realizing the premise."""
    emap = ENTRY_MAPS[entry_map]
    out = set()
    for conj in dnf:
        for fs in itertools.product(*[sorted(atom) for atom in conj]):
            for entries in itertools.product(*[emap[f] for f in sorted(set(fs))]):
                z = frozenset(entries)
                if _zeros_feasible(z):
                    out.add(z)
    return sorted(out, key=lambda z: sorted(z))


def _cond2(m):
    """2-norm condition number of a 2x2 matrix without an SVD."""
    f2 = float(np.sum(np.abs(m) ** 2))
    d = abs(det2(m))
    return (f2 + np.sqrt(max(f2 * f2 - 4 * d * d, 0.0))) / (2 * d)


def _local_with(rng, forced: dict, max_cond=MAX_COND):
    """Random 2x2 with some entries pinned; rejection keeps det and conditioning sane."""
    for _ in range(1000):
        m = random_complex(rng, 4)
        if np.min(np.abs(m)) < ENTRY_FLOOR:
            continue
        for k, v in forced.items():
            m[k] = v
        m = m.reshape(2, 2)
        if abs(det2(m)) >= MIN_DET and _cond2(m) < max_cond:
            return m
    raise PremiseInfeasible(f"no well-conditioned operator with entries {forced}")


def _quad_with(rng, forced: dict, sl=False, max_cond=MAX_COND):
    mats = []
    for q in range(4):
        mats.append(_local_with(rng, {k: v for (qq, k), v in forced.items() if qq == q}, max_cond))
    op = QuadOperator(*mats)
    return op.sl_normalized() if sl else op


def parse_premise(text: str):
    """'F1F2=0 & F3=F4=0 | F5=0' -> DNF of atoms (sets of F indices, one must vanish)."""
    dnf = []
    for disj in text.split("|"):
        conj = []
        for part in disj.split("&"):
            lhs = part.strip().removesuffix("=0")
            if "=" in lhs:  # F3=F4 -> two separate atoms
                for tok in lhs.split("="):
                    conj.append(frozenset([int(tok.strip()[1:])]))
            else:
                conj.append(frozenset(int(t) for t in lhs.split("F")[1:]))
        dnf.append(tuple(conj))
    return tuple(dnf)


@dataclass(frozen=True)
class ZeroPremise:
    text: str
    entry_map: str = "base"

    @property
    def dnf(self):
        return parse_premise(self.text)

    def forced(self, p, rng):
        options = _premise_options(self.dnf, self.entry_map)
        if not options:
            raise PremiseInfeasible(f"'{self.text}' cannot hold with invertible operators here")
        return {e: 0 for e in options[rng.integers(len(options))]}


@dataclass(frozen=True)
class AlphaRatioPremise:
    """alpha1 = 0 and alpha3^2 = ratio(params) * alpha4^2 (kills F1 and F2 together)."""

    name: str
    ratio: object
    # alpha3/alpha4 is fixed by the parameters, so conditioning cannot be chosen;
    # the conclusion is a zero test, which a large norm only makes easier.
    max_cond = 1e4

    def forced(self, p, rng):
        a4 = random_complex(rng)
        while abs(a4) < 0.3:
            a4 = random_complex(rng)
        r = complex(self.ratio(*p.values))
        a3 = np.sqrt(r) * a4 * (1 if rng.random() < 0.5 else -1)
        return {(0, 0): 0, (0, 2): a3, (0, 3): a4}


def sample_quad(mode="general", seed=0, premise=None, p: FamilyParams = None, rng=None,
                entry_map="base") -> QuadOperator:
    """Random local operator: "general", "sl" (unit determinants) or "premise".

    A premise is a ZeroPremise/AlphaRatioPremise or a string such as
    "F1F2=0 & F3=0", read with ``entry_map`` for the subfamily of ``p``.
    """
    rng = rng if rng is not None else np.random.default_rng(seed)
    if mode == "general":
        return random_quad(rng)
    if mode == "sl":
        return random_quad(rng, sl=True)
    if mode == "premise":
        if premise is None:
            raise ValueError("premise mode needs a premise")
        if isinstance(premise, str):
            premise = ZeroPremise(premise, entry_map)
        return _quad_with(rng, premise.forced(p, rng))
    raise ValueError(f"unknown mode {mode!r}")


# ---- conclusions --------------------------------------------------------------

class View:
    """Zero and equality tests on the invariants of one pushed state."""

    def __init__(self, psi, p, tol):
        self.psi, self.p, self.tol = psi, p, tol
        self.inv = invariant_vector(psi)
        self.sig = signature(psi, tol, self.inv)
        self.s4 = zero_scale(psi, 4)

    def fz(self, *ks):
        return all(self.sig.f_zero[k - 1] for k in ks)

    def fnz(self, *ks):
        return not any(self.sig.f_zero[k - 1] for k in ks)

    def dz(self, *ks):
        return all(self.sig.d_zero[k - 1] for k in ks)

    def dnz(self, k):
        return not self.sig.d_zero[k - 1]

    def feq(self, j, k):
        return abs(self.inv.F[j - 1] - self.inv.F[k - 1]) <= self.tol * self.s4

    def exactly_one(self, j, k):
        return self.sig.f_zero[j - 1] != self.sig.f_zero[k - 1]

    def pairs_nonzero(self, *odd):
        return all(not (self.sig.f_zero[i - 1] and self.sig.f_zero[i]) for i in odd)


@dataclass(frozen=True)
class Context:
    name: str
    rows: tuple
    entry_map: str = "base"


CTX = {
    "G(a,0,0,d)": Context("G(a,0,0,d), ad≠0", ("A1.1", "A1.2", "A1.3")),
    "G(a,b,b,a)": Context("G(a,b,b,a), a≠±b", ("A2.1", "A2.2")),
    "G(a,b,b,a) I=0": Context("G(a,b,b,a), a²+b²=0", ("A2.1",)),
    "G(a,b,b,a) I≠0": Context("G(a,b,b,a), a²+b²≠0", ("A2.2",)),
    "G a=d rel": Context("G(a,b,c,a), b≠±c, a=±b or a=±c", ("A4.1", "A4.2")),
    "G a=d": Context("G(a,b,c,a), a≠±b, a≠±c", ("A4.3", "A4.4")),
    "L(a,b,0)": Context("L(a,b,0), ab≠0, a≠±b", ("B1.3", "B1.4")),
    "L(a,a,c)": Context("L(a,a,c), a≠±c", ("B2.2", "B2.3")),
    "L(a,-a,c)": Context("L(a,-a,c), a≠±c", ("B3.2", "B3.3")),
    "L(a,b,a)": Context("L(a,b,a), a≠±b", ("B4.1", "B4.2"), "ca"),
    "L generic": Context("L(a,b,c) without relations", ("B4.3", "B4.4"), "ca"),
    "L(0,0,c)": Context("L(0,0,c)", ("B5.1",)),
    "L(0,b,b)": Context("L(0,b,b)", ("B5.2",), "ca"),
    "L(0,b,c)": Context("L(0,b,c), b≠±c", ("B5.3", "B5.4"), "ca"),
    "V4": Context("La2b2 with ab=0", ("V4",)),
    "V3": Context("La2b2 generic", ("V3",)),
    "R1": Context("Lab3 with a=±b", ("R1.1", "R1.2", "R1.3"), "lab3"),
    "R2.1": Context("Lab3(0,b)", ("R2.1",), "lab3"),
    "R2.2": Context("Lab3(a,0)", ("R2.2",), "lab3"),
    "R3": Context("Lab3 with a≠±b, ab≠0", ("R3.1", "R3.2"), "lab3"),
    "L0_5p3": Context("L0_5p3", ("L0_5p3",)),
    "L0_7p1": Context("L0_7p1", ("L0_7p1",)),
}


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    contexts: tuple
    premise: str  # DNF over F zeros, or "" for any operator
    conclusion: object  # View -> bool
    statement: str
    citation: str
    construction: object = None  # alternative premise recipe (AlphaRatioPremise)

    def premise_for(self, ctx: Context):
        if self.construction is not None:
            return self.construction
        if self.premise:
            return ZeroPremise(self.premise, ctx.entry_map)
        return None


def _P(name, contexts, premise, conclusion, statement, citation, **kw):
    return PropertyCheck(name, tuple(contexts), premise, conclusion, statement, citation, **kw)


_BC = "F1F2=0 & F3F4=0"

PROPERTIES = (
    _P("Property 1.1", ["G(a,0,0,d)"], _BC, lambda v: v.exactly_one(9, 10),
       "exactly one of F9, F10 vanishes", "§3.1 Property 1.1"),
    _P("Property 1.2(1)(i)", ["G(a,b,b,a) I=0"], "", lambda v: v.feq(9, 10),
       "F9 = F10", "§3.2.1 Property 1.2"),
    _P("Property 1.2(1)(ii)", ["G(a,b,b,a)"], _BC, lambda v: v.fnz(9, 10),
       "F9 ≠ 0 and F10 ≠ 0", "§3.2.1 Property 1.2"),
    _P("Property 1.2(1)(iii)", ["G(a,b,b,a) I≠0"], _BC, lambda v: not v.feq(9, 10),
       "F9 ≠ F10", "§3.2.1 Property 1.2"),
    _P("Property 1.2(2)", ["G(a,b,b,a)"], "F1F2=0 & F3=F4=0 | F3F4=0 & F1=F2=0", lambda v: v.dnz(1),
       "D1 ≠ 0", "§3.2.1 Property 1.2"),
    _P("Property 1.3(1)", ["G a=d rel"], "", lambda v: v.fz(*range(1, 9)) and (
        _quad_zero(v.p.b ** 2 + v.p.c ** 2, v.p) or not v.fz(9, 10)),
       "F1..F8 = 0, and |F9|+|F10| ≠ 0 when b²+c² ≠ 0", "§3.2.2 Property 1.3"),
    _P("Property 1.3(2)(i)", ["G a=d"], "F1=F2=F3=F4=0", lambda v: v.fnz(9, 10),
       "F9 ≠ 0 and F10 ≠ 0", "§3.2.2 Property 1.3"),
    _P("Property 1.3(2)(ii)", ["G a=d"], "F1=F2=F3=F4=0", lambda v: not v.feq(9, 10),
       "F9 ≠ F10 (a⁴ ≠ b²c²)", "§3.2.2 Property 1.3"),
    _P("Property 2.1", ["L(a,b,0)", "L(0,0,c)", "V4"], "F1=0 | F2=0 | F3=0 | F4=0", lambda v: not v.fz(9, 10),
       "|F9|+|F10| ≠ 0", "Appendix A.1 Property 2.1"),
    _P("Property 2.2", ["L(a,b,0)", "L(0,0,c)", "V4"], _BC, lambda v: v.exactly_one(9, 10),
       "exactly one of F9, F10 vanishes", "Appendix A.1 Property 2.2"),
    _P("Property 2.3", ["L(a,b,0)"], "F1=F2=F3=F4=0", lambda v: v.dnz(2),
       "D2 ≠ 0", "Appendix A.1 Property 2.3"),
    _P("Property 2.4", ["L(a,b,0)"], "F1=F2=0 | F5=F6=0", lambda v: v.dz(1),
       "D1 = 0", "Appendix A.1 Property 2.4"),
    _P("Property 2.5", ["L(a,b,0)"], "F1=F2=0 | F7=F8=0", lambda v: v.dz(3),
       "D3 = 0", "Appendix A.1 Property 2.5"),
    _P("Property 3.1", ["L(a,a,c)"], "F1=F2=0", lambda v: v.dz(2, 3),
       "D2 = D3 = 0", "Appendix A.2.1 Property 3.1"),
    _P("Property 3.2", ["L(a,a,c)"], "F3=F4=0", lambda v: v.dz(2),
       "D2 = 0", "Appendix A.2.1 Property 3.2"),
    _P("Property 3.3", ["L(a,a,c)"], "F7=F8=0", lambda v: v.dz(3),
       "D3 = 0", "Appendix A.2.1 Property 3.3"),
    _P("Property 3.4", ["L(a,a,c)"], "F1=F2=F5=F6=0", lambda v: v.dnz(1),
       "D1 ≠ 0", "Appendix A.2.1 Property 3.4"),
    _P("Property 3.5", ["L(a,a,c)", "L(a,-a,c)"], "F1=F2=F3=F4=0", lambda v: v.fnz(9, 10),
       "F9 ≠ 0 and F10 ≠ 0", "Appendix A.2.1 Property 3.5"),
    _P("Property 4.1", ["L(a,-a,c)"], "F3=F4=0", lambda v: v.dz(2),
       "D2 = 0", "Appendix A.2.2 Property 4.1"),
    _P("Property 4.2", ["L(a,-a,c)"], "F1=F2=0", lambda v: v.dz(1, 2),
       "D1 = D2 = 0", "Appendix A.2.2 Property 4.2"),
    _P("Property 4.3", ["L(a,-a,c)"], "F5=F6=0", lambda v: v.dz(1),
       "D1 = 0", "Appendix A.2.2 Property 4.3"),
    _P("Property 4.4", ["L(a,-a,c)"], "F1=F2=F7=F8=0", lambda v: v.dnz(3),
       "D3 ≠ 0", "Appendix A.2.2 Property 4.4"),
    _P("Property 5.1", ["L(a,b,a)", "L(0,b,b)"], "F1F2=0 & F5F6=0", lambda v: v.dnz(1),
       "D1 ≠ 0", "Appendix A.2.3 Property 5.1"),
    _P("Property 5.2", ["L(a,b,a)", "L(0,b,b)"], "F1F2=0 & F3F4=0", lambda v: v.dnz(2),
       "D2 ≠ 0", "Appendix A.2.3 Property 5.2"),
    _P("Property 5.3", ["L(a,b,a)", "L(0,b,b)"], "F1F2=0 & F7F8=0", lambda v: v.dnz(3),
       "D3 ≠ 0", "Appendix A.2.3 Property 5.3"),
    _P("Property 5.4", ["L(a,b,a)"], "F2=F3=0", lambda v: v.fnz(9, 10),
       "F9 ≠ 0 and F10 ≠ 0", "Appendix A.2.3 Property 5.4"),
    _P("Property 6.1", ["L(0,0,c)"], "F1=F2=0 | F3=F4=0", lambda v: v.dz(2),
       "D2 = 0", "Appendix A.3 Property 6.1"),
    _P("Property 6.2", ["L(0,0,c)"], _BC, lambda v: v.exactly_one(9, 10),
       "exactly one of F9, F10 vanishes", "Appendix A.3 Property 6.2"),
    _P("Property 6.3", ["L(0,b,b)"], "F2=F3=0", lambda v: v.fz(9) and v.fnz(10),
       "F9 = 0 and F10 ≠ 0", "Appendix A.3 Property 6.3"),
    _P("Property 7.1", ["R2.1"], "F1=0 | F2=0 | F3=0 | F4=0", lambda v: v.feq(9, 10),
       "F9 = F10", "§6.2 Property 7.1"),
    _P("Property 7.2", ["R2.1"], _BC, lambda v: v.fz(9, 10),
       "F9 = F10 = 0", "§6.2 Property 7.2"),
    _P("Property 8.1", ["R2.2"], "F1=F3=0 | F2=F4=0", lambda v: v.fnz(9) and v.fz(10),
       "F9 ≠ 0 and F10 = 0", "§6.2 Property 8.1"),
    _P("Property 8.2", ["R2.2"], "F1=F4=0 | F2=F3=0", lambda v: v.fz(9) and v.fnz(10),
       "F9 = 0 and F10 ≠ 0", "§6.2 Property 8.2"),
    _P("Lemma 6.1 (a=±b)", ["R1"], "", lambda v: v.fz(*range(1, 9)),
       "F1..F8 = 0 under every operator", "§6.4 Lemma 6.1"),
    _P("Lemma 6.1 (a≠±b)", ["R2.1", "R2.2", "R3"], "", lambda v: v.fnz(*range(1, 9)),
       "F1..F8 ≠ 0 under a generic operator", "§6.4 Lemma 6.1"),
    _P("Lemma 6.2", ["R3"], "F2=F4=0",
       lambda v: not v.fz(9, 10) and not (v.fnz(9) and v.fz(10)),
       "the Property 7.2 and 8.1 conclusions both fail", "§6.4 Lemma 6.2"),
    _P("Inequality-1", ["L(a,b,a)", "L(0,b,b)"], "F1=0 | F2=0 | F3=0 | F4=0 | F5=0 | F6=0 | F7=0 | F8=0",
       lambda v: v.pairs_nonzero(1, 3, 5, 7),
       "|F_i|+|F_i+1| ≠ 0 for i = 1, 3, 5, 7", "Appendix A.2.3 inequality"),
    _P("Inequality-1 (any operator)", ["L(a,b,a)", "L(0,b,b)"], "", lambda v: v.pairs_nonzero(1, 3, 5, 7),
       "|F_i|+|F_i+1| ≠ 0 for i = 1, 3, 5, 7", "Appendix A.2.3 inequality"),
    _P("Inequality-1 broken (generic L)", ["L generic"], "", lambda v: v.fz(1, 2),
       "F1 = F2 = 0 with det α ≠ 0", "Appendix A.2.4",
       construction=AlphaRatioPremise(
           "α1=0, α3² = (a²−c²)(c²−b²)/(c(a²−b²))·α4²",
           lambda a, b, c: (a * a - c * c) * (c * c - b * b) / (c * (a * a - b * b)))),
    _P("Inequality-1 broken (L(0,b,c))", ["L(0,b,c)"], "", lambda v: v.fz(1, 2),
       "F1 = F2 = 0 with det α ≠ 0", "Appendix A.3.3",
       construction=AlphaRatioPremise(
           "α1=0, α3² = c(c²−b²)/b²·α4²",
           lambda a, b, c: c * (c * c - b * b) / (b * b))),
    _P("L0_5p3 orbit facts", ["L0_5p3"], "", lambda v: (
        v.sig.i_zero and v.dz(1, 2, 3) and v.fz(1, 2) and v.pairs_nonzero(3, 5, 7) and v.feq(9, 10)
        and abs(v.inv.F[2] * v.inv.F[3] - v.inv.F[8] ** 2) <= v.tol * v.s4 ** 2),
       "I = D = 0, F1 = F2 = 0, other pairs nonzero, F9 = F10, F3F4 = F9²", "§7.3"),
    _P("L0_7p1 orbit facts", ["L0_7p1"], "", lambda v: v.sig.i_zero and v.pairs_nonzero(1, 3, 5, 7),
       "I = 0 and no F pair vanishes together", "§7.4"),
)

PROPERTY_BY_NAME = {c.name: c for c in PROPERTIES}


def _quad_zero(x, p, tol=DEFAULT_TOL):
    m = max([1.0] + [abs(v) for v in p.values])
    return abs(x) <= tol * m * m


# ---- reports ------------------------------------------------------------------

def _c2(z):
    return [float(np.real(z)), float(np.imag(z))]


def _mat(m):
    return [[_c2(z) for z in row] for row in m]


@dataclass
class OrbitReport:
    property: str
    citation: str
    trials: int = 0
    violations: int = 0
    first_violation: dict = None
    stats: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.violations == 0

    def record(self, ok, psi=None, op=None, p=None):
        self.trials += 1
        if not ok:
            self.violations += 1
            if self.first_violation is None:
                doc = {}
                if p is not None:
                    doc["params"] = p.to_json()
                if psi is not None:
                    doc["state"] = [_c2(z) for z in psi]
                if op is not None:
                    doc["quad"] = [_mat(m) for m in op.mats]
                self.first_violation = doc

    def to_dict(self):
        doc = {"property": self.property, "citation": self.citation, "trials": self.trials,
               "violations": self.violations, "firstViolation": self.first_violation}
        if self.stats:
            doc["stats"] = self.stats
        return doc


def trial_rng(seed: int, trial: int, name: str):
    return np.random.default_rng(np.random.SeedSequence([seed, trial, zlib.crc32(name.encode())]))


def _context_for(check: PropertyCheck, p: FamilyParams):
    row = classify_params(p).id
    for name in check.contexts:
        if row in CTX[name].rows:
            return CTX[name]
    raise NotApplicable(f"{check.name} does not apply to {p} (class {row})")


def run_property(check: PropertyCheck, family: FamilyParams = None, trials=200, seed=0,
                 tol=DEFAULT_TOL, contexts=None) -> OrbitReport:
    """Push representatives through premise-satisfying operators and test the conclusion.

    With ``family`` the same parameters are used for every trial; otherwise
    each trial draws a subfamily from the check's applicability list.
    ``contexts`` overrides that list, which is how separation arguments run a
    conclusion on a subfamily it is not meant to hold for.
    """
    rep = OrbitReport(check.name, check.citation)
    ctx_fixed = _context_for(check, family) if family is not None else None
    names = tuple(contexts) if contexts is not None else check.contexts
    for t in range(trials):
        rng = trial_rng(seed, t, check.name)
        if ctx_fixed is not None:
            ctx, p = ctx_fixed, family
        else:
            ctx = CTX[names[rng.integers(len(names))]]
            row = ctx.rows[rng.integers(len(ctx.rows))]
            p = sample_row_params(row, rng)
        premise = check.premise_for(ctx)
        # unit determinants keep the state norm, and so the zero threshold, moderate
        forced = {} if premise is None else premise.forced(p, rng)
        op = _quad_with(rng, forced, sl=True, max_cond=getattr(premise, "max_cond", MAX_COND))
        psi = apply_quad(op, make_representative(p))
        rep.record(bool(check.conclusion(View(psi, p, tol))), psi, op, p)
    return rep


# ---- transformation law of I -----------------------------------------------------

def check_iv0(trials=1000, seed=0, mode="general", rel_tol=None) -> OrbitReport:
    """|I(op psi)| = |T I(psi)| on random pairs; the signed ratio is only recorded."""
    rel_tol = rel_tol or (1e-9 if mode == "sl" else 1e-8)
    rep = OrbitReport(f"IV0 ({mode})", "transformation law of I")
    ratios = []
    for t in range(trials):
        rng = trial_rng(seed, t, "iv0-" + mode)
        psi = random_state(rng)
        op = random_quad(rng, sl=(mode == "sl"))
        before, after = invariant_I(psi), invariant_I(apply_quad(op, psi))
        want = before * op.det_factors().T
        ok = abs(abs(after) - abs(want)) <= rel_tol * max(abs(want), 1e-300)
        rep.record(ok, psi, op)
        if abs(want) > 1e-12:
            ratios.append(after / want)
    r = np.array(ratios)
    rep.stats = {
        "signedRatioMean": _c2(r.mean()) if r.size else None,
        "signedRatioMaxDevFromPlusOne": float(np.max(np.abs(r - 1))) if r.size else None,
        "signedRatioMaxDevFromMinusOne": float(np.min(np.abs(r + 1))) if r.size else None,
    }
    return rep


def check_iv0_named(name="GHZ", trials=100, seed=0, rel_tol=1e-9) -> OrbitReport:
    """|I| is constant along the SL orbit of a named state."""
    rep = OrbitReport(f"IV0 (sl, {name})", "|I| constant under unit-determinant operators")
    psi = named_state(name)
    ref = abs(invariant_I(psi))
    for t in range(trials):
        op = random_quad(trial_rng(seed, t, "iv0-named-" + name), sl=True)
        got = abs(invariant_I(apply_quad(op, psi)))
        rep.record(abs(got - ref) <= rel_tol * max(ref, 1.0), psi, op)
    return rep


# ---- table fidelity ----------------------------------------------------------------

def table_fidelity(trials=100, seed=0, tol=DEFAULT_TOL, rows=None) -> list:
    """Each table row's (I, D1, D2, D3) pattern, plus F facts, along random SL orbits.

    A Δ cell passes only if at least one draw made it nonzero.
    """
    reports = []
    for row_id in rows or ROW_BY_ID:
        row = ROW_BY_ID[row_id]
        rep = OrbitReport(f"table row {row_id}", row.label.citation)
        seen_nonzero = [False] * 4
        for t in range(trials):
            rng = trial_rng(seed, t, "table-" + row_id)
            p = sample_row_params(row_id, rng)
            op = random_quad(rng, sl=True)
            psi = apply_quad(op, make_representative(p))
            s = signature(psi, tol)
            flags = (s.i_zero,) + s.d_zero
            for k, z in enumerate(flags):
                if not z:
                    seen_nonzero[k] = True
            rep.record(row.template_matches(s) and row.f_matches(s.f_zero), psi, op, p)
        unseen = [("I", "D1", "D2", "D3")[k] for k, cell in enumerate(row.expected)
                  if cell == "Δ" and not seen_nonzero[k]]
        rep.stats = {"deltaUnwitnessed": unseen}
        if unseen:
            rep.violations += 1
        reports.append(rep)
    return reports


# ---- closed forms ---------------------------------------------------------------------

def closed_form_sweep(draws=100, seed=0, rel_tol=None) -> list:
    """Closed-form I, D, F against direct evaluation (identity for representatives, random ops for orbits)."""
    reports = []
    for form in REPRESENTATIVE_FORMS + ORBIT_FORMS:
        bound = rel_tol or (1e-9 if form.orbit else 1e-10)
        rep = OrbitReport(f"closed form: {form.name}", form.name)
        worst = 0.0
        for t in range(draws):
            rng = trial_rng(seed, t, "cf-" + form.name)
            vals = form.sample(rng)
            op = random_quad(rng) if form.orbit else QuadOperator.identity()
            p = FamilyParams(form.family, vals)
            psi = apply_quad(op, make_representative(p))
            err = max(compare(form, vals, psi, OpContext(op)).values())
            worst = max(worst, err)
            rep.record(err <= bound, psi, op, p)
        rep.stats = {"maxRelativeError": worst, "bound": bound}
        reports.append(rep)
    return reports


# ---- separations ------------------------------------------------------------------------

@dataclass
class Separation:
    name: str
    citation: str
    holds_on: OrbitReport
    fails_on: OrbitReport

    @property
    def ok(self):
        return self.holds_on.violations == 0 and self.fails_on.violations > 0

    def to_dict(self):
        return {"property": self.name, "citation": self.citation, "ok": self.ok,
                "reference": self.holds_on.to_dict(), "separated": self.fails_on.to_dict()}


def _fixed_f(name, citation, p, predicate):
    rep = OrbitReport(name, citation)
    psi = make_representative(p)
    rep.record(predicate(View(psi, p, DEFAULT_TOL)), psi, None, p)
    return rep


def separations(trials=50, seed=0) -> list:
    """Predicates that hold on one class and fail on its neighbour's representative."""
    p22, p72, p11 = (PROPERTY_BY_NAME[k] for k in ("Property 2.2", "Property 7.2", "Property 1.1"))
    out = [
        Separation("V3 vs V4 by Property 2.2", "§5",
                   run_property(p22, trials=trials, seed=seed, contexts=["V4"]),
                   run_property(p22, trials=trials, seed=seed, contexts=["V3"])),
        Separation("R2.1 vs R2.2 by Property 7.2", "§6.2",
                   run_property(p72, trials=trials, seed=seed, contexts=["R2.1"]),
                   run_property(p72, trials=trials, seed=seed, contexts=["R2.2"])),
        Separation("G(a,b,b,a) vs G(a,0,0,d) by Property 1.1", "§3.2.1",
                   run_property(p11, trials=trials, seed=seed, contexts=["G(a,0,0,d)"]),
                   run_property(p11, trials=trials, seed=seed, contexts=["G(a,b,b,a)"])),
    ]
    rng = np.random.default_rng(seed)
    a, c = (sample_row_params("B1.5", rng), sample_row_params("B5.1", rng))
    out.append(Separation(
        "B1.5 vs B5.1 by F10", "Appendix A.1 Remark 1",
        _fixed_f("all F vanish on B1.5", "B1.5", a, lambda v: v.fz(*range(1, 11))),
        _fixed_f("all F vanish on B5.1", "B5.1", c, lambda v: v.fz(*range(1, 11))),
    ))
    return out


def b51_f10(c) -> complex:
    """F10 of L(0,0,c); it equals c⁴."""
    return complex(invariant_vector(make_representative(params("Labc2", 0, 0, c))).F[9])


# ---- the whole suite ------------------------------------------------------------------------

def run_suite(seed=0, trials=200, table_trials=None, iv0_trials=None):
    """Every check once; yields JSON-ready dicts in a fixed order."""
    table_trials = table_trials or min(trials, 100)
    iv0_trials = iv0_trials or max(trials, 1000)
    yield check_iv0(iv0_trials, seed).to_dict()
    yield check_iv0(iv0_trials, seed, mode="sl").to_dict()
    yield check_iv0_named("GHZ", trials, seed).to_dict()
    for check in PROPERTIES:
        yield run_property(check, trials=trials, seed=seed).to_dict()
    for rep in table_fidelity(table_trials, seed):
        yield rep.to_dict()
    for rep in closed_form_sweep(min(trials, 100), seed):
        yield rep.to_dict()
    for sep in separations(min(trials, 50), seed):
        doc = sep.to_dict()
        doc["violations"] = 0 if sep.ok else 1
        yield doc


__all__ = [
    "CTX", "PROPERTIES", "PROPERTY_BY_NAME", "NotApplicable", "OrbitReport", "PremiseInfeasible",
    "PropertyCheck", "Separation", "UnclassifiableParams", "check_iv0", "check_iv0_named",
    "closed_form_sweep", "run_property", "run_suite", "sample_quad", "separations", "table_fidelity",
]
