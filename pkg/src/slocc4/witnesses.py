"""Catalog of explicit local-operator equivalences between representatives.

Every record states ``source = op · target``.  Parameters and operator entries
are short expressions in the record's free parameters, evaluated in a small
fixed namespace so the catalog stays auditable as plain text.
"""
import json
from dataclasses import dataclass, field

import numpy as np

from .classifier import UnclassifiableParams, classify_params, verify_class_membership
from .core import (
    DEFAULT_TOL,
    I2,
    SX,
    SY,
    SZ,
    QuadOperator,
    apply_quad,
    fit_scalar,
    states_equal,
    states_proportional,
)
from .families import FamilyParams, make_representative, named_state
from .invariants import invariant_I

CATALOG_VERSION = "1"


def _diag(x, y):
    return np.diag([complex(x), complex(y)])


_BASE_NS = {
    "i": 1j,
    "r2": np.sqrt(2.0),
    "r3": np.sqrt(3.0),
    "diag": _diag,
    "X": SX,
    "Y": SY,
    "Z": SZ,
    "I": I2,
}


def _namespace(values: dict, branch: int):
    ns = dict(_BASE_NS)
    ns["sqrt"] = lambda x: branch * np.sqrt(complex(x))
    ns.update(values)
    return ns


def _eval(expr, ns):
    return eval(expr, {"__builtins__": {}}, ns)


@dataclass(frozen=True)
class Endpoint:
    """A family representative with expression-valued parameters, or a named state."""

    family: str
    params: tuple = ()

    def state(self, ns) -> np.ndarray:
        if self.family.startswith("named:"):
            return named_state(self.family[6:])
        return make_representative(self.instantiate(ns))

    def instantiate(self, ns):
        if self.is_named:
            return None
        return FamilyParams(self.family, tuple(complex(_eval(e, ns)) for e in self.params))

    @property
    def is_named(self):
        return self.family.startswith("named:")

    def describe(self):
        if self.is_named:
            return self.family[6:]
        return f"{self.family}({', '.join(self.params)})"


@dataclass(frozen=True)
class WitnessRecord:
    id: str
    citation: str
    source: Endpoint
    target: Endpoint
    op: tuple
    free: tuple = ()
    domain: str = ""
    orientation: str = "printed"
    expect: str = "exact"
    printed_op: tuple = None
    note: str = ""

    def operator(self, values: dict, branch: int = 1) -> QuadOperator:
        ns = _namespace(values, branch)
        return QuadOperator(*(np.array(_eval(e, ns), dtype=complex) for e in self.op))

    def states(self, values: dict, branch: int = 1):
        ns = _namespace(values, branch)
        return self.source.state(ns), self.target.state(ns)

    def to_dict(self, values=None):
        values = values if values is not None else {k: REFERENCE_VALUE for k in self.free}
        op = self.operator(values)
        return {
            "id": self.id,
            "citation": self.citation,
            "source": _endpoint_doc(self.source, values),
            "target": _endpoint_doc(self.target, values),
            "op": list(self.op),
            "matrices": [_mat_doc(m) for m in op.mats],
            "at": {k: [v.real, v.imag] for k, v in values.items()},
            "free": list(self.free),
            "domain": self.domain,
            "orientation": self.orientation,
            "expect": self.expect,
            "printedOp": list(self.printed_op) if self.printed_op else None,
            "note": self.note,
        }


REFERENCE_VALUE = complex(0.6, 0.8)


def _mat_doc(m):
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def _endpoint_doc(e: Endpoint, values):
    doc = {"family": e.family, "params": list(e.params)}
    if not e.is_named:
        doc["at"] = e.instantiate(_namespace(values, 1)).to_json()["params"]
    return doc


# ---- the catalog ------------------------------------------------------------

SCALE_A1 = ("diag(sqrt(a),1)", "diag(1,sqrt(a))", "diag(1,sqrt(a))", "diag(sqrt(a),1)")
SCALE_A3 = ("diag(sqrt(a),1)", "diag(sqrt(a),1)", "diag(1,sqrt(a))", "diag(1,sqrt(a))")
SCALE_B1 = ("diag(1,a)", "diag(a,1)", "I", "I")
SCALE_B2 = ("diag(1,a)", "I", "diag(a,1)", "I")
SCALE_B3 = ("I", "diag(a,1)", "diag(a,1)", "I")
SCALE_B5 = ("diag(1,sqrt(b))", "diag(sqrt(b),1)", "diag(sqrt(b),1)", "diag(1,sqrt(b))")
SCALE_R = ("diag(1,a)", "diag(1,a)", "diag(a,1)", "diag(1,1/a)")
SCALE_R_B = ("diag(1,b)", "diag(1,b)", "diag(b,1)", "diag(1,1/b)")
ZIIZ = ("Z", "I", "I", "Z")
IZIMZ = ("I", "Z", "I", "-Z")


def _w(id, citation, source, target, op, free=(), domain="", **kw):
    def ep(text):
        fam, _, rest = text.partition("(")
        if fam.startswith("named:"):
            return Endpoint(fam)
        return Endpoint(fam, tuple(x.strip() for x in rest.rstrip(")").split(",") if x.strip()))

    return WitnessRecord(id, citation, ep(source), ep(target), tuple(op), tuple(free), domain, **kw)


def _pm(base_id, citation, source, target, op, free, domain, **kw):
    """Two records for the upper and lower sign of a ±-family."""
    out = []
    for tag, s in (("plus", "+"), ("minus", "-")):
        out.append(_w(f"{base_id}-{tag}", citation, source.replace("±", s), target.replace("±", s),
                      op, free, domain, **kw))
    return out


def _build():
    G, L, V, R = "Gabcd", "Labc2", "La2b2", "Lab3"
    rec = [
        # b=c=0 subfamily and its relabelings
        _w("sec3.1-item1", "§3.1 item (1)", f"{G}(b,0,0,-c)", f"{G}(0,b,c,0)", ("X", "I", "I", "X"),
           "bc", "b,c ≠ 0", orientation="derived"),
        _w("sec3.1-item2", "§3.1 item (2)", f"{G}(0,0,a,-b)", f"{G}(a,b,0,0)", ("I", "Y", "Y", "I"),
           "ab", "a,b ≠ 0", orientation="derived"),
        _w("sec3.1-item3", "§3.1 item (3)", f"{G}(0,a,0,c)", f"{G}(a,0,c,0)", ("I", "X", "I", "X"),
           "ac", "a,c ≠ 0", orientation="derived"),
        _w("sec3.1-item4", "§3.1 item (4)", f"{G}(2*a,0,2*c,0)", f"{G}(-2*a,2*c,0,0)",
           ("diag(i,1)", "diag(-i,1)", "diag(i,1)", "diag(i,-1)"), "ac", "a,c ≠ 0"),
        *_pm("sec3.1-A1.2-scale", "§3.1 class A1.2", f"{G}(a,0,0,±i*a)", f"{G}(1,0,0,±i)",
             SCALE_A1, "a", "a ≠ 0"),
        _w("sec3.1-A1.2-swap", "§3.1 class A1.2", f"{G}(1,0,0,-i)", f"{G}(1,0,0,i)",
           ("diag(i,1)", "diag(1,-i)", "diag(-1,1)", "I")),
        _w("sec3.1-phi4", "§3.1 class A1.2, the phi4 state", f"{G}(1,0,0,i)", "named:phi4",
           ("diag(i,1)", "I", "diag(1-i,1)", "diag(1,-(1+i))"), orientation="derived"),
        # a=d with b=±c
        _w("sec3.2.1-item1", "§3.2.1 item (1)", f"{G}(b,a,-a,b)", f"{G}(a,b,b,-a)", ("I", "X", "I", "X"),
           "ab", "a,b ≠ 0", orientation="derived"),
        _w("sec3.2.1-item2", "§3.2.1 item (2)", f"{G}(a,b,b,a)", f"{G}(a,b,-b,-a)", ("I", "I", "X", "X"),
           "ab", "a,b ≠ 0", orientation="derived"),
        *_pm("sec3.2.1-A2.1-scale", "§3.2.1 class A2.1", f"{G}(a,±i*a,±i*a,a)", f"{G}(1,±i,±i,1)",
             SCALE_A1, "a", "a ≠ 0"),
        _w("sec3.2.1-A2.1-swap", "§3.2.1 class A2.1", f"{G}(1,-i,-i,1)", f"{G}(1,i,i,1)",
           ("Z", "Z", "I", "I")),
        *_pm("sec3.2.1-A3.1-scale", "§3.2.1 class A3.1", f"{G}(a,±i*a,-(±i)*a,a)", f"{G}(1,±i,-(±i),1)",
             SCALE_A3, "a", "a ≠ 0"),
        _w("sec3.2.1-A3.1-swap", "§3.2.1 class A3.1", f"{G}(1,i,-i,1)", f"{G}(1,-i,i,1)",
           ("Z", "Z", "I", "I")),
        _w("sec3.2.3", "§3.2.3", f"{G}(a,a,b,b)", f"{G}(a,b,a,b)",
           ("diag(i,1)", "diag(-i,1)", "diag(-i,1)", "diag(i,1)"), "ab", "a,b ≠ 0"),
        # generic relabelings
        _w("sec3.3-item1", "§3.3 item (1)", f"{G}(b,a,d,b)", f"{G}(a,b,b,d)", ("X", "I", "X", "I"),
           "abd", "a,b,d ≠ 0", orientation="derived"),
        _w("sec3.3-item2", "§3.3 item (2)", f"{G}(b,a,-d,b)", f"{G}(a,b,-b,d)", ("X", "I", "I", "X"),
           "abd", "a,b,d ≠ 0", orientation="derived"),
        _w("sec3.3-item3", "§3.3 item (3)", f"{G}(a,b,-c,a)", f"{G}(a,b,c,-a)", ("I", "I", "X", "X"),
           "abc", "a,b,c ≠ 0", orientation="derived"),
        # Labc2 with c=0
        _w("sec4.1-B1.1", "§4.1 class B1.1", f"{L}(a,a,0)", f"{L}(1,1,0)", SCALE_B1, "a", "a ≠ 0"),
        _w("sec4.1-B1.2", "§4.1 class B1.2", f"{L}(a,-a,0)", f"{L}(1,-1,0)", SCALE_B1, "a", "a ≠ 0"),
        *_pm("sec4.1-B1.3-scale", "§4.1 class B1.3", f"{L}(a,±i*a,0)", f"{L}(1,±i,0)",
             SCALE_B1, "a", "a ≠ 0"),
        _w("sec4.1-B1.3-swap", "§4.1 class B1.3", f"{L}(1,i,0)", f"{L}(1,-i,0)",
           ("diag(1,i)", "diag(-i,1)", "diag(-1,1)", "I")),
        _w("sec4.1-B1.5-scale-a", "§4.1 class B1.5", f"{L}(a,0,0)", f"{L}(1,0,0)", SCALE_B1, "a", "a ≠ 0"),
        _w("sec4.1-B1.5-scale-b", "§4.1 class B1.5", f"{L}(0,a,0)", f"{L}(0,1,0)", SCALE_B1, "a", "a ≠ 0"),
        _w("sec4.1-B1.5-swap", "§4.1 class B1.5", f"{L}(1,0,0)", f"{L}(0,1,0)", ZIIZ),
        # Labc2 with abc≠0
        *_pm("sec4.2.1-B2.1-scale", "§4.2.1 class B2.1", f"{L}(a,a,±a)", f"{L}(1,1,±1)",
             SCALE_B2, "a", "a ≠ 0"),
        _w("sec4.2.1-B2.1-swap", "§4.2.1 class B2.1", f"{L}(1,1,1)", f"{L}(1,1,-1)", ZIIZ),
        *_pm("sec4.2.1-B2.2-scale", "§4.2.1 class B2.2", f"{L}(a,a,±i*a)", f"{L}(1,1,±i)",
             SCALE_B2, "a", "a ≠ 0"),
        _w("sec4.2.1-B2.2-swap", "§4.2.1 class B2.2", f"{L}(1,1,i)", f"{L}(1,1,-i)", ZIIZ),
        *_pm("sec4.2.2-B3.1-scale", "§4.2.2 class B3.1", f"{L}(a,-a,±a)", f"{L}(1,-1,±1)",
             SCALE_B3, "a", "a ≠ 0"),
        _w("sec4.2.2-B3.1-swap", "§4.2.2 class B3.1", f"{L}(1,-1,1)", f"{L}(1,-1,-1)", IZIMZ),
        *_pm("sec4.2.2-B3.2-scale", "§4.2.2 class B3.2", f"{L}(a,-a,±i*a)", f"{L}(1,-1,±i)",
             SCALE_B3, "a", "a ≠ 0"),
        _w("sec4.2.2-B3.2-swap", "§4.2.2 class B3.2", f"{L}(1,-1,i)", f"{L}(1,-1,-i)", IZIMZ),
        _w("sec4.2.3-pq", "§4.2.3", f"{L}(a,b,-a)", f"{L}(-a,-b,-a)", ("-Z", "Z", "I", "I"),
           "ab", "a,b ≠ 0"),
        _w("sec4.2.3-c-eq-b", "§4.2.3", f"{L}(b,a,a)", f"{L}(a,b,-a)", ("I", "Z", "Z", "I"),
           "ab", "a,b ≠ 0", orientation="derived"),
        _w("sec4.2.3-c-eq-mb", "§4.2.3", f"{L}(b,a,-a)", f"{L}(a,b,a)", ("I", "Z", "Z", "I"),
           "ab", "a,b ≠ 0", orientation="derived"),
        # Labc2 with ab=0
        _w("sec4.3-ab0", "§4.3", f"{L}(a,0,c)", f"{L}(0,a,c)",
           ("diag(i,1)", "diag(i,1)", "diag(-i,1)", "diag(-i,1)"), "ac", "a,c ≠ 0"),
        _w("sec4.3-b-minus-c", "§4.3", f"{L}(0,b,-b)", f"{L}(0,-b,-b)", ("I", "I", "Z", "-Z"),
           "b", "b ≠ 0"),
        _w("sec4.3-B5.1", "§4.3 class B5.1", f"{L}(0,0,c)", f"{L}(0,0,1)",
           ("I", "diag(c,1)", "diag(c,1)", "I"), "c", "c ≠ 0"),
        _w("sec4.3-B5.2", "§4.3 class B5.2", f"{L}(0,b,b)", f"{L}(0,1,1)", SCALE_B5, "b", "b ≠ 0"),
        *_pm("sec4.3-B5.3-scale", "§4.3 class B5.3", f"{L}(0,b,±i*b/r2)", f"{L}(0,1,±i/r2)",
             SCALE_B5, "b", "b ≠ 0"),
        _w("sec4.3-B5.3-swap", "§4.3 class B5.3", f"{L}(0,1,i/r2)", f"{L}(0,1,-i/r2)",
           ("diag(1,i)", "diag(i,1)", "diag(-i,1)", "diag(1,-i)"),
           printed_op=("Z", "diag(i,1)", "diag(-i,1)", "diag(1,-i)"),
           note="printed first factor does not replay; diag(1,i) does"),
        # La2b2
        _w("sec5-V1-plus", "§5 class V1", f"{V}(a,a)", f"{V}(1,1)", SCALE_B2, "a", "a ≠ 0"),
        _w("sec5-V1-minus", "§5 class V1", f"{V}(a,-a)", f"{V}(1,1)",
           ("diag(-i,a)", "diag(i,1)", "diag(-a*i,1)", "diag(i,1)"), "a", "a ≠ 0"),
        *_pm("sec5-V2-scale", "§5 class V2", f"{V}(a,±i*a)", f"{V}(1,±i)", SCALE_B2, "a", "a ≠ 0"),
        _w("sec5-V2-swap", "§5 class V2", f"{V}(1,-i)", f"{V}(1,i)",
           ("diag(1,i)", "diag(i,1)", "diag(-i,1)", "diag(1,-i)")),
        _w("sec5-V4-scale-a", "§5 class V4", f"{V}(a,0)", f"{V}(1,0)", SCALE_B2, "a", "a ≠ 0"),
        _w("sec5-V4-scale-b", "§5 class V4", f"{V}(0,b)", f"{V}(1,0)",
           ("diag(1,b)", "X", "diag(b,1)", "X"), "b", "b ≠ 0"),
        _w("sec5-V4-alt", "§5 class V4", f"{V}(0,1)", f"{V}(1,0)", ("I", "X", "I", "X")),
        # Lab3
        _w("sec6.1-R1.1", "§6.1 class R1.1", f"{R}(0,0)", "named:W", ("I", "I", "X", "X"),
           expect="proportional", note="holds up to the scalar i/sqrt(2)"),
        _w("sec6.1-R1.2", "§6.1 class R1.2", f"{R}(a,a)", f"{R}(1,1)", SCALE_R, "a", "a ≠ 0"),
        _w("sec6.1-R1.3", "§6.1 class R1.3", f"{R}(a,-a)", f"{R}(1,-1)", SCALE_R, "a", "a ≠ 0"),
        _w("sec6.2-R2.1", "§6.2 class R2.1", f"{R}(0,b)", f"{R}(0,1)", SCALE_R_B, "b", "b ≠ 0"),
        _w("sec6.2-R2.2", "§6.2 class R2.2", f"{R}(a,0)", f"{R}(1,0)", SCALE_R, "a", "a ≠ 0"),
        *_pm("sec6.3-R3.2-scale", "§6.3 class R3.2", f"{R}(a,±r3*i*a)", f"{R}(1,±r3*i)",
             SCALE_R, "a", "a ≠ 0"),
        # remaining families
        _w("sec7.1-La4-scale", "§7.1", "La4(a)", "La4(1)",
           ("diag(1,a**2)", "diag(1,a)", "diag(1,1/a**2)", "diag(a,1)"), "a", "a ≠ 0"),
        _w("sec7.2-La203-scale", "§7.2", "La2_0_3p1(a)", "La2_0_3p1(1)",
           ("diag(sqrt(a),a**2)", "diag(1/sqrt(a),1/a)", "diag(sqrt(a),1)", "diag(sqrt(a),1)"),
           "a", "a ≠ 0"),
        _w("appA.1-B1.5", "Appendix A.1", f"{L}(0,a,0)", f"{L}(a,0,0)", ("I", "Z", "Z", "I"),
           "a", "a ≠ 0"),
    ]
    ids = [r.id for r in rec]
    assert len(ids) == len(set(ids)), "duplicate witness ids"
    return tuple(rec)


_CATALOG = _build()
_BY_ID = {r.id: r for r in _CATALOG}


def catalog() -> list:
    return list(_CATALOG)


def get_witness(id: str) -> WitnessRecord:
    return _BY_ID[id]


def identity_witness(p: FamilyParams) -> WitnessRecord:
    args = ",".join(repr(complex(v)) for v in p.values)
    end = Endpoint(p.family.value, tuple(repr(complex(v)) for v in p.values))
    return WitnessRecord(f"identity-{p.family.value}({args})", "identity", end, end, ("I", "I", "I", "I"))


def catalog_json() -> str:
    return json.dumps({"version": CATALOG_VERSION, "records": [r.to_dict() for r in _CATALOG]},
                      ensure_ascii=False, indent=1)


# ---- replay -------------------------------------------------------------------

def _draw(rng):
    while True:
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(z) > 0.2:
            return z


@dataclass
class SampleResult:
    status: str  # "exact", "proportional" or "failed"
    values: dict
    branch: int = 1
    lam: complex = None

    def to_dict(self):
        doc = {"status": self.status, "branch": self.branch,
               "at": {k: [v.real, v.imag] for k, v in self.values.items()}}
        if self.lam is not None:
            doc["lambda"] = [self.lam.real, self.lam.imag]
        return doc


@dataclass
class WitnessReport:
    id: str
    samples: list = field(default_factory=list)

    @property
    def status(self):
        kinds = {s.status for s in self.samples}
        if "failed" in kinds:
            return "failed"
        return "proportional" if "proportional" in kinds else "exact"

    @property
    def ok(self):
        return self.status != "failed"

    def to_dict(self):
        doc = {"id": self.id, "status": self.status, "samples": len(self.samples),
               "counts": {k: sum(s.status == k for s in self.samples)
                          for k in ("exact", "proportional", "failed")}}
        lams = [s.lam for s in self.samples if s.lam is not None]
        if lams:
            doc["lambda"] = [lams[0].real, lams[0].imag]
        return doc


def _replay(w, values, branch, tol, op=None):
    op = op or w.operator(values, branch)
    src, tgt = w.states(values, branch)
    out = apply_quad(op, tgt)
    if states_equal(out, src, tol):
        return SampleResult("exact", values, branch)
    if states_proportional(src, out, tol):
        return SampleResult("proportional", values, branch, fit_scalar(src, out))
    return SampleResult("failed", values, branch)


def verify_witness(w: WitnessRecord, samples: int = 20, tol=DEFAULT_TOL, seed: int = 0) -> WitnessReport:
    """Replay ``source = op · target`` at random points of the record's domain.

    A failing sample is retried with the other square-root branch before it
    is reported as failed.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    report = WitnessReport(w.id)
    for _ in range(samples):
        values = {k: _draw(rng) for k in w.free}
        res = _replay(w, values, 1, tol)
        if res.status == "failed":
            alt = _replay(w, values, -1, tol)
            if alt.status != "failed":
                res = alt
        report.samples.append(res)
    return report


def replay_printed(w: WitnessRecord, tol=DEFAULT_TOL, seed: int = 0) -> SampleResult:
    """Replay the operator exactly as printed when the catalog had to correct it."""
    if w.printed_op is None:
        raise ValueError(f"{w.id} has no separate printed operator")
    rng = np.random.default_rng(seed)
    values = {k: _draw(rng) for k in w.free}
    ns = _namespace(values, 1)
    op = QuadOperator(*(np.array(_eval(e, ns), dtype=complex) for e in w.printed_op))
    return _replay(w, values, 1, tol, op=op)


def iv0_ratio(w: WitnessRecord, values: dict, branch: int = 1):
    """(I(source), T * I(target)) for one instantiation."""
    op = w.operator(values, branch)
    src, tgt = w.states(values, branch)
    return invariant_I(src), op.det_factors().T * invariant_I(tgt)


def endpoint_labels(w: WitnessRecord, values: dict):
    """Class labels of both endpoints (None for a named state)."""
    ns = _namespace(values, 1)
    out = []
    for e in (w.source, w.target):
        out.append(None if e.is_named else classify_params(e.instantiate(ns)).id)
    return tuple(out)


def class_preserved(w: WitnessRecord, values: dict, tol=DEFAULT_TOL) -> bool:
    try:
        src_label, tgt_label = endpoint_labels(w, values)
    except UnclassifiableParams:
        return False
    if src_label and tgt_label:
        return src_label == tgt_label
    label = src_label or tgt_label
    src, tgt = w.states(values)
    named = tgt if src_label else src
    return verify_class_membership(label, named, tol)
