"""Closed-form expressions for I, D and F on representatives and their orbits.

Two flavors are kept side by side.  ``printed`` transcribes the expression as
it is usually quoted; ``exact`` is what direct polynomial evaluation actually
gives.  Where they differ the form lists the affected quantities in
``known_typos`` so tests can check both that the exact form is right and that
the printed one really is off.

Orbit forms take the operator entries with 1-based names: ``E.al[1]`` is the
(1,1) entry of alpha, ``E.al[2]`` its (1,2) entry, and so on row-major.
"""
from dataclasses import dataclass, field

from .core import QuadOperator
from .families import FamilyId
from .invariants import invariant_vector, zero_scale

_G, _L, _V, _R = FamilyId.Gabcd, FamilyId.Labc2, FamilyId.La2b2, FamilyId.Lab3


class OpContext:
    """Operator entries and determinant factors in the names the formulas use."""

    def __init__(self, op: QuadOperator):
        rows = op.entries()
        self.al, self.be, self.ga, self.de = ((0,) + tuple(r) for r in rows)
        self.da, self.db, self.dc, self.dd = op.dets()
        self.T, self.P, self.Q, self.R, self.S = op.det_factors()


def _base(E):
    al, be, ga, de = E.al, E.be, E.ga, E.de
    return [
        al[1] ** 2 * al[2] ** 2 * E.P, al[3] ** 2 * al[4] ** 2 * E.P,
        be[1] ** 2 * be[2] ** 2 * E.Q, be[3] ** 2 * be[4] ** 2 * E.Q,
        ga[1] ** 2 * ga[2] ** 2 * E.R, ga[3] ** 2 * ga[4] ** 2 * E.R,
        de[1] ** 2 * de[2] ** 2 * E.S, de[3] ** 2 * de[4] ** 2 * E.S,
    ]


# (x1, x2) pairs per F index for the single-entry patterns; x1 is the entry
# whose vanishing kills F_i.
CA_PAIRS = (("al", 1, 2), ("al", 3, 4), ("be", 2, 1), ("be", 4, 3),
            ("ga", 2, 1), ("ga", 4, 3), ("de", 1, 2), ("de", 3, 4))
LAB3_PAIRS = (("al", 1, 2), ("al", 3, 4), ("be", 1, 2), ("be", 3, 4),
              ("ga", 2, 1), ("ga", 4, 3), ("de", 2, 1), ("de", 4, 3))
_FACTOR = ("P", "P", "Q", "Q", "R", "R", "S", "S")


def _quartic_entries(E, pairs):
    return [getattr(E, m)[i] ** 4 * getattr(E, f) for (m, i, _), f in zip(pairs, _FACTOR)]


def _mixed(E, pairs, u, v, factors=_FACTOR):
    out = []
    for (m, i, j), f in zip(pairs, factors):
        x1, x2 = getattr(E, m)[i], getattr(E, m)[j]
        out.append(x1 ** 2 * (u * x1 ** 2 + v * x2 ** 2) * getattr(E, f))
    return out


def _fdict(values, start=1):
    return {f"F{k}": v for k, v in enumerate(values, start)}


@dataclass(frozen=True)
class ClosedForm:
    name: str
    family: FamilyId
    sample: object  # rng -> parameter tuple inside the form's domain
    exact: object  # (vals) or (vals, E) -> dict
    printed: object = None
    known_typos: dict = field(default_factory=dict)
    orbit: bool = False

    def evaluate(self, vals, E=None, which="exact"):
        fn = self.exact if which == "exact" else (self.printed or self.exact)
        return fn(vals, E) if self.orbit else fn(vals)


def _r(rng):
    while True:
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(z) > 0.2:
            return z


# ---- values on the representatives themselves -------------------------------

def _g_rep(v):
    a, b, c, d = v
    f18 = (b * b - c * c) * (a * a - d * d) / 4
    return {
        "I": (a * a + b * b + c * c + d * d) / 2,
        "D1": (a * c + b * d) * (a * b + c * d) / 4,
        "D2": (a * a + b * b - c * c - d * d) * (-a * a + b * b - c * c + d * d) / 16,
        "D3": -(-a * c + b * d) * (a * b - c * d) / 4,
        **_fdict([f18] * 8), "F9": a * a * d * d, "F10": b * b * c * c,
    }


def _l_rep(v, printed=False):
    a, b, c = v
    k = (a * a - b * b) * c
    return {
        "I": (-1 if printed else 1) * (a * a + b * b + 2 * c * c) / 2,
        "D1": (a + b) ** 2 * c * c / 4,
        "D2": -((a * a - b * b) ** 2) / 16,
        "D3": (a - b) ** 2 * (c if printed else c * c) / 4,
        **_fdict([k, 0, 0, k, 0, k, k, 0]), "F9": a * a * b * b, "F10": c ** 4,
    }


def _v_rep(v):
    a, b = v
    return {**_fdict([4 * a * b, 0, 0, 0, 0, 4 * a * b, 0, 0]), "F9": a ** 4, "F10": b ** 4}


def _r_rep(v, printed=False):
    a, b = v
    k = (a * a - b * b) / 2
    return {
        "I": -(b * b + 3 * a * a) if printed else (3 * a * a + b * b) / 2,
        "D1": a * a * (a + b) ** 2 / 4,
        "D2": (a * a - b * b) ** 2 / 16,
        "D3": -a * a * (a - b) ** 2 / 4,
        **_fdict([k, 0, k, 0, 0, k, 0, k]), "F9": a ** 4, "F10": a * a * b * b,
    }


REPRESENTATIVE_FORMS = (
    ClosedForm("Gabcd representative", _G, lambda g: tuple(_r(g) for _ in range(4)), _g_rep),
    ClosedForm("Labc2 representative", _L, lambda g: tuple(_r(g) for _ in range(3)),
               _l_rep, lambda v: _l_rep(v, printed=True),
               {"I": "printed with an overall minus sign", "D3": "printed with c instead of c^2"}),
    ClosedForm("La2b2 representative", _V, lambda g: (_r(g), _r(g)), _v_rep),
    ClosedForm("Lab3 representative", _R, lambda g: (_r(g), _r(g)),
               _r_rep, lambda v: _r_rep(v, printed=True),
               {"I": "printed as -(b^2+3a^2); the value is (3a^2+b^2)/2"}),
)


# ---- values along orbits -----------------------------------------------------

def _f9_ab(E, s1, s2):
    """(al1 al4 be1 be4 - al2 al3 be2 be3)-type squares times det(gamma)^2 det(delta)^2."""
    al, be = E.al, E.be
    x = al[1] * al[4] * be[1] * be[4]
    y = al[2] * al[3] * be[2] * be[3]
    u = al[1] * al[4] * be[2] * be[3]
    w = al[2] * al[3] * be[1] * be[4]
    g = E.dc ** 2 * E.dd ** 2
    return (x - y) ** 2 * g * s1, (w - u) ** 2 * g * s2


def _orb_g_bc0(v, E):
    a, _, _, d = v
    k = a * a * d * d
    f9, f10 = _f9_ab(E, k, k)
    return {"I": (a * a + d * d) / 2 * E.T, "D1": 0, "D3": 0, **_fdict([k * x for x in _base(E)]),
            "F9": f9, "F10": f10}


def _orb_g_ad_bc(v, E, printed=False):
    a, b = v[0], v[1]
    k = (a * a - b * b) if printed else (a * a - b * b) ** 2
    return {"I": (a * a + b * b) * (1 if printed else E.T), "D2": 0, "D3": 0,
            **_fdict([k * x for x in _base(E)])}


def _orb_g_ad(v, E, printed=False):
    a, b, c, _ = v
    k = (a * a - b * b) * (a * a - c * c) ** (2 if printed else 1)
    return {"I": (2 * a * a + b * b + c * c) / 2 * E.T, **_fdict([k * x for x in _base(E)])}


def _orb_g_generic(v, E):
    a, b, c, d = v
    return {"I": (a * a + b * b + c * c + d * d) / 2 * E.T}


def _orb_v4(v, E):
    a = v[0]
    k = a ** 4
    f9, f10 = _f9_ab(E, k, k)
    return {**_fdict([k * x for x in _base(E)]), "F9": f9, "F10": f10}


def _a1_poly(E, a, b):
    al, be = E.al, E.be
    A2, B2 = a * a, b * b
    return (2 * (A2 + B2) * al[1] * al[3] * be[1] * be[3]
            + (A2 - B2) * (al[2] * al[3] * be[2] * be[3] + al[1] * al[4] * be[2] * be[3]
                           + al[2] * al[3] * be[1] * be[4] + al[1] * al[4] * be[1] * be[4])
            + 2 * (A2 + B2) * al[2] * al[4] * be[2] * be[4])


def _orb_l_c0(v, E, printed=False):
    a, b, _ = v
    al, ga, de = E.al, E.ga, E.de
    k = a * a * b * b
    f9, f10 = _f9_ab(E, k, k)
    d2 = (a * a - b * b) / 16 * E.da * E.db * E.dc ** 2 * E.dd ** 2 * _a1_poly(E, a, b)
    return {
        "I": (a * a + b * b) / 2 * E.T,
        "D1": a * b * (a - b) / 2 * al[1] * al[3] * ga[2] * ga[4] * E.da * E.db ** 2 * E.dc * E.dd ** 2,
        "D2": d2 if printed else -d2,
        "D3": -a * b * (a + b) / 2 * al[1] * al[3] * de[1] * de[3] * E.da * E.db ** 2 * E.dc ** 2 * E.dd,
        **_fdict([k * x for x in _base(E)]), "F9": f9, "F10": f10,
    }


def _sym8(p, q, a, c):
    """(a^2+c^2)(p1 p3 q1 q3 + p2 p4 q2 q4) + ac (four cross terms)."""
    return ((a * a + c * c) * (p[1] * p[3] * q[1] * q[3] + p[2] * p[4] * q[2] * q[4])
            + a * c * (p[2] * p[3] * q[2] * q[3] + p[1] * p[4] * q[2] * q[3]
                       + p[2] * p[3] * q[1] * q[4] + p[1] * p[4] * q[1] * q[4]))


def _orb_l_ab(v, E):
    a, _, c = v
    al, be, ga, de = E.al, E.be, E.ga, E.de
    k = (a * a - c * c) ** 2
    return {
        "D1": a * c * E.da * E.db ** 2 * E.dc * E.dd ** 2 * _sym8(al, ga, a, c),
        "D2": -c * (a * a - c * c) * al[1] * al[3] * be[2] * be[4] * E.da * E.db * E.dc ** 2 * E.dd ** 2,
        "D3": -a * (a * a - c * c) * al[1] * al[3] * de[1] * de[3] * E.da * E.db ** 2 * E.dc ** 2 * E.dd,
        **_fdict([k * x for x in _base(E)]),
    }


def _orb_l_amb(v, E):
    a, _, c = v
    al, be, ga, de = E.al, E.be, E.ga, E.de
    k = (a * a - c * c) ** 2
    # the D3 bracket pairs al2 al4 with de1 de3 and al1 al3 with de2 de4
    d3_poly = ((a * a + c * c) * (al[2] * al[4] * de[1] * de[3] + al[1] * al[3] * de[2] * de[4])
               + a * c * (al[2] * al[3] * de[2] * de[3] + al[1] * al[4] * de[2] * de[3]
                          + al[2] * al[3] * de[1] * de[4] + al[1] * al[4] * de[1] * de[4]))
    return {
        "D1": -a * (a * a - c * c) * al[1] * al[3] * ga[2] * ga[4] * E.da * E.db ** 2 * E.dc * E.dd ** 2,
        "D2": -c * (a * a - c * c) * al[1] * al[3] * be[2] * be[4] * E.da * E.db * E.dc ** 2 * E.dd ** 2,
        "D3": a * c * E.da * E.db ** 2 * E.dc ** 2 * E.dd * d3_poly,
        **_fdict([k * x for x in _base(E)]),
    }


def _orb_l_ca(v, E):
    a, b, _ = v
    k = a * (a * a - b * b)
    return _fdict([k * x for x in _quartic_entries(E, CA_PAIRS)])


def _orb_l_generic(v, E, printed=False):
    a, b, c = v
    u, w = c * (a * a - b * b), (a * a - c * c) * (b * b - c * c)
    factors = ("P",) * 8 if printed else _FACTOR
    return {"I": (a * a + b * b + 2 * c * c) / 2 * E.T, **_fdict(_mixed(E, CA_PAIRS, u, w, factors))}


def _orb_l_00c(v, E):
    c = v[2]
    al, be = E.al, E.be
    k = c ** 4
    f9, f10 = _f9_ab(E, k, k)
    return {
        "D1": 0, "D3": 0,
        "D2": c ** 3 * al[1] * al[3] * be[2] * be[4] * E.da * E.db * E.dc ** 2 * E.dd ** 2,
        **_fdict([k * x for x in _base(E)]),
        # F9 here carries the (al1 al4 be2 be3 - al2 al3 be1 be4) square, F10 the other one
        "F9": f10, "F10": f9,
    }


def _orb_l_0bb(v, E):
    b = v[1]
    return _fdict([-(b ** 3) * x for x in _quartic_entries(E, CA_PAIRS)])


def _orb_l_0bc(v, E):
    _, b, c = v
    vals = _mixed(E, CA_PAIRS, b * b, c * (b * b - c * c))
    return {"I": (b * b + 2 * c * c) / 2 * E.T, **_fdict([-c * x for x in vals])}


def _orb_lab3(v, E):
    a, b = v
    k = (a * a - b * b) / 2
    return _fdict([k * x for x in _quartic_entries(E, LAB3_PAIRS)])


def _orb_lab3_a0(v, E):
    b = v[1]
    al, be = E.al, E.be
    p = al[2] * al[3] * be[1] * be[3] - al[1] * al[4] * be[1] * be[3]
    q = al[1] * al[3] * be[2] * be[3] - al[1] * al[3] * be[1] * be[4]
    g = E.dc ** 2 * E.dd ** 2
    return {"F9": -b * b / 2 * (p - q) ** 2 * g, "F10": -b * b / 2 * (p + q) ** 2 * g}


def _orb_la4(v, E):
    return {"I": 2 * v[0] ** 2 * E.T}


def _orb_la203(v, E):
    return {"I": v[0] ** 2 * E.T}


ORBIT_FORMS = (
    ClosedForm("G with b=c=0", _G, lambda g: (_r(g), 0, 0, _r(g)), _orb_g_bc0, orbit=True),
    ClosedForm("G with a=d, b=c", _G, lambda g: (lambda a, b: (a, b, b, a))(_r(g), _r(g)),
               _orb_g_ad_bc, lambda v, E: _orb_g_ad_bc(v, E, printed=True),
               {"F1..F8": "printed with (a^2-b^2) instead of (a^2-b^2)^2",
                "I": "printed without the factor T"}, orbit=True),
    ClosedForm("G with a=d", _G, lambda g: (lambda a: (a, _r(g), _r(g), a))(_r(g)),
               _orb_g_ad, lambda v, E: _orb_g_ad(v, E, printed=True),
               {"F1..F8": "printed with (a^2-c^2)^2 instead of (a^2-c^2)"}, orbit=True),
    ClosedForm("G generic", _G, lambda g: tuple(_r(g) for _ in range(4)), _orb_g_generic, orbit=True),
    ClosedForm("La2b2 with b=0", _V, lambda g: (_r(g), 0), _orb_v4, orbit=True),
    ClosedForm("Labc2 with c=0", _L, lambda g: (_r(g), _r(g), 0),
               _orb_l_c0, lambda v, E: _orb_l_c0(v, E, printed=True),
               {"D2": "printed with the opposite overall sign"}, orbit=True),
    ClosedForm("Labc2 with a=b", _L, lambda g: (lambda a: (a, a, _r(g)))(_r(g)), _orb_l_ab, orbit=True),
    ClosedForm("Labc2 with a=-b", _L, lambda g: (lambda a: (a, -a, _r(g)))(_r(g)), _orb_l_amb, orbit=True),
    ClosedForm("Labc2 with c=a", _L, lambda g: (lambda a: (a, _r(g), a))(_r(g)), _orb_l_ca, orbit=True),
    ClosedForm("Labc2 generic", _L, lambda g: tuple(_r(g) for _ in range(3)),
               _orb_l_generic, lambda v, E: _orb_l_generic(v, E, printed=True),
               {"F3..F8": "printed with P where Q, R, S belong"}, orbit=True),
    ClosedForm("Labc2 with a=b=0", _L, lambda g: (0, 0, _r(g)), _orb_l_00c, orbit=True),
    ClosedForm("Labc2 with a=0, b=c", _L, lambda g: (lambda b: (0, b, b))(_r(g)), _orb_l_0bb, orbit=True),
    ClosedForm("Labc2 with a=0", _L, lambda g: (0, _r(g), _r(g)), _orb_l_0bc, orbit=True),
    ClosedForm("Lab3", _R, lambda g: (_r(g), _r(g)), _orb_lab3, orbit=True),
    ClosedForm("Lab3 with a=0", _R, lambda g: (0, _r(g)), _orb_lab3_a0, orbit=True),
    ClosedForm("La4", FamilyId.La4, lambda g: (_r(g),), _orb_la4, orbit=True),
    ClosedForm("La2_0_3p1", FamilyId.La2_0_3p1, lambda g: (_r(g),), _orb_la203, orbit=True),
)

FORMS_BY_NAME = {f.name: f for f in REPRESENTATIVE_FORMS + ORBIT_FORMS}


def quantity_vector(inv) -> dict:
    """InvariantVector as a flat name -> value dict (I, D1..D3, F1..F10)."""
    out = {"I": inv.I}
    out.update({f"D{k}": v for k, v in enumerate(inv.D, 1)})
    out.update({f"F{k}": v for k, v in enumerate(inv.F, 1)})
    return out


_DEGREE = {"I": 2}


def relative_error(got, want, floor=1e-300) -> float:
    return float(abs(got - want) / max(abs(got), abs(want), floor))


def compare(form: ClosedForm, vals, psi, E=None, which="exact") -> dict:
    """Per-quantity relative error of a closed form against direct evaluation on psi.

    A quantity predicted to vanish is measured against a floor of 1e-6 times the
    degree-aware scale of psi, so round-off on an exact zero does not blow up.
    """
    want = form.evaluate(vals, E, which)
    got = quantity_vector(invariant_vector(psi))
    out = {}
    for k, w in want.items():
        floor = 1e-6 * zero_scale(psi, _DEGREE.get(k, 4))
        out[k] = relative_error(got[k], complex(w), floor)
    return out


def typo_quantities(form: ClosedForm) -> set:
    """Expand known_typos keys like "F1..F8" into single quantity names."""
    out = set()
    for key in form.known_typos:
        if ".." in key:
            lo, hi = key.split("..")
            out.update(f"F{k}" for k in range(int(lo[1:]), int(hi[1:]) + 1))
        else:
            out.add(key)
    return out

