import numpy as np
import pytest

from slocc4 import apply_quad, make_representative
from slocc4.closed_forms import ORBIT_FORMS, REPRESENTATIVE_FORMS, OpContext, compare, typo_quantities
from slocc4.core import QuadOperator, random_quad
from slocc4.families import FamilyParams


def _push(form, rng):
    vals = form.sample(rng)
    op = random_quad(rng) if form.orbit else QuadOperator.identity()
    return vals, op, apply_quad(op, make_representative(FamilyParams(form.family, vals)))


@pytest.mark.parametrize("form", REPRESENTATIVE_FORMS + ORBIT_FORMS, ids=lambda f: f.name)
def test_closed_form_matches_direct_evaluation(form):
    rng = np.random.default_rng(11)
    bound = 1e-9 if form.orbit else 1e-10
    for _ in range(100):
        vals, op, psi = _push(form, rng)
        errs = compare(form, vals, psi, OpContext(op))
        assert max(errs.values()) <= bound, (form.name, errs)


@pytest.mark.parametrize("form", [f for f in REPRESENTATIVE_FORMS + ORBIT_FORMS if f.known_typos],
                         ids=lambda f: f.name)
def test_printed_variants_differ_exactly_where_declared(form):
    rng = np.random.default_rng(12)
    off = set()
    for _ in range(20):
        vals, op, psi = _push(form, rng)
        off |= {k for k, e in compare(form, vals, psi, OpContext(op), "printed").items() if e > 1e-6}
    assert off == typo_quantities(form)
