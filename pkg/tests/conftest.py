import numpy as np
import pytest

from slocc4.families import ARITY, FamilyId

# multipliers that plant the relations the tables branch on
_RELATIONS = (1, -1, 1j, -1j, np.sqrt(3) * 1j, -np.sqrt(3) * 1j, 1j / np.sqrt(2), -1j / np.sqrt(2),
              np.sqrt(2) * 1j, 0)


def structured_values(rng, family):
    """Parameters that often satisfy equalities, vanishings and quadratic relations."""
    n = ARITY[FamilyId(family)]
    vals = []
    for _ in range(n):
        if not vals or rng.random() < 0.2:
            x = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) if rng.random() < 0.8 else 0j
        else:
            x = vals[rng.integers(len(vals))] * _RELATIONS[rng.integers(len(_RELATIONS))]
        vals.append(x)
    fam = FamilyId(family)
    if fam is FamilyId.Gabcd and rng.random() < 0.2:
        a, b, c = vals[:3]
        vals[3] = np.sqrt(-(a * a + b * b + c * c)) * (1 if rng.random() < 0.5 else -1)
    elif fam is FamilyId.Gabcd and rng.random() < 0.1:
        vals[3] = vals[0]
        vals[2] = np.sqrt(-2 * vals[0] ** 2 - vals[1] ** 2)
    elif fam is FamilyId.Labc2 and rng.random() < 0.2:
        a, b = vals[:2]
        vals[2] = np.sqrt(-(a * a + b * b) / 2)
    return tuple(vals)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
