"""SLOCC invariants and class tables for four-qubit pure states."""
from .core import (
    DEFAULT_TOL, DET_TOL, NonInvertibleOperator, QuadOperator, ZeroState,
    apply_quad, basis_ket, from_terms, states_equal, states_proportional,
)
from .invariants import (
    InvariantVector, Signature, invariant_D, invariant_F, invariant_I, invariant_vector, signature,
)
from .families import FamilyId, FamilyParams, WrongArity, evaluate_regime, make_representative, params
from .classifier import (
    ClassLabel, ProductState, TableRow, UnclassifiableParams, classify_params, match_signature,
    reduce_params, verify_class_membership,
)
from .witnesses import WitnessRecord, WitnessReport, catalog, get_witness, verify_witness
from .orbit import PROPERTIES, OrbitReport, check_iv0, run_property, run_suite, separations, table_fidelity

__version__ = "0.1.0"
