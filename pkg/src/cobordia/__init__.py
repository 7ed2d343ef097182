"""Signed-point diagrams: the free compact closed category on one object.

Objects are words over ``+``/``-``; morphisms are sign-compatible perfect
pairings of boundary points together with a count of closed circles.
"""

from .algebra import (
    CompositionTrace,
    cir_formula,
    compose,
    compose_all,
    dual_morphism,
    epsilon,
    eta,
    identity,
    snake_left,
    snake_right,
    symmetry,
    tensor_all,
    tensor_morphisms,
    trace_composition,
)
from .diagrams import (
    MINUS,
    PLUS,
    DiagMorphism,
    Endpoint,
    ObjWord,
    Orientation,
    Pairing,
    Strand,
    all_words,
    canonical_form,
    classify_sections,
    dual_object,
    enumerate_pairings,
    parse_object,
    tensor_objects,
    validate_pairing,
)
from .errors import (
    BoundaryMismatchError,
    CobordiaError,
    InvalidPairingError,
    MissingDualityError,
    ParseError,
    ResourceBoundError,
    UnknownSuiteError,
)
from .evaluation import (
    DualityData,
    Leg,
    TensorArray,
    array_compose,
    array_tensor,
    check_invertnat,
    check_lemma_respect,
    dual_morphism_generic,
    evaluate,
    identity_array,
    respects,
    standard_duality,
)
from .fsm import Permutation, all_permutations, block_sum, include, perm_compose
from .laws import LawReport, run_all, run_suite
from .semiring import BOOLEANS, FLOATS, INTEGERS, NATURALS, RATIONALS, Semiring, get_semiring
from .serialize import array_from_json, array_to_json, morphism_from_json, morphism_to_json

__version__ = "0.1.0"
