"""Stars of matrices over semirings and removal of silent transitions from weighted automata."""

__version__ = "0.1.0"

from .semiring import (
    BOOLEAN,
    INF,
    NAT_INF,
    NATURAL,
    RATIONAL,
    SEMIRINGS,
    TROPICAL,
    NotStationary,
    Semiring,
    SemiringMismatchError,
    SemiringValue,
    UNDEFINED,
    Undefined,
    add,
    eq,
    get_semiring,
    is_undefined,
    mul,
    star_scalar,
)
from .matrix import (
    Matrix,
    OpCounter,
    is_nilpotent,
    mat_add,
    mat_mul,
    mat_mul_strassen,
    star,
    star_block,
    star_iterative,
    star_nilpotent,
    verify_star,
)
from .series import (
    EPS_LETTER,
    Polynomial,
    enumerate_preimages,
    phi_poly,
    phi_word,
    poly_add,
    poly_cauchy,
    poly_scale_left,
    poly_scale_right,
    poly_star_truncated,
)
from .automaton import (
    EpsilonAutomaton,
    EquivalenceReport,
    LinearRepresentation,
    behaviour_truncated,
    check_equivalence,
    eliminate,
    epsilon_closure,
    is_phi_finite_representation,
    phi_behaviour_oracle,
    phi_weight_oracle,
    weight,
)
from .estimators import EpsilonRemover, StarClosure, UndefinedStarError
