"""Input checks shared by the estimators and the command line."""
from __future__ import annotations

from typing import Optional

from .automaton import EpsilonAutomaton, LinearRepresentation
from .matrix import Matrix
from .semiring import SemiringMismatchError, get_semiring
from .series import EPS_LETTER

__all__ = ["check_epsilon_automaton", "check_matrix", "check_representation", "check_word"]


def check_matrix(M, square: bool = False, semiring=None) -> Matrix:
    if not isinstance(M, Matrix):
        raise TypeError(f"expected a Matrix, got {type(M).__name__}")
    if square and not M.is_square:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if semiring is not None and M.semiring is not get_semiring(semiring):
        raise SemiringMismatchError(f"expected a {get_semiring(semiring).id} matrix, got {M.semiring.id}")
    return M


def check_representation(A) -> LinearRepresentation:
    if not isinstance(A, LinearRepresentation):
        raise TypeError(f"expected a LinearRepresentation, got {type(A).__name__}")
    return A


def check_epsilon_automaton(A) -> EpsilonAutomaton:
    if not isinstance(A, EpsilonAutomaton):
        raise TypeError(f"expected an EpsilonAutomaton, got {type(A).__name__}")
    return A


def check_word(A, u: str, allow_eps: Optional[bool] = None) -> str:
    """Reject letters outside ``A``'s alphabet (``@`` only for epsilon automata)."""
    if not isinstance(u, str):
        raise TypeError(f"words are strings, got {type(u).__name__}")
    if allow_eps is None:
        allow_eps = isinstance(A, EpsilonAutomaton)
    allowed = set(A.alphabet) | ({EPS_LETTER} if allow_eps else set())
    bad = sorted(set(u) - allowed)
    if bad:
        raise ValueError(f"letters {bad} not in alphabet {sorted(allowed)}")
    return u
