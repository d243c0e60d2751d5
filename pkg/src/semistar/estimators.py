"""scikit-learn style wrappers: configure with parameters, ``fit``, then ``transform``.

>>> from semistar import EpsilonRemover
>>> remover = EpsilonRemover(variant="left").fit(eps_automaton)   # doctest: +SKIP
>>> plain = remover.transform(eps_automaton)                       # doctest: +SKIP
"""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .automaton import VARIANTS, LinearRepresentation, apply_closure, epsilon_closure
from .matrix import OpCounter, star
from .semiring import is_undefined
from .validation import check_epsilon_automaton, check_matrix

__all__ = ["EpsilonRemover", "StarClosure", "UndefinedStarError"]


class UndefinedStarError(ValueError):
    """Raised by the estimators when the requested star does not exist."""


class StarClosure(TransformerMixin, BaseEstimator):
    """Star of a square matrix.

    Parameters
    ----------
    side : {"right", "left"}
        Which star identity the block method targets.
    method : {"auto", "block", "iterative", "nilpotent"}
    multiply : {"naive", "strassen"}
        Block products inside the block method.
    max_iter : int
        Budget for the iterative method.

    Attributes
    ----------
    star_ : Matrix
        Star of the matrix passed to ``fit``.
    counter_ : OpCounter
    """

    def __init__(self, side="right", method="auto", multiply="naive", max_iter=1000):
        self.side = side
        self.method = method
        self.multiply = multiply
        self.max_iter = max_iter

    def _star(self, M, ctr):
        return star(M, self.method, self.side, ctr, self.max_iter, self.multiply)

    def fit(self, X, y=None):
        M = check_matrix(X, square=True)
        ctr = OpCounter()
        N = self._star(M, ctr)
        if is_undefined(N):
            raise UndefinedStarError(N.reason)
        self.matrix_ = M
        self.star_ = N
        self.counter_ = ctr
        return self

    def transform(self, X):
        """Star of ``X`` (reusing the fitted result when ``X`` is the fitted matrix)."""
        check_is_fitted(self, "star_")
        M = check_matrix(X, square=True)
        if M == self.matrix_:
            return self.star_
        N = self._star(M, OpCounter())
        if is_undefined(N):
            raise UndefinedStarError(N.reason)
        return N


class EpsilonRemover(TransformerMixin, BaseEstimator):
    """Remove silent transitions from an epsilon automaton.

    ``fit`` computes the closure of the silent-letter matrix; ``transform``
    folds it into an automaton with the same silent-letter matrix.

    Parameters
    ----------
    variant : {"left", "right"}
        ``left`` multiplies the closure into the letters and output vector,
        ``right`` into the input vector and the letters.
    strategy : {"auto", "nilpotent", "block", "iterative"}
    """

    def __init__(self, variant="left", strategy="auto"):
        self.variant = variant
        self.strategy = strategy

    def fit(self, X, y=None):
        Ae = check_epsilon_automaton(X)
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        ctr = OpCounter()
        S = epsilon_closure(Ae, self.strategy, ctr)
        if is_undefined(S):
            raise UndefinedStarError(S.reason)
        self.eps_ = Ae.eps
        self.closure_ = S
        self.counter_ = ctr
        return self

    def transform(self, X) -> LinearRepresentation:
        check_is_fitted(self, "closure_")
        Ae = check_epsilon_automaton(X)
        if Ae.eps != self.eps_:
            raise ValueError("automaton's silent-letter matrix differs from the fitted one")
        return apply_closure(Ae, self.closure_, self.variant)
