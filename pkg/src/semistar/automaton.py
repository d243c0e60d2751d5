"""Weighted automata as linear representations, and removal of silent transitions.

A :class:`LinearRepresentation` is ``(lam, mu, gamma)``: a ``1 x n`` input
vector, one ``n x n`` matrix per letter, an ``n x 1`` output vector. The
weight of a word ``a1...ak`` is ``lam mu(a1) ... mu(ak) gamma``.

An :class:`EpsilonAutomaton` adds a matrix ``eps`` for the silent letter
``@``. :func:`eliminate` folds the closure ``eps*`` into the letters so
that the resulting automaton weighs every word ``u`` with the sum of the
weights of all words that reduce to ``u`` once ``@`` is erased.
:func:`phi_weight_oracle` computes that sum by brute force for checking.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional

from .matrix import (
    Matrix,
    OpCounter,
    is_nilpotent,
    mat_add,
    mat_mul,
    star,
    verify_star,
)
from .semiring import (
    Semiring,
    SemiringMismatchError,
    SemiringValue,
    Undefined,
    get_semiring,
    is_undefined,
)
from .series import EPS_LETTER, Polynomial, enumerate_preimages, words_up_to

__all__ = [
    "EpsilonAutomaton",
    "EquivalenceReport",
    "apply_closure",
    "LinearRepresentation",
    "WordComparison",
    "behaviour_truncated",
    "check_equivalence",
    "eliminate",
    "epsilon_closure",
    "is_phi_finite_representation",
    "mu_word",
    "oracle_is_exact",
    "phi_behaviour_oracle",
    "phi_weight_oracle",
    "silent_run_sum",
    "weight",
]

STRATEGIES = ("auto", "nilpotent", "block", "iterative")
VARIANTS = {"left_closure": "left_closure", "left": "left_closure",
            "right_closure": "right_closure", "right": "right_closure"}


@dataclass(frozen=True, eq=True)
class LinearRepresentation:
    semiring: Semiring
    alphabet: tuple
    lam: Matrix
    mu: Mapping[str, Matrix]
    gamma: Matrix

    __hash__ = None

    def __post_init__(self):
        object.__setattr__(self, "semiring", get_semiring(self.semiring))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "mu", MappingProxyType(dict(self.mu)))
        n = self.lam.cols
        if self.lam.rows != 1 or self.gamma.shape != (n, 1):
            raise ValueError(f"lam must be 1x{n} and gamma {n}x1")
        for a in self.alphabet:
            if len(a) != 1 or a == EPS_LETTER:
                raise ValueError(f"invalid letter {a!r}")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate letters in alphabet")
        if set(self.mu) != set(self.alphabet):
            raise ValueError("mu must be defined for exactly the alphabet's letters")
        for m in (self.lam, self.gamma, *self.mu.values()):
            if m.semiring is not self.semiring:
                raise SemiringMismatchError("all matrices must share the semiring")
        for a, m in self.mu.items():
            if m.shape != (n, n):
                raise ValueError(f"mu({a}) has shape {m.shape}, expected {(n, n)}")

    @classmethod
    def from_lists(cls, semiring, alphabet, lam, mu, gamma) -> "LinearRepresentation":
        sr = get_semiring(semiring)
        return cls(
            sr,
            tuple(alphabet),
            Matrix.from_rows(sr, [list(lam)]),
            {a: Matrix.from_rows(sr, m) for a, m in mu.items()},
            Matrix.from_rows(sr, [[g] for g in gamma]),
        )

    @property
    def dim(self) -> int:
        return self.lam.cols

    def letter_matrix(self, a: str) -> Matrix:
        try:
            return self.mu[a]
        except KeyError:
            raise ValueError(f"letter {a!r} not in alphabet {self.alphabet}") from None

    def __eq__(self, other):
        if not isinstance(other, LinearRepresentation):
            return NotImplemented
        return (
            self.semiring is other.semiring
            and set(self.alphabet) == set(other.alphabet)
            and self.lam == other.lam
            and self.gamma == other.gamma
            and dict(self.mu) == dict(other.mu)
        )


@dataclass(frozen=True, eq=True)
class EpsilonAutomaton:
    base: LinearRepresentation
    eps: Matrix

    __hash__ = None

    def __post_init__(self):
        if self.eps.semiring is not self.base.semiring:
            raise SemiringMismatchError("eps must share the semiring of the representation")
        n = self.base.dim
        if self.eps.shape != (n, n):
            raise ValueError(f"eps has shape {self.eps.shape}, expected {(n, n)}")

    @classmethod
    def from_lists(cls, semiring, alphabet, lam, mu, gamma, eps) -> "EpsilonAutomaton":
        base = LinearRepresentation.from_lists(semiring, alphabet, lam, mu, gamma)
        return cls(base, Matrix.from_rows(base.semiring, eps))

    @property
    def semiring(self) -> Semiring:
        return self.base.semiring

    @property
    def alphabet(self) -> tuple:
        return self.base.alphabet

    @property
    def dim(self) -> int:
        return self.base.dim

    def letter_matrix(self, a: str) -> Matrix:
        if a == EPS_LETTER:
            return self.eps
        return self.base.letter_matrix(a)

    @property
    def lam(self) -> Matrix:
        return self.base.lam

    @property
    def gamma(self) -> Matrix:
        return self.base.gamma


def mu_word(A, u: str, ctr: Optional[OpCounter] = None) -> Matrix:
    """``mu(u)`` as a matrix product; ``mu("")`` is the identity."""
    P = Matrix.identity(A.semiring, A.dim)
    for a in u:
        P = mat_mul(P, A.letter_matrix(a), ctr)
    return P


def _weight_raw(A, u: str, ctr: Optional[OpCounter] = None):
    v = A.lam
    for a in u:
        v = mat_mul(v, A.letter_matrix(a), ctr)
    return mat_mul(v, A.gamma, ctr)[0, 0]


def weight(A, u: str, ctr: Optional[OpCounter] = None) -> SemiringValue:
    """Weight of ``u``; for an :class:`EpsilonAutomaton` ``@`` is an ordinary letter."""
    return SemiringValue(A.semiring, _weight_raw(A, u, ctr))


def behaviour_truncated(A, max_len: int) -> Polynomial:
    """All words of length ``<= max_len`` with their weights, as a polynomial."""
    letters = list(A.alphabet)
    if isinstance(A, EpsilonAutomaton):
        letters.append(EPS_LETTER)
    terms: Dict[str, object] = {}

    def walk(prefix: str, vec: Matrix):
        terms[prefix] = mat_mul(vec, A.gamma)[0, 0]
        if len(prefix) == max_len:
            return
        for a in letters:
            walk(prefix + a, mat_mul(vec, A.letter_matrix(a)))

    walk("", A.lam)
    return Polynomial(A.semiring, terms, alphabet=A.alphabet)


def epsilon_closure(
    Ae: EpsilonAutomaton,
    strategy: str = "auto",
    ctr: Optional[OpCounter] = None,
    max_iter: Optional[int] = None,
) -> "Matrix | Undefined":
    """Star of the silent-letter matrix, checked against both star identities.

    ``auto`` uses the finite power sum when ``eps`` is nilpotent, partial
    sums for the idempotent semirings (they stabilise within ``n`` steps),
    and the block recursion otherwise.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    M = Ae.eps if isinstance(Ae, EpsilonAutomaton) else Ae
    if strategy == "nilpotent" and is_nilpotent(M) is None:
        return Undefined("eps matrix is not nilpotent")
    N = star(M, strategy, "right", ctr, 1000 if max_iter is None else max_iter)
    if is_undefined(N):
        return N
    if not verify_star(M, N):
        return Undefined(f"{strategy} closure does not satisfy both star identities")
    return N


def eliminate(
    Ae: EpsilonAutomaton,
    variant: str = "left_closure",
    strategy: str = "auto",
    ctr: Optional[OpCounter] = None,
) -> "LinearRepresentation | Undefined":
    """Silent-transition-free automaton with the erased behaviour.

    ``left_closure``: ``(lam, S mu(a), S gamma)``; ``right_closure``:
    ``(lam S, mu(a) S, gamma)``, where ``S`` is the closure of ``eps``.
    Costs one closure, ``|alphabet|`` square products and one
    matrix-vector product.
    """
    try:
        variant = VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}") from None
    if ctr is None:
        ctr = OpCounter()
    sub = OpCounter()
    S = epsilon_closure(Ae, strategy, sub)
    ctr.merge(sub, calls=False)
    ctr.calls["epsilon_closure"] += 1
    if is_undefined(S):
        return S
    return apply_closure(Ae, S, variant, ctr)


def apply_closure(Ae: EpsilonAutomaton, S: Matrix, variant: str = "left_closure",
                  ctr: Optional[OpCounter] = None) -> LinearRepresentation:
    """Fold a precomputed closure ``S`` of ``Ae.eps`` into the letters."""
    variant = VARIANTS[variant]
    base = Ae.base
    if variant == "left_closure":
        mu = {a: mat_mul(S, base.mu[a], ctr) for a in base.alphabet}
        return LinearRepresentation(base.semiring, base.alphabet, base.lam, mu, mat_mul(S, base.gamma, ctr))
    mu = {a: mat_mul(base.mu[a], S, ctr) for a in base.alphabet}
    return LinearRepresentation(base.semiring, base.alphabet, mat_mul(base.lam, S, ctr), mu, base.gamma)


def _vec_mat(sr: Semiring, v: list, M: Matrix) -> list:
    """Row vector times matrix on raw payloads; zero entries of ``v`` are skipped."""
    add, mul, is_zero = sr.add, sr.mul, sr.is_zero
    out = [sr.zero] * M.cols
    for x, row in zip(v, M._data):
        if is_zero(x):
            continue
        for j, y in enumerate(row):
            out[j] = add(out[j], mul(x, y))
    return out


def _vec_dot(sr: Semiring, v: list, col: Matrix):
    add, mul = sr.add, sr.mul
    total = sr.zero
    for x, (y,) in zip(v, col._data):
        total = add(total, mul(x, y))
    return total


def silent_run_sum(Ae: EpsilonAutomaton, K: int) -> Matrix:
    """``I + eps + ... + eps^(K-1)``: every silent run shorter than ``K``."""
    M = Ae.eps
    S = P = Matrix.identity(M.semiring, M.rows)
    for _ in range(K - 1):
        P = mat_mul(P, M)
        S = mat_add(S, P)
    return S


ORACLES = ("grouped", "brute")


def phi_behaviour_oracle(Ae: EpsilonAutomaton, max_len: int, K: int,
                         method: str = "grouped") -> Dict[str, object]:
    """Raw oracle weights of every word of length ``<= max_len``.

    Both methods sum ``lam mu(v) gamma`` over the preimages
    ``v = @^n0 a1 @^n1 ... ak @^nk`` with every ``n_i < K``.

    ``brute`` walks each preimage once, sharing prefixes between words.
    ``grouped`` uses distributivity to sum each silent run position at
    once: ``lam R mu(a1) R ... mu(ak) R gamma`` with ``R`` from
    :func:`silent_run_sum`. Its cost does not grow with ``K``.
    """
    if method not in ORACLES:
        raise ValueError(f"unknown oracle {method!r}; expected one of {ORACLES}")
    sr = Ae.semiring
    letters = sorted(Ae.alphabet)
    out: Dict[str, object] = {u: sr.zero for u in words_up_to(letters, max_len)}
    if K < 1:
        return out
    eps, mu, gamma = Ae.eps, Ae.base.mu, Ae.gamma
    is_zero = sr.is_zero

    if method == "grouped":
        R = silent_run_sum(Ae, K)

        def walk_grouped(vec: list, u: str):
            if all(is_zero(x) for x in vec):
                return
            vec = _vec_mat(sr, vec, R)
            out[u] = _vec_dot(sr, vec, gamma)
            if len(u) < max_len:
                for a in letters:
                    walk_grouped(_vec_mat(sr, vec, mu[a]), u + a)

        walk_grouped(list(Ae.lam._data[0]), "")
        return out

    def walk(vec: list, u: str, run: int):
        if all(is_zero(x) for x in vec):
            return
        out[u] = sr.add(out[u], _vec_dot(sr, vec, gamma))
        if run + 1 < K:
            walk(_vec_mat(sr, vec, eps), u, run + 1)
        if len(u) < max_len:
            for a in letters:
                walk(_vec_mat(sr, vec, mu[a]), u + a, 0)

    walk(list(Ae.lam._data[0]), "", 0)
    return out


def phi_weight_oracle(Ae: EpsilonAutomaton, u: str, K: int) -> SemiringValue:
    """Sum of ``lam mu(v) gamma`` over all preimages ``v`` of ``u`` with silent runs ``< K``.

    Words are walked letter by letter with shared prefixes; a prefix whose
    state vector is zero contributes nothing and is not extended.
    """
    sr = Ae.semiring
    for a in u:
        Ae.base.letter_matrix(a)
    eps, mu, gamma = Ae.eps, Ae.base.mu, Ae.gamma
    is_zero = sr.is_zero

    def run(vec: list, i: int):
        total = sr.zero
        for _ in range(K):
            if all(is_zero(x) for x in vec):
                break
            if i == len(u):
                term = _vec_dot(sr, vec, gamma)
            else:
                term = run(_vec_mat(sr, vec, mu[u[i]]), i + 1)
            total = sr.add(total, term)
            vec = _vec_mat(sr, vec, eps)
        return total

    return SemiringValue(sr, run(list(Ae.lam._data[0]), 0))


def phi_weight_enumerated(Ae: EpsilonAutomaton, u: str, K: int) -> SemiringValue:
    """Same sum as :func:`phi_weight_oracle`, one full word at a time (slow)."""
    sr = Ae.semiring
    total = sr.zero
    for v in enumerate_preimages(u, K):
        total = sr.add(total, _weight_raw(Ae, v))
    return SemiringValue(sr, total)


def oracle_is_exact(Ae: EpsilonAutomaton, K: int) -> bool:
    """True when silent runs of length ``< K`` already give the full sum.

    That holds exactly when the partial sum up to ``eps^(K-1)`` equals the
    next one: from then on the partial sums never move.
    """
    if K < 1:
        return False
    S = silent_run_sum(Ae, K)
    return mat_add(Matrix.identity(Ae.semiring, Ae.dim), mat_mul(S, Ae.eps)) == S


def is_phi_finite_representation(Ae: EpsilonAutomaton) -> bool:
    """Nilpotent ``eps`` (sufficient for finitely many nonzero preimages per word)."""
    return is_nilpotent(Ae.eps) is not None


@dataclass
class WordComparison:
    word: str
    weight: SemiringValue
    oracle: SemiringValue
    equal: bool
    gap: Optional[SemiringValue] = None


@dataclass
class EquivalenceReport:
    exact: bool
    max_len: int
    K: int
    comparisons: List[WordComparison] = field(default_factory=list)

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "partial-sum"

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.comparisons)

    @property
    def first_mismatch(self) -> Optional[WordComparison]:
        return next((c for c in self.comparisons if not c.equal), None)

    @property
    def passed(self) -> bool:
        """Every exact comparison agrees (vacuously true in partial-sum mode)."""
        return not self.exact or self.all_equal


def check_equivalence(
    A: LinearRepresentation, Ae: EpsilonAutomaton, max_len: int, K: Optional[int] = None,
    oracle: str = "grouped",
) -> EquivalenceReport:
    """Compare ``A`` with the erased behaviour of ``Ae`` on all words up to ``max_len``.

    ``K`` bounds each silent run in the oracle (default: the dimension).
    The report is exact when that bound already captures the full sum;
    otherwise the oracle is a partial sum and only the gap is reported.
    ``oracle`` picks the evaluation of :func:`phi_behaviour_oracle`.
    """
    if A.semiring is not Ae.semiring:
        raise SemiringMismatchError(f"{A.semiring.id} vs {Ae.semiring.id}")
    if set(A.alphabet) != set(Ae.alphabet):
        raise ValueError(f"alphabets differ: {A.alphabet} vs {Ae.alphabet}")
    if K is None:
        K = max(Ae.dim, 1)
    sr = A.semiring
    report = EquivalenceReport(exact=oracle_is_exact(Ae, K), max_len=max_len, K=K)
    table = phi_behaviour_oracle(Ae, max_len, K, oracle)
    for u in words_up_to(A.alphabet, max_len):
        w = weight(A, u)
        o = SemiringValue(sr, table[u])
        gap = SemiringValue(sr, sr.sub(w.payload, o.payload)) if sr.is_ring else None
        report.comparisons.append(WordComparison(u, w, o, w == o, gap))
    return report
