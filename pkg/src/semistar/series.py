"""Words over an alphabet with a silent letter, polynomials, and the erasure map.

Words are plain strings of one-character letters. The silent letter is
``"@"`` (:data:`EPS_LETTER`) and the empty word is ``""``. A
:class:`Polynomial` is a finitely supported map from words to semiring
payloads, with zero coefficients never stored.

:func:`phi_word` erases the silent letter; :func:`phi_poly` lifts the
erasure to polynomials by summing the coefficients of all preimages.
"""
from __future__ import annotations

from itertools import product as _cartesian
from typing import Dict, Iterable, Iterator, List, Mapping, Optional

from .semiring import Semiring, SemiringMismatchError, SemiringValue, Undefined, get_semiring, is_undefined

__all__ = [
    "EPS_LETTER",
    "Polynomial",
    "enumerate_preimages",
    "phi_poly",
    "phi_word",
    "poly_add",
    "poly_cauchy",
    "poly_scale_left",
    "poly_scale_right",
    "poly_star_truncated",
    "words_up_to",
]

EPS_LETTER = "@"


def phi_word(v: str) -> str:
    """Delete every silent letter from ``v``."""
    return v.replace(EPS_LETTER, "")


def words_up_to(alphabet: Iterable[str], max_len: int) -> Iterator[str]:
    """All words over ``alphabet`` of length ``<= max_len``, shortest first."""
    letters = sorted(set(alphabet))
    for n in range(max_len + 1):
        for t in _cartesian(letters, repeat=n):
            yield "".join(t)


def enumerate_preimages(u: str, K: int) -> List[str]:
    """Words ``@^n0 a1 @^n1 ... ak @^nk`` with every ``n_i < K``.

    Ordered lexicographically by ``(n0, ..., nk)``; there are
    ``K ** (len(u) + 1)`` of them.
    """
    if K < 0:
        raise ValueError("K must be non-negative")
    if EPS_LETTER in u:
        raise ValueError(f"{u!r} already contains the silent letter")
    out = []
    for ns in _cartesian(range(K), repeat=len(u) + 1):
        parts = [EPS_LETTER * ns[0]]
        for a, n in zip(u, ns[1:]):
            parts.append(a)
            parts.append(EPS_LETTER * n)
        out.append("".join(parts))
    return out


class Polynomial:
    """Finitely supported word -> weight map over one semiring."""

    __slots__ = ("semiring", "alphabet", "_terms")

    def __init__(self, semiring, terms: Optional[Mapping[str, object]] = None,
                 alphabet: Optional[Iterable[str]] = None):
        sr = get_semiring(semiring)
        self.semiring: Semiring = sr
        self.alphabet = frozenset(alphabet) if alphabet is not None else None
        clean: Dict[str, object] = {}
        for w, c in (terms or {}).items():
            if isinstance(c, SemiringValue):
                if c.semiring is not sr:
                    raise SemiringMismatchError(f"{c.semiring.id} coefficient in {sr.id} polynomial")
                c = c.payload
            else:
                c = sr.coerce(c)
            if self.alphabet is not None:
                bad = set(w) - self.alphabet - {EPS_LETTER}
                if bad:
                    raise ValueError(f"letters {sorted(bad)} not in alphabet")
            if not sr.is_zero(c):
                clean[w] = c
        self._terms = clean

    @classmethod
    def _raw(cls, semiring, terms, alphabet):
        p = cls.__new__(cls)
        p.semiring = semiring
        p.alphabet = alphabet
        z = semiring.zero
        p._terms = {w: c for w, c in terms.items() if c != z}
        return p

    @classmethod
    def word(cls, semiring, w: str, coeff=None) -> "Polynomial":
        sr = get_semiring(semiring)
        return cls(sr, {w: sr.one if coeff is None else coeff})

    @property
    def terms(self) -> Dict[str, object]:
        return dict(self._terms)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coefficient(self, w: str):
        return self._terms.get(w, self.semiring.zero)

    def __getitem__(self, w: str):
        return self.coefficient(w)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms, key=lambda w: (len(w), w)))

    def items(self):
        return [(w, self._terms[w]) for w in self]

    def is_zero(self) -> bool:
        return not self._terms

    def _context(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.semiring is not self.semiring:
            raise SemiringMismatchError(
                f"cannot combine {self.semiring.id} and {other.semiring.id} polynomials"
            )
        if self.alphabet is not None and other.alphabet is not None and self.alphabet != other.alphabet:
            raise SemiringMismatchError("polynomials over different alphabets")
        return self.alphabet if self.alphabet is not None else other.alphabet

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.semiring is other.semiring and self._terms == other._terms

    def __hash__(self):
        return hash((self.semiring.id, frozenset(self._terms.items())))

    def __add__(self, other):
        return poly_add(self, other)

    def __mul__(self, other):
        return poly_cauchy(self, other)

    def truncate(self, max_len: int) -> "Polynomial":
        return Polynomial._raw(
            self.semiring, {w: c for w, c in self._terms.items() if len(w) <= max_len}, self.alphabet
        )

    def __repr__(self):
        if not self._terms:
            return f"Polynomial[{self.semiring.id}](0)"
        fmt = self.semiring.format
        body = " + ".join(f"{fmt(c)}*{w or 'ε'}" for w, c in self.items())
        return f"Polynomial[{self.semiring.id}]({body})"


def poly_add(P: Polynomial, Q: Polynomial) -> Polynomial:
    alphabet = P._context(Q)
    add = P.semiring.add
    out = dict(P._terms)
    for w, c in Q._terms.items():
        out[w] = add(out[w], c) if w in out else c
    return Polynomial._raw(P.semiring, out, alphabet)


def _scalar(P: Polynomial, alpha):
    if isinstance(alpha, SemiringValue):
        if alpha.semiring is not P.semiring:
            raise SemiringMismatchError(f"{alpha.semiring.id} scalar on {P.semiring.id} polynomial")
        return alpha.payload
    return P.semiring.coerce(alpha)


def poly_scale_left(alpha, P: Polynomial) -> Polynomial:
    a = _scalar(P, alpha)
    mul = P.semiring.mul
    return Polynomial._raw(P.semiring, {w: mul(a, c) for w, c in P._terms.items()}, P.alphabet)


def poly_scale_right(P: Polynomial, alpha) -> Polynomial:
    a = _scalar(P, alpha)
    mul = P.semiring.mul
    return Polynomial._raw(P.semiring, {w: mul(c, a) for w, c in P._terms.items()}, P.alphabet)


def poly_cauchy(P: Polynomial, Q: Polynomial) -> Polynomial:
    """Cauchy product: ``<PQ, w> = sum over w = w1 w2 of <P,w1> <Q,w2>``."""
    alphabet = P._context(Q)
    sr = P.semiring
    add, mul = sr.add, sr.mul
    out: Dict[str, object] = {}
    for w1, c1 in P._terms.items():
        for w2, c2 in Q._terms.items():
            w = w1 + w2
            t = mul(c1, c2)
            out[w] = add(out[w], t) if w in out else t
    return Polynomial._raw(sr, out, alphabet)


def phi_poly(P: Polynomial) -> Polynomial:
    """Image under the erasure: coefficient of ``u`` is the sum over its preimages."""
    add = P.semiring.add
    out: Dict[str, object] = {}
    for v, c in P._terms.items():
        u = phi_word(v)
        out[u] = add(out[u], c) if u in out else c
    return Polynomial._raw(P.semiring, out, P.alphabet)


def poly_star_truncated(P: Polynomial, max_len: int) -> "Polynomial | Undefined":
    """Words of length ``<= max_len`` of ``P*``.

    Writing ``P = c + P'`` with ``c`` the constant term, ``P*`` solves
    ``Y = c* (1 + P' Y)``; each length layer depends only on shorter ones.
    """
    sr = P.semiring
    c_star = sr.star(P.coefficient(""))
    if is_undefined(c_star):
        return c_star
    add, mul = sr.add, sr.mul
    proper = [(w, c) for w, c in P._terms.items() if w]
    Y: Dict[str, object] = {"": c_star}
    by_len: Dict[int, List[str]] = {0: [""]}
    for n in range(1, max_len + 1):
        layer: Dict[str, object] = {}
        for u, cu in proper:
            if len(u) > n:
                continue
            for v in by_len.get(n - len(u), ()):
                t = mul(cu, Y[v])
                w = u + v
                layer[w] = add(layer[w], t) if w in layer else t
        layer = {w: mul(c_star, x) for w, x in layer.items()}
        layer = {w: x for w, x in layer.items() if not sr.is_zero(x)}
        Y.update(layer)
        by_len[n] = list(layer)
    return Polynomial._raw(sr, Y, P.alphabet)
