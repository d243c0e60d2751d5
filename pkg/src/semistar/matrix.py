"""Dense matrices over a semiring and their stars.

Three ways to close a square matrix are provided:

* :func:`star_block` -- block-recursive right/left star. Even sizes are cut
  into four half-size blocks; odd sizes peel off the last row and column
  (the ``(n-1) x (n-1)`` / scalar split). The 1x1 case is the scalar star.
* :func:`star_nilpotent` -- the finite sum ``I + M + ... + M^(N-1)``.
* :func:`star_iterative` -- partial sums of powers until they stop moving.

Every operation takes an optional :class:`OpCounter` that tallies scalar
additions, multiplications, stars and temporary cells.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .semiring import (
    NotStationary,
    Semiring,
    SemiringMismatchError,
    SemiringValue,
    Undefined,
    get_semiring,
    is_undefined,
)

__all__ = [
    "Matrix",
    "OpCounter",
    "is_nilpotent",
    "mat_add",
    "mat_mul",
    "mat_mul_strassen",
    "mat_pow",
    "star",
    "star_block",
    "star_iterative",
    "star_nilpotent",
    "verify_star",
]

# scratch blocks charged per block product inside star_block
SCRATCH_BLOCKS_PER_PRODUCT = 3


@dataclass
class OpCounter:
    """Running tally for one computation. Not safe to share across threads."""

    adds: int = 0
    muls: int = 0
    stars: int = 0
    temp_cells: int = 0
    calls: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return self.adds + self.muls + self.stars

    def merge(self, other: "OpCounter", calls: bool = True) -> None:
        self.adds += other.adds
        self.muls += other.muls
        self.stars += other.stars
        self.temp_cells += other.temp_cells
        if calls:
            self.calls.update(other.calls)

    def as_dict(self) -> dict:
        return {
            "adds": self.adds,
            "muls": self.muls,
            "stars": self.stars,
            "temp_cells": self.temp_cells,
        }


class Matrix:
    """Immutable ``rows x cols`` matrix of raw semiring payloads."""

    __slots__ = ("semiring", "rows", "cols", "_data")

    def __init__(self, semiring, rows: int, cols: int, data: Sequence[Sequence]):
        self.semiring: Semiring = get_semiring(semiring)
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        data = tuple(tuple(r) for r in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entries do not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, semiring, rows: Iterable[Iterable]) -> "Matrix":
        """Build from nested lists of Python numbers or literals."""
        sr = get_semiring(semiring)
        data = [[sr.coerce(x) for x in r] for r in rows]
        ncols = len(data[0]) if data else 0
        return cls(sr, len(data), ncols, data)

    @classmethod
    def zeros(cls, semiring, rows: int, cols: Optional[int] = None) -> "Matrix":
        sr = get_semiring(semiring)
        cols = rows if cols is None else cols
        return cls(sr, rows, cols, [[sr.zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, semiring, n: int) -> "Matrix":
        sr = get_semiring(semiring)
        return cls(
            sr, n, n, [[sr.one if i == j else sr.zero for j in range(n)] for i in range(n)]
        )

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def value(self, i: int, j: int) -> SemiringValue:
        return SemiringValue(self.semiring, self._data[i][j])

    def row(self, i: int) -> tuple:
        return self._data[i]

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    def entries(self) -> list:
        """Row-major flat list of payloads."""
        return [x for r in self._data for x in r]

    def is_zero(self) -> bool:
        z = self.semiring.zero
        return all(x == z for r in self._data for x in r)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix(self.semiring, r1 - r0, c1 - c0, [r[c0:c1] for r in self._data[r0:r1]])

    @classmethod
    def from_blocks(cls, b11: "Matrix", b12: "Matrix", b21: "Matrix", b22: "Matrix") -> "Matrix":
        top = [r1 + r2 for r1, r2 in zip(b11._data, b12._data)]
        bottom = [r1 + r2 for r1, r2 in zip(b21._data, b22._data)]
        rows = b11.rows + b21.rows
        cols = b11.cols + b12.cols
        return cls(b11.semiring, rows, cols, top + bottom)

    def transpose(self) -> "Matrix":
        data = list(zip(*self._data)) if self.rows else [()] * self.cols
        return Matrix(self.semiring, self.cols, self.rows, data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.semiring is other.semiring
            and self.shape == other.shape
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.semiring.id, self.shape, self._data))

    def __add__(self, other: "Matrix") -> "Matrix":
        return mat_add(self, other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __repr__(self):
        fmt = self.semiring.format
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self._data)
        return f"Matrix[{self.semiring.id} {self.rows}x{self.cols}]({body})"


def _check_same(A: Matrix, B: Matrix) -> None:
    if A.semiring is not B.semiring:
        raise SemiringMismatchError(
            f"cannot combine {A.semiring.id} matrix with {B.semiring.id} matrix"
        )


def mat_add(A: Matrix, B: Matrix, ctr: Optional[OpCounter] = None) -> Matrix:
    _check_same(A, B)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch in addition: {A.shape} vs {B.shape}")
    add = A.semiring.add
    data = [[add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(A._data, B._data)]
    if ctr is not None:
        ctr.adds += A.rows * A.cols
        ctr.calls["mat_add"] += 1
    return Matrix(A.semiring, A.rows, A.cols, data)


def mat_mul(A: Matrix, B: Matrix, ctr: Optional[OpCounter] = None) -> Matrix:
    """Schoolbook product: ``k`` multiplications and ``k-1`` additions per entry."""
    _check_same(A, B)
    if A.cols != B.rows:
        raise ValueError(f"shape mismatch in product: {A.shape} x {B.shape}")
    sr = A.semiring
    add, mul = sr.add, sr.mul
    k = A.cols
    cols_b = list(zip(*B._data)) if B.rows else [()] * B.cols
    data = []
    for ra in A._data:
        out = []
        for cb in cols_b:
            if k == 0:
                out.append(sr.zero)
                continue
            acc = mul(ra[0], cb[0])
            for t in range(1, k):
                acc = add(acc, mul(ra[t], cb[t]))
            out.append(acc)
        data.append(out)
    if ctr is not None:
        cells = A.rows * B.cols
        ctr.muls += cells * k
        ctr.adds += cells * max(k - 1, 0)
        ctr.calls["mat_vec" if (A.rows == 1 or B.cols == 1) else "mat_mul"] += 1
    return Matrix(sr, A.rows, B.cols, data)


def _mat_sub(A: Matrix, B: Matrix, ctr: Optional[OpCounter]) -> Matrix:
    sub = A.semiring.sub
    data = [[sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(A._data, B._data)]
    if ctr is not None:
        ctr.adds += A.rows * A.cols
    return Matrix(A.semiring, A.rows, A.cols, data)


def _strassen(A: Matrix, B: Matrix, ctr: Optional[OpCounter], leaf: int) -> Matrix:
    n = A.rows
    if n <= leaf:
        return mat_mul(A, B, ctr)
    if n % 2:
        # peel the last row/column: Strassen on the even part, fix-ups naive
        p = n - 1
        a11, a12 = A.block(0, p, 0, p), A.block(0, p, p, n)
        a21, a22 = A.block(p, n, 0, p), A.block(p, n, p, n)
        b11, b12 = B.block(0, p, 0, p), B.block(0, p, p, n)
        b21, b22 = B.block(p, n, 0, p), B.block(p, n, p, n)
        c11 = mat_add(_strassen(a11, b11, ctr, leaf), mat_mul(a12, b21, ctr), ctr)
        c12 = mat_add(mat_mul(a11, b12, ctr), mat_mul(a12, b22, ctr), ctr)
        c21 = mat_add(mat_mul(a21, b11, ctr), mat_mul(a22, b21, ctr), ctr)
        c22 = mat_add(mat_mul(a21, b12, ctr), mat_mul(a22, b22, ctr), ctr)
        return Matrix.from_blocks(c11, c12, c21, c22)
    h = n // 2
    a11, a12 = A.block(0, h, 0, h), A.block(0, h, h, n)
    a21, a22 = A.block(h, n, 0, h), A.block(h, n, h, n)
    b11, b12 = B.block(0, h, 0, h), B.block(0, h, h, n)
    b21, b22 = B.block(h, n, 0, h), B.block(h, n, h, n)

    def add(X, Y):
        return mat_add(X, Y, ctr)

    def sub(X, Y):
        return _mat_sub(X, Y, ctr)

    def rec(X, Y):
        return _strassen(X, Y, ctr, leaf)

    m1 = rec(add(a11, a22), add(b11, b22))
    m2 = rec(add(a21, a22), b11)
    m3 = rec(a11, sub(b12, b22))
    m4 = rec(a22, sub(b21, b11))
    m5 = rec(add(a11, a12), b22)
    m6 = rec(sub(a21, a11), add(b11, b12))
    m7 = rec(sub(a12, a22), add(b21, b22))
    c11 = add(sub(add(m1, m4), m5), m7)
    c12 = add(m3, m5)
    c21 = add(m2, m4)
    c22 = add(add(sub(m1, m2), m3), m6)
    return Matrix.from_blocks(c11, c12, c21, c22)


def mat_mul_strassen(
    A: Matrix, B: Matrix, ctr: Optional[OpCounter] = None, leaf: int = 1
) -> Matrix:
    """Strassen product of square matrices over a ring.

    Seven half-size products per level; odd sizes peel the last row and
    column. Below ``leaf`` the schoolbook product takes over.
    """
    _check_same(A, B)
    if not A.semiring.is_ring:
        raise ValueError(f"Strassen needs subtraction; {A.semiring.id} is not a ring")
    if not (A.is_square and B.is_square and A.rows == B.rows):
        raise ValueError(f"Strassen needs equal square operands: {A.shape} x {B.shape}")
    if ctr is not None:
        ctr.calls["mat_mul_strassen"] += 1
    return _strassen(A, B, ctr, max(leaf, 1))


def mat_pow(M: Matrix, k: int, ctr: Optional[OpCounter] = None) -> Matrix:
    P = Matrix.identity(M.semiring, M.rows)
    for _ in range(k):
        P = mat_mul(P, M, ctr)
    return P


def _star_block(M: Matrix, right: bool, ctr: OpCounter, mul) -> "Matrix | Undefined":
    n = M.rows
    sr = M.semiring
    if n == 0:
        return M
    if n == 1:
        y = sr.star(M[0, 0])
        ctr.stars += 1
        ctr.temp_cells += 1
        if is_undefined(y):
            return y
        return Matrix(sr, 1, 1, [[y]])

    p = n // 2 if n % 2 == 0 else n - 1
    a11, a12 = M.block(0, p, 0, p), M.block(0, p, p, n)
    a21, a22 = M.block(p, n, 0, p), M.block(p, n, p, n)

    def prod(X, Y):
        ctr.temp_cells += SCRATCH_BLOCKS_PER_PRODUCT * X.rows * Y.cols
        return mul(X, Y)

    a22s = _star_block(a22, right, ctr, mul)
    if is_undefined(a22s):
        return a22s
    a11s = _star_block(a11, right, ctr, mul)
    if is_undefined(a11s):
        return a11s

    if right:
        s11 = mat_add(a11, prod(prod(a12, a22s), a21), ctr)
    else:
        s11 = mat_add(a11, prod(a12, prod(a22s, a21)), ctr)
    A11 = _star_block(s11, right, ctr, mul)
    if is_undefined(A11):
        return A11

    if right:
        s22 = mat_add(a22, prod(prod(a21, a11s), a12), ctr)
    else:
        s22 = mat_add(a22, prod(a21, prod(a11s, a12)), ctr)
    A22 = _star_block(s22, right, ctr, mul)
    if is_undefined(A22):
        return A22

    if right:
        A12 = prod(prod(a11s, a12), A22)
        A21 = prod(prod(a22s, a21), A11)
    else:
        A12 = prod(A11, prod(a12, a22s))
        A21 = prod(A22, prod(a21, a11s))
    return Matrix.from_blocks(A11, A12, A21, A22)


def star_block(
    M: Matrix,
    side: str = "right",
    ctr: Optional[OpCounter] = None,
    multiply: str = "naive",
) -> "Matrix | Undefined":
    """Block-recursive star of a square matrix.

    With ``side="right"`` the result ``N`` solves ``M N + I = N``; with
    ``side="left"`` it solves ``N M + I = N``. Each level computes the
    stars of both diagonal blocks, then the stars of the two Schur-style
    corrections, then the off-diagonal blocks: 4 stars, 8 block products
    and 2 block additions.

    Returns :class:`Undefined` as soon as any sub-star fails to exist.
    ``multiply="strassen"`` routes square block products through
    :func:`mat_mul_strassen` (rings only).
    """
    if not M.is_square:
        raise ValueError(f"star needs a square matrix, got {M.shape}")
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    if ctr is None:
        ctr = OpCounter()
    if multiply == "naive":
        def mul(X, Y):
            return mat_mul(X, Y, ctr)
    elif multiply == "strassen":
        if not M.semiring.is_ring:
            raise ValueError(f"Strassen needs subtraction; {M.semiring.id} is not a ring")

        def mul(X, Y):
            if X.is_square and Y.is_square and X.rows == Y.rows:
                return mat_mul_strassen(X, Y, ctr)
            return mat_mul(X, Y, ctr)
    else:
        raise ValueError(f"unknown multiply mode {multiply!r}")
    ctr.calls["star_block"] += 1
    return _star_block(M, side == "right", ctr, mul)


def is_nilpotent(M: Matrix) -> Optional[int]:
    """Nilpotence index of ``M`` (least ``k`` with ``M^k = 0``), or ``None``.

    Only powers up to the dimension are tried; a nilpotent ``n x n``
    matrix always vanishes by then.
    """
    if not M.is_square:
        raise ValueError(f"nilpotence needs a square matrix, got {M.shape}")
    n = M.rows
    P = M
    for k in range(1, max(n, 1) + 1):
        if P.is_zero():
            return k
        P = mat_mul(P, M)
    return None


def star_nilpotent(M: Matrix, ctr: Optional[OpCounter] = None) -> Matrix:
    index = is_nilpotent(M)
    if index is None:
        raise ValueError("star_nilpotent requires a nilpotent matrix")
    S = P = Matrix.identity(M.semiring, M.rows)
    for _ in range(index - 1):
        P = mat_mul(P, M, ctr)
        S = mat_add(S, P, ctr)
    return S


def star_iterative(
    M: Matrix, max_iter: int = 1000, ctr: Optional[OpCounter] = None
) -> "Matrix | NotStationary":
    """Partial sums ``S_N = I + M + ... + M^N`` until ``S_{N+1} == S_N``.

    Once two consecutive partial sums agree, ``S = I + M S`` holds, so
    the returned matrix is a two-sided star.
    """
    if not M.is_square:
        raise ValueError(f"star needs a square matrix, got {M.shape}")
    S = P = Matrix.identity(M.semiring, M.rows)
    for it in range(1, max_iter + 1):
        P = mat_mul(P, M, ctr)
        S_next = mat_add(S, P, ctr)
        if S_next == S:
            return S
        S = S_next
    return NotStationary(f"partial sums not stationary after {max_iter} terms", max_iter)


STAR_METHODS = ("auto", "block", "iterative", "nilpotent")


def star(
    M: Matrix,
    method: str = "auto",
    side: str = "right",
    ctr: Optional[OpCounter] = None,
    max_iter: int = 1000,
    multiply: str = "naive",
) -> "Matrix | Undefined":
    """Star of ``M`` by the chosen method.

    ``auto`` takes the finite power sum for nilpotent input, partial sums
    for idempotent semirings (stationary within ``n + 1`` terms) and the
    block recursion otherwise.
    """
    if method not in STAR_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {STAR_METHODS}")
    if not M.is_square:
        raise ValueError(f"star needs a square matrix, got {M.shape}")
    if ctr is None:
        ctr = OpCounter()
    if method == "auto":
        if is_nilpotent(M) is not None:
            method = "nilpotent"
        elif M.semiring.is_idempotent:
            method, max_iter = "iterative", M.rows + 1
        else:
            method = "block"
    if method == "nilpotent":
        return star_nilpotent(M, ctr)
    if method == "iterative":
        return star_iterative(M, max_iter, ctr)
    return star_block(M, side, ctr, multiply=multiply)


def verify_star(M: Matrix, N: Matrix, side: str = "both") -> bool:
    """Check ``M N + I = N`` (right), ``N M + I = N`` (left), or both."""
    I = Matrix.identity(M.semiring, M.rows)
    ok = True
    if side in ("right", "both"):
        ok = ok and mat_add(mat_mul(M, N), I) == N
    if side in ("left", "both"):
        ok = ok and mat_add(mat_mul(N, M), I) == N
    return ok
