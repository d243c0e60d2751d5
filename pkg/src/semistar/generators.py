"""Seeded random instances for benchmarks and property tests.

Nilpotent matrices are drawn strictly upper triangular and then conjugated
by a random permutation, so they are not always visibly triangular.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .automaton import EpsilonAutomaton, LinearRepresentation
from .matrix import Matrix
from .semiring import INF, Semiring, get_semiring

__all__ = [
    "random_epsilon_automaton",
    "random_matrix",
    "random_nilpotent",
    "random_value",
]

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_value(semiring, rng: random.Random, density: float = 0.5):
    """A random payload; zero with probability ``1 - density``."""
    sr: Semiring = get_semiring(semiring)
    if rng.random() >= density:
        return sr.zero
    if sr.id == "bool":
        return True
    if sr.id == "nat":
        return rng.randint(1, 3)
    if sr.id == "rational":
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        return Fraction(num, rng.randint(1, 4))
    if sr.id == "tropical":
        return Fraction(rng.randint(0, 20), 2)
    if sr.id == "nat_inf":
        return INF if rng.random() < 0.05 else rng.randint(1, 3)
    raise ValueError(f"no generator for {sr.id}")


def random_matrix(semiring, rows: int, cols: Optional[int] = None, seed=None,
                  density: float = 0.5) -> Matrix:
    sr = get_semiring(semiring)
    rng = _rng(seed)
    cols = rows if cols is None else cols
    return Matrix(sr, rows, cols, [[random_value(sr, rng, density) for _ in range(cols)]
                                   for _ in range(rows)])


def random_nilpotent(semiring, n: int, seed=None, density: float = 0.5,
                     permute: bool = True) -> Matrix:
    sr = get_semiring(semiring)
    rng = _rng(seed)
    upper = [[random_value(sr, rng, density) if j > i else sr.zero for j in range(n)]
             for i in range(n)]
    if not permute:
        return Matrix(sr, n, n, upper)
    perm = list(range(n))
    rng.shuffle(perm)
    # P U P^-1 with P a permutation: entry (perm[i], perm[j]) <- U[i][j]
    data = [[sr.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            data[perm[i]][perm[j]] = upper[i][j]
    return Matrix(sr, n, n, data)


def random_epsilon_automaton(semiring, n: int, n_letters: int = 2, seed=None,
                             nilpotent: bool = False, density: float = 0.4) -> EpsilonAutomaton:
    sr = get_semiring(semiring)
    rng = _rng(seed)
    alphabet = tuple(LETTERS[:n_letters])
    lam = Matrix(sr, 1, n, [[random_value(sr, rng, density) for _ in range(n)]])
    gamma = Matrix(sr, n, 1, [[random_value(sr, rng, density)] for _ in range(n)])
    mu = {a: random_matrix(sr, n, n, rng, density) for a in alphabet}
    if nilpotent:
        eps = random_nilpotent(sr, n, rng, density)
    else:
        eps = random_matrix(sr, n, n, rng, density)
    return EpsilonAutomaton(LinearRepresentation(sr, alphabet, lam, mu, gamma), eps)
