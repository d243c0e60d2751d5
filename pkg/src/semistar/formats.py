"""JSON file formats for matrices and automata.

Entries are written as strings in each semiring's text encoding
(``0``/``1``, decimal naturals, ``p/q`` rationals, ``inf``). Readers also
accept plain JSON numbers and booleans.

Matrix file::

    {"semiring": "rational", "rows": 2, "cols": 2, "entries": ["0", "1/2", "1/3", "0"]}

Automaton file::

    {"semiring": "nat", "alphabet": ["a", "b"], "dim": 2,
     "lambda": ["3", "0"], "gamma": ["0", "1"],
     "mu": {"a": [["3", "1"], ["0", "1"]], "b": [["1", "0"], ["0", "4"]]},
     "epsilon": [["0", "0"], ["0", "0"]]}

``epsilon`` is optional; with it the file describes an
:class:`~semistar.automaton.EpsilonAutomaton`.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .automaton import EpsilonAutomaton, LinearRepresentation
from .matrix import Matrix
from .semiring import Semiring, get_semiring

__all__ = [
    "FormatError",
    "automaton_from_dict",
    "automaton_to_dict",
    "dump_automaton",
    "dump_matrix",
    "load_automaton",
    "load_matrix",
    "matrix_from_dict",
    "matrix_to_dict",
]


class FormatError(ValueError):
    """Malformed matrix or automaton file."""


def _decode(sr: Semiring, x: Any):
    try:
        if isinstance(x, str):
            return sr.parse(x)
        if isinstance(x, float) and x.is_integer():
            x = int(x)
        return sr.coerce(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad {sr.id} entry {x!r}: {exc}") from None


def _square(sr: Semiring, rows: Any, n: int, what: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != n for r in rows
    ):
        raise FormatError(f"{what} must be a {n}x{n} array")
    return Matrix(sr, n, n, [[_decode(sr, x) for x in r] for r in rows])


def _vector(sr: Semiring, xs: Any, n: int, what: str) -> list:
    if not isinstance(xs, list) or len(xs) != n:
        raise FormatError(f"{what} must be an array of length {n}")
    return [_decode(sr, x) for x in xs]


def _semiring(d: dict) -> Semiring:
    try:
        return get_semiring(d["semiring"])
    except KeyError:
        raise FormatError("missing field 'semiring'") from None
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def matrix_to_dict(M: Matrix) -> dict:
    fmt = M.semiring.format
    return {
        "semiring": M.semiring.id,
        "rows": M.rows,
        "cols": M.cols,
        "entries": [fmt(x) for x in M.entries()],
    }


def matrix_from_dict(d: dict) -> Matrix:
    if not isinstance(d, dict):
        raise FormatError("matrix file must hold a JSON object")
    sr = _semiring(d)
    try:
        rows, cols, entries = int(d["rows"]), int(d["cols"]), d["entries"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc.args[0]!r}") from None
    if rows < 0 or cols < 0:
        raise FormatError("rows and cols must be non-negative")
    if entries and isinstance(entries[0], list):
        entries = [x for r in entries for x in r]
    if len(entries) != rows * cols:
        raise FormatError(f"expected {rows * cols} entries, found {len(entries)}")
    flat = [_decode(sr, x) for x in entries]
    return Matrix(sr, rows, cols, [flat[i * cols:(i + 1) * cols] for i in range(rows)])


def automaton_to_dict(A: Union[LinearRepresentation, EpsilonAutomaton]) -> dict:
    base = A.base if isinstance(A, EpsilonAutomaton) else A
    fmt = base.semiring.format
    d = {
        "semiring": base.semiring.id,
        "alphabet": list(base.alphabet),
        "dim": base.dim,
        "lambda": [fmt(x) for x in base.lam.entries()],
        "gamma": [fmt(x) for x in base.gamma.entries()],
        "mu": {a: [[fmt(x) for x in r] for r in base.mu[a].tolist()] for a in base.alphabet},
    }
    if isinstance(A, EpsilonAutomaton):
        d["epsilon"] = [[fmt(x) for x in r] for r in A.eps.tolist()]
    return d


def automaton_from_dict(d: dict) -> Union[LinearRepresentation, EpsilonAutomaton]:
    if not isinstance(d, dict):
        raise FormatError("automaton file must hold a JSON object")
    sr = _semiring(d)
    try:
        alphabet, n, mu = d["alphabet"], int(d["dim"]), d["mu"]
        lam, gamma = d["lambda"], d["gamma"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(alphabet, list) or not all(isinstance(a, str) and len(a) == 1 for a in alphabet):
        raise FormatError("alphabet must be an array of single-character strings")
    if not isinstance(mu, dict) or set(mu) != set(alphabet):
        raise FormatError("mu must map exactly the alphabet's letters")
    try:
        base = LinearRepresentation(
            sr,
            tuple(alphabet),
            Matrix(sr, 1, n, [_vector(sr, lam, n, "lambda")]),
            {a: _square(sr, mu[a], n, f"mu[{a!r}]") for a in alphabet},
            Matrix(sr, n, 1, [[g] for g in _vector(sr, gamma, n, "gamma")]),
        )
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if d.get("epsilon") is None:
        return base
    return EpsilonAutomaton(base, _square(sr, d["epsilon"], n, "epsilon"))


def _read_json(path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def load_matrix(path) -> Matrix:
    return matrix_from_dict(_read_json(path))


def load_automaton(path) -> Union[LinearRepresentation, EpsilonAutomaton]:
    return automaton_from_dict(_read_json(path))


def dump_matrix(M: Matrix, path=None) -> str:
    text = json.dumps(matrix_to_dict(M), indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def dump_automaton(A, path=None) -> str:
    text = json.dumps(automaton_to_dict(A), indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
