import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from semistar import SEMIRINGS
from semistar.formats import (
    FormatError,
    automaton_from_dict,
    automaton_to_dict,
    dump_automaton,
    dump_matrix,
    load_automaton,
    load_matrix,
    matrix_from_dict,
    matrix_to_dict,
)
from semistar.generators import random_epsilon_automaton, random_matrix


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(SEMIRINGS)), st.integers(0, 5), st.integers(0, 5), st.integers(0, 999))
def test_matrix_round_trip(sid, r, c, seed):
    M = random_matrix(sid, r, c, seed)
    assert matrix_from_dict(json.loads(json.dumps(matrix_to_dict(M)))) == M


@pytest.mark.parametrize("sid", sorted(SEMIRINGS))
def test_automaton_round_trip(sid, tmp_path):
    rng = random.Random(sid)
    for _ in range(5):
        Ae = random_epsilon_automaton(sid, rng.randint(1, 4), rng.randint(1, 3), rng)
        path = tmp_path / "a.json"
        dump_automaton(Ae, path)
        back = load_automaton(path)
        assert back.base == Ae.base and back.eps == Ae.eps
        assert load_automaton(path.__fspath__()) is not None
        plain = automaton_from_dict(automaton_to_dict(Ae.base))
        assert plain == Ae.base


def test_matrix_file(tmp_path):
    M = random_matrix("rational", 3, seed=1)
    p = tmp_path / "m.json"
    text = dump_matrix(M, p)
    assert json.loads(text)["entries"] == matrix_to_dict(M)["entries"]
    assert load_matrix(p) == M


def test_nested_entries_accepted():
    M = matrix_from_dict({"semiring": "tropical", "rows": 2, "cols": 2,
                          "entries": [["0", "inf"], ["1.5", "0"]]})
    assert M.tolist()[1][0] == 1.5


@pytest.mark.parametrize("bad", [
    {"semiring": "nat", "rows": 2, "cols": 2, "entries": ["1", "2", "3"]},
    {"semiring": "reals", "rows": 1, "cols": 1, "entries": ["1"]},
    {"semiring": "nat", "rows": 1, "entries": ["1"]},
    {"semiring": "nat", "rows": 1, "cols": 1, "entries": ["-1"]},
    [1, 2],
])
def test_bad_matrix(bad):
    with pytest.raises(FormatError):
        matrix_from_dict(bad)


def test_bad_automaton(tmp_path):
    good = automaton_to_dict(random_epsilon_automaton("nat", 2, 1, 0))
    for key in ("mu", "dim"):
        d = dict(good)
        del d[key]
        with pytest.raises(FormatError):
            automaton_from_dict(d)
    d = dict(good, alphabet=["ab"])
    with pytest.raises(FormatError):
        automaton_from_dict(d)
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(FormatError):
        load_automaton(p)
