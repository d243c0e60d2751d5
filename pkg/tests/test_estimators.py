import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from semistar import EpsilonRemover, Matrix, StarClosure, eliminate, star_block
from semistar.estimators import UndefinedStarError

from conftest import LOOP_STAR, make_silent_chain, make_rational_loop


def test_params_round_trip():
    est = StarClosure(side="left", method="block")
    assert est.get_params() == {"side": "left", "method": "block", "multiply": "naive", "max_iter": 1000}
    est.set_params(max_iter=5)
    assert clone(est).max_iter == 5
    assert EpsilonRemover().get_params() == {"variant": "left", "strategy": "auto"}


def test_star_closure_fit_transform():
    M = make_rational_loop().eps
    est = StarClosure()
    N = est.fit_transform(M)
    assert N == Matrix.from_rows("rational", LOOP_STAR)
    assert est.counter_.stars > 0
    other = make_silent_chain().eps
    assert est.transform(other) == star_block(other)


def test_star_closure_errors():
    with pytest.raises(NotFittedError):
        StarClosure().transform(Matrix.identity("nat", 2))
    with pytest.raises(UndefinedStarError):
        StarClosure().fit(Matrix.identity("nat", 2))
    with pytest.raises(ValueError):
        StarClosure().fit(Matrix.zeros("nat", 2, 3))
    with pytest.raises(TypeError):
        StarClosure().fit([[0]])


@pytest.mark.parametrize("variant", ["left", "right"])
def test_epsilon_remover(variant):
    Ae = make_rational_loop()
    rem = EpsilonRemover(variant=variant).fit(Ae)
    assert rem.transform(Ae) == eliminate(Ae, variant)
    assert rem.closure_ == Matrix.from_rows("rational", LOOP_STAR)


def test_epsilon_remover_errors():
    with pytest.raises(NotFittedError):
        EpsilonRemover().transform(make_silent_chain())
    with pytest.raises(ValueError):
        EpsilonRemover(variant="up").fit(make_silent_chain())
    rem = EpsilonRemover().fit(make_silent_chain())
    with pytest.raises(ValueError):
        rem.transform(make_rational_loop())
