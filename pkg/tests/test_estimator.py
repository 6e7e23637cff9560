import numpy as np
import pytest
from sklearn.base import clone

from nmlcausal import CausalPairSelector
from nmlcausal.datagen import ScenarioSpec, generate
from nmlcausal.discrete import CausalModel


def test_params_round_trip():
    est = CausalPairSelector(x_type="continuous", bins=(2, 4), models=("xy", "yx"), max_sweeps=3)
    params = est.get_params()
    assert params["bins"] == (2, 4) and params["max_sweeps"] == 3
    cloned = clone(est)
    assert cloned.get_params() == params
    est.set_params(threshold=5)
    assert est.threshold == 5


def test_fit_two_column_array():
    x, y = generate(ScenarioSpec("discrete", "xy", 2000, seed=1))
    est = CausalPairSelector().fit(np.column_stack([x, y]))
    assert est.selected_ is CausalModel.XTOY
    assert est.data_kind_ == "discrete"
    assert set(est.codelengths_) == {"indep", "xy", "yx", "conf"}
    assert est.delta_ > 0
    assert est.n_samples_ == 2000


def test_fit_separate_columns_matches():
    x, y = generate(ScenarioSpec("mixed", "conf", 800, seed=2))
    a = CausalPairSelector().fit(np.column_stack([x, y]))
    b = CausalPairSelector().fit(x, y)
    assert a.codelengths_ == b.codelengths_


def test_fit_validation():
    with pytest.raises(ValueError):
        CausalPairSelector().fit(np.zeros((10, 3)))
    with pytest.raises(ValueError):
        CausalPairSelector().fit(np.arange(5), np.arange(4))
    with pytest.raises(ValueError):
        CausalPairSelector().fit(np.array([[1.0, np.nan], [2.0, 3.0]]))


def test_candidate_restriction_via_params():
    x, y = generate(ScenarioSpec("discrete", "indep", 500, seed=3))
    est = CausalPairSelector(models=["xy", "yx"]).fit(x, y)
    assert set(est.codelengths_) == {"xy", "yx"}
