import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from pfbonferroni.estimator import PFBonferroniAggregator, PFBonferroniRanker, check_pfn_array
from pfbonferroni.exceptions import DomainError, InvalidPFN, InvalidWeights, LengthMismatch
from pfbonferroni.golden import erp_problem
from pfbonferroni.mcdm import Criterion, DecisionProblem, rank
from pfbonferroni.tnorms import validate_spec

ERP = erp_problem()
X = np.array([[list(cell) for cell in row] for row in ERP.matrix])
WEIGHTS = list(ERP.weights)


def test_params_round_trip_through_clone():
    est = PFBonferroniRanker(family="dombi", gamma=3.0, p=2.0, q=1.0, weights=WEIGHTS)
    copy = clone(est)
    assert copy.get_params() == est.get_params()
    assert copy.set_params(p=4.0).p == 4.0


def test_transform_reproduces_aggregated_values():
    out = PFBonferroniAggregator(weights=WEIGHTS).fit_transform(X)
    assert out.shape == (5, 3)
    assert np.max(np.abs(out[0] - [0.3749, 0.5173, 0.0774])) <= 1e-4
    direct = rank(ERP, validate_spec("hamacher", 2.0))
    assert np.array_equal(out, np.array([list(r) for r in direct.aggregated]))


def test_ranker_predicts_ranks():
    est = PFBonferroniRanker(weights=WEIGHTS).fit(X)
    assert est.predict(X).tolist() == [3, 2, 1, 5, 4]
    assert est.ranking_.tolist() == [2, 1, 0, 4, 3]
    assert np.max(np.abs(est.scores_ - [0.2975, 0.3324, 0.4191, 0.2313, 0.2563])) <= 1e-4
    assert est.fit_predict(X).tolist() == [3, 2, 1, 5, 4]


def test_cost_mask_matches_problem_normalization():
    cost = [False, True, False, True]
    est = PFBonferroniRanker(weights=WEIGHTS, cost=cost).fit(X)
    criteria = [Criterion(f"G{j + 1}", "cost" if c else "benefit") for j, c in enumerate(cost)]
    problem = DecisionProblem(ERP.alternatives, criteria, ERP.matrix, ERP.weights)
    expected = rank(problem, validate_spec("hamacher", 2.0))
    assert np.allclose(est.scores_, expected.scores, atol=0, rtol=0)


def test_operators_and_single_row():
    row = X[0]
    for operator in ("pfibm", "pfiwbm", "pfinwbm"):
        assert PFBonferroniAggregator(operator=operator).fit_transform(row).shape == (1, 3)
    with pytest.raises(ValueError):
        PFBonferroniAggregator(operator="mean").fit(X)


def test_validation_errors():
    with pytest.raises(InvalidPFN) as info:
        check_pfn_array([[[0.5, 0.5, 0.5], [0.1, 0.1, 0.1]]])
    assert "X[0][0]" in str(info.value)
    with pytest.raises(InvalidPFN):
        check_pfn_array(np.zeros((2, 3, 2)))
    with pytest.raises(InvalidPFN):
        check_pfn_array([["a", "b", "c"]])
    with pytest.raises(LengthMismatch):
        PFBonferroniAggregator(weights=[0.5, 0.5]).fit(X)
    with pytest.raises(InvalidWeights):
        PFBonferroniAggregator(weights=[0.5, 0.1, 0.1, 0.1]).fit(X)
    with pytest.raises(LengthMismatch):
        PFBonferroniAggregator(cost=[True]).fit(X)
    with pytest.raises(DomainError):
        PFBonferroniAggregator(family="frank", gamma=1.0).fit(X)
    with pytest.raises(NotFittedError):
        PFBonferroniAggregator().transform(X)
    est = PFBonferroniAggregator().fit(X)
    with pytest.raises(LengthMismatch):
        est.transform(X[:, :2])
