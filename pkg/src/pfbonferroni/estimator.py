"""scikit-learn style wrappers around the aggregation operators.

A decision matrix is an array of shape ``(m, n, 3)``: ``m`` alternatives,
``n`` criteria, and ``(mu, eta, nu)`` in the last axis.

>>> import numpy as np
>>> X = np.array([[[0.5, 0.2, 0.2], [0.4, 0.3, 0.2]]])
>>> PFBonferroniAggregator(family="product").fit_transform(X).shape
(1, 3)
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bonferroni import BonferroniParams, WeightVector, pfibm, pfinwbm, pfiwbm
from .exceptions import InvalidPFN, LengthMismatch
from .pfn import PFN, SUM_TOLERANCE, score, sort_desc
from .tnorms import validate_spec

OPERATORS = {"pfinwbm": pfinwbm, "pfiwbm": pfiwbm, "pfibm": pfibm}


def check_pfn_array(X) -> np.ndarray:
    """Return ``X`` as a float array of shape ``(m, n, 3)`` holding valid PFNs.

    A single row of shape ``(n, 3)`` is promoted to ``(1, n, 3)``.  The first
    invalid cell is reported as :class:`InvalidPFN` with its ``[i][j]`` location.
    """
    try:
        arr = np.asarray(X, dtype=float)
    except (TypeError, ValueError):
        raise InvalidPFN("decision matrix is not numeric") from None
    if arr.ndim == 2:
        arr = arr[np.newaxis]
    if arr.ndim != 3 or arr.shape[-1] != 3:
        raise InvalidPFN(f"expected shape (m, n, 3), got {arr.shape}")
    bad = ~np.isfinite(arr).all(axis=-1) | (arr < 0).any(axis=-1) | (arr > 1).any(axis=-1)
    bad |= arr.sum(axis=-1) > 1.0 + SUM_TOLERANCE
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise InvalidPFN(f"{arr[i, j].tolist()} is not a picture fuzzy number", location=f"X[{i}][{j}]")
    return arr


def check_weights(weights, n: int) -> WeightVector:
    """Uniform weights when ``weights`` is None, otherwise a validated vector of length ``n``."""
    if weights is None:
        return WeightVector((1.0 / n,) * n)
    w = WeightVector(tuple(np.asarray(weights, dtype=float).ravel()))
    if len(w) != n:
        raise LengthMismatch(f"{len(w)} weights for {n} criteria")
    return w


class PFBonferroniAggregator(TransformerMixin, BaseEstimator):
    """Aggregate each row of a picture fuzzy decision matrix to one PFN.

    Parameters
    ----------
    family, gamma : t-norm family and its parameter.
    p, q : Bonferroni exponents, both positive.
    operator : ``"pfinwbm"`` (default), ``"pfiwbm"`` or ``"pfibm"``.
    weights : criterion weights; uniform when None.  Ignored by ``pfibm``.
    cost : optional boolean mask of cost criteria, complemented before aggregation.
    """

    def __init__(self, family="hamacher", gamma=2.0, p=1.0, q=1.0, operator="pfinwbm", weights=None, cost=None):
        self.family = family
        self.gamma = gamma
        self.p = p
        self.q = q
        self.operator = operator
        self.weights = weights
        self.cost = cost

    def fit(self, X, y=None):
        X = check_pfn_array(X)
        if self.operator not in OPERATORS:
            raise ValueError(f"operator must be one of {sorted(OPERATORS)}, got {self.operator!r}")
        self.spec_ = validate_spec(self.family, self.gamma)
        self.params_ = BonferroniParams(self.p, self.q)
        self.n_features_in_ = X.shape[1]
        self.weights_ = check_weights(self.weights, self.n_features_in_)
        cost = np.zeros(self.n_features_in_, bool) if self.cost is None else np.asarray(self.cost, bool)
        if cost.shape != (self.n_features_in_,):
            raise LengthMismatch(f"cost mask has shape {cost.shape}, expected ({self.n_features_in_},)")
        self.cost_ = cost
        return self

    def _rows(self, X):
        check_is_fitted(self, "spec_")
        X = check_pfn_array(X)
        if X.shape[1] != self.n_features_in_:
            raise LengthMismatch(f"X has {X.shape[1]} criteria, fitted with {self.n_features_in_}")
        X = X.copy()
        X[:, self.cost_] = X[:, self.cost_][..., ::-1]
        return X

    def aggregate(self, X) -> list:
        """Aggregated values as :class:`PFN` objects."""
        fn = OPERATORS[self.operator]
        out = []
        for row in self._rows(X):
            xs = [PFN(*cell) for cell in row]
            if self.operator == "pfibm":
                out.append(fn(self.spec_, self.params_, xs))
            else:
                out.append(fn(self.spec_, self.params_, self.weights_, xs))
        return out

    def transform(self, X) -> np.ndarray:
        return np.array([r.as_list() for r in self.aggregate(X)], dtype=float).reshape(-1, 3)


class PFBonferroniRanker(PFBonferroniAggregator):
    """Rank alternatives by their aggregated values.

    ``fit`` ranks the training matrix and stores ``aggregated_``, ``scores_``
    and ``ranking_`` (indices best first).  ``predict`` returns 1-based rank
    positions for any matrix with the same criteria.
    """

    def fit(self, X, y=None):
        super().fit(X)
        aggregated = self.aggregate(X)
        self.aggregated_ = aggregated
        self.scores_ = np.array([score(r) for r in aggregated])
        self.ranking_ = np.array(sort_desc(aggregated), dtype=int)
        return self

    def score_samples(self, X) -> np.ndarray:
        return np.array([score(r) for r in self.aggregate(X)])

    def predict(self, X) -> np.ndarray:
        order = sort_desc(self.aggregate(X))
        ranks = np.empty(len(order), dtype=int)
        ranks[order] = np.arange(1, len(order) + 1)
        return ranks

    def fit_predict(self, X, y=None) -> np.ndarray:
        self.fit(X)
        ranks = np.empty(len(self.ranking_), dtype=int)
        ranks[self.ranking_] = np.arange(1, len(self.ranking_) + 1)
        return ranks
