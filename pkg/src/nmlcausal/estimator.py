"""scikit-learn style wrapper around :func:`nmlcausal.selector.infer`."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_consistent_length

from .function_search import DEFAULT_MAX_SWEEPS
from .selector import infer
from .validation import DISCRETE_THRESHOLD


class CausalPairSelector(BaseEstimator):
    """Pick independent, X -> Y, Y -> X or confounded for one pair of variables.

    Parameters
    ----------
    x_type, y_type : {"auto", "discrete", "continuous"}
        Column types. ``auto`` treats integer columns with at most
        ``threshold`` distinct values as discrete.
    models : iterable of str or None
        Candidate models (``indep``, ``xy``, ``yx``, ``conf``); all by default.
    bins : iterable of int or None
        Bin counts tried on each continuous axis.
    max_sweeps : int
        Coordinate-ascent sweeps of the function search.
    threshold : int
        Distinct-value limit for ``auto`` typing.
    x_arity, y_arity : int or None
        Declared alphabet sizes for discrete columns already coded ``0..m-1``.

    Attributes
    ----------
    result_ : InferenceResult
    selected_ : CausalModel
    codelengths_ : dict
        Model value -> codelength in bits.
    delta_ : float
        Gap between the two shortest codelengths, bits per sample.
    data_kind_ : str
    """

    def __init__(self, x_type="auto", y_type="auto", models=None, bins=None,
                 max_sweeps=DEFAULT_MAX_SWEEPS, threshold=DISCRETE_THRESHOLD, x_arity=None, y_arity=None):
        self.x_type = x_type
        self.y_type = y_type
        self.models = models
        self.bins = bins
        self.max_sweeps = max_sweeps
        self.threshold = threshold
        self.x_arity = x_arity
        self.y_arity = y_arity

    def _split(self, X, y):
        if y is None:
            X = check_array(X, dtype=np.float64, ensure_min_samples=1)
            if X.shape[1] != 2:
                raise ValueError(f"expected two columns, got {X.shape[1]}")
            return X[:, 0], X[:, 1]
        x = check_array(X, dtype=np.float64, ensure_2d=False)
        y = check_array(y, dtype=np.float64, ensure_2d=False)
        check_consistent_length(x, y)
        return x.ravel(), y.ravel()

    def fit(self, X, y=None):
        """Fit on an ``(n, 2)`` array, or on two columns passed as ``X`` and ``y``."""
        x, y = self._split(X, y)
        self.result_ = infer(
            x, y, self.x_type, self.y_type,
            candidates=self.models,
            grid=self.bins,
            max_sweeps=self.max_sweeps,
            threshold=self.threshold,
            x_arity=self.x_arity,
            y_arity=self.y_arity,
        )
        self.selected_ = self.result_.selected
        self.codelengths_ = {m.value: bits for m, bits in self.result_.codelengths().items()}
        self.delta_ = self.result_.delta
        self.data_kind_ = self.result_.data_kind
        self.n_samples_ = self.result_.n
        return self
