"""scikit-learn style wrapper: fit finds a minimum reduced training set,
predict classifies with it, transform keeps only its rows."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from .exact import SearchBudget
from .geometry import rat
from .model import LabelledPointSet, classify
from .solve import solve


def _coord(v, allow_floats: bool) -> Fraction:
    if isinstance(v, (float, np.floating)):
        if not allow_floats:
            raise TypeError(f"float coordinate {v!r} with allow_floats=False")
        if not np.isfinite(v):
            raise ValueError("coordinates must be finite")
        return Fraction(float(v))
    return rat(v)


def check_points(X, allow_floats: bool = True, d: Optional[int] = None) -> List[tuple]:
    """Rows of X as exact rational points (1 or 2 coordinates)."""
    rows = list(X)
    if not rows:
        raise ValueError("X is empty")
    out = []
    for row in rows:
        coords = row if isinstance(row, (list, tuple, np.ndarray)) else [row]
        out.append(tuple(_coord(v, allow_floats) for v in coords))
    dims = {len(p) for p in out}
    if len(dims) != 1 or dims.pop() not in (1, 2):
        raise ValueError("every row of X needs the same dimension, 1 or 2")
    if d is not None and len(out[0]) != d:
        raise ValueError(f"X has dimension {len(out[0])}, fitted data has {d}")
    return out


class NearestNeighborReducer(ClassifierMixin, BaseEstimator):
    """Lossless 1-NN training-set reduction.

    Parameters
    ----------
    exact : force the exhaustive search even where a fast path applies
    node_limit, time_limit : search budget for the exhaustive search
    allow_floats : accept float coordinates (converted exactly)
    """

    def __init__(self, exact: bool = False, node_limit: int = 2_000_000,
                 time_limit: float = 600.0, allow_floats: bool = True):
        self.exact = exact
        self.node_limit = node_limit
        self.time_limit = time_limit
        self.allow_floats = allow_floats

    def fit(self, X, y):
        pts = check_points(X, self.allow_floats)
        y = list(y)
        if len(y) != len(pts):
            raise ValueError("X and y differ in length")
        self.classes_ = np.array(sorted(set(y), key=lambda c: (str(type(c)), c)))
        code = {c: k + 1 for k, c in enumerate(self.classes_.tolist())}
        self.training_set_ = LabelledPointSet(pts, [code[c] for c in y], len(self.classes_))
        budget = SearchBudget(node_limit=self.node_limit, time_limit=self.time_limit)
        self.report_ = solve(self.training_set_, exact=self.exact, budget=budget)
        self.subset_ = np.array(self.report_.subset, dtype=int)
        self.reduced_set_ = self.training_set_.subset(self.report_.subset)
        self.n_features_in_ = self.training_set_.d
        return self

    def predict_sets(self, X) -> List[frozenset]:
        """Full label set per query; more than one label on the boundary."""
        check_is_fitted(self, "reduced_set_")
        pts = check_points(X, self.allow_floats, self.n_features_in_)
        return [frozenset(self.classes_[c - 1] for c in classify(q, self.reduced_set_)) for q in pts]

    def predict(self, X):
        """One label per query; ties on the boundary go to the first class."""
        check_is_fitted(self, "reduced_set_")
        pts = check_points(X, self.allow_floats, self.n_features_in_)
        return np.array([self.classes_[min(classify(q, self.reduced_set_)) - 1] for q in pts])

    def transform(self, X):
        """The rows of the training data that make up the reduced set."""
        check_is_fitted(self, "reduced_set_")
        if len(X) != self.training_set_.n:
            raise ValueError("transform expects the data passed to fit")
        return np.asarray(X, dtype=object)[self.subset_]

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y).transform(X)
