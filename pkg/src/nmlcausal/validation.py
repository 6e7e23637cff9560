"""Input checking and column typing shared by the estimator and the CLI."""

from __future__ import annotations

import numpy as np

DISCRETE_THRESHOLD = 20
COLUMN_TYPES = ("discrete", "continuous", "auto")


def check_column(values, name: str = "column") -> np.ndarray:
    """Return a finite 1-D float array."""
    arr = np.asarray(values)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.ravel()
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} is empty")
    try:
        arr = arr.astype(np.float64)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be numeric") from None
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains missing or non-finite values")
    return arr


def check_pair(x, y):
    x = check_column(x, "x")
    y = check_column(y, "y")
    if x.size != y.size:
        raise ValueError(f"x and y differ in length: {x.size} != {y.size}")
    return x, y


def is_integral(values) -> bool:
    arr = np.asarray(values, dtype=np.float64)
    return bool(np.all(arr == np.round(arr)))


def resolve_column_type(values, declared: str = "auto", threshold: int = DISCRETE_THRESHOLD) -> str:
    """``auto`` means discrete iff all values are integers with at most ``threshold`` distinct values."""
    if declared not in COLUMN_TYPES:
        raise ValueError(f"column type must be one of {COLUMN_TYPES}, got {declared!r}")
    if declared != "auto":
        return declared
    arr = np.asarray(values, dtype=np.float64)
    if is_integral(arr) and np.unique(arr).size <= threshold:
        return "discrete"
    return "continuous"


def encode_labels(values, arity=None):
    """Map a discrete column onto labels ``0..m-1``.

    Without ``arity`` the categories are the distinct observed values in
    sorted order.  With ``arity`` the values must already be integer labels
    in ``0..arity-1`` and are kept as they are.

    Returns ``(labels, m)``.
    """
    arr = np.asarray(values)
    if arity is not None:
        arity = int(arity)
        if arity < 1:
            raise ValueError(f"arity must be >= 1, got {arity}")
        if not is_integral(arr):
            raise ValueError("declared-arity columns must hold integer labels")
        labels = np.asarray(arr, dtype=np.float64).astype(np.int64)
        if labels.size and (labels.min() < 0 or labels.max() >= arity):
            raise ValueError(f"labels must lie in 0..{arity - 1} for arity {arity}")
        return labels, arity
    _, labels = np.unique(arr, return_inverse=True)
    labels = labels.astype(np.int64).ravel()
    return labels, int(labels.max()) + 1
