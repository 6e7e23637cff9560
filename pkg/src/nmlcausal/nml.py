"""Stochastic-complexity primitives for categorical data.

All codelengths are returned in bits.
"""

from __future__ import annotations

import math
import threading

import numpy as np
from scipy.special import gammaln, logsumexp, xlogy

LN2 = math.log(2.0)

# Rissanen's normalizing constant for the universal integer code.
LOG_STAR_CONSTANT = 2.865064

_cache_lock = threading.Lock()
_complexity_cache: dict[int, np.ndarray] = {}


def _check_positive_int(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return int(value)


def _log_binary_complexity(n: int) -> float:
    """Natural log of C(2, n) by the exact sum over (h, n - h) splits."""
    h = np.arange(n + 1, dtype=np.float64)
    rest = n - h
    terms = (
        gammaln(n + 1.0)
        - gammaln(h + 1.0)
        - gammaln(rest + 1.0)
        + xlogy(h, h / n)
        + xlogy(rest, rest / n)
    )
    return float(logsumexp(terms))


def _complexity_row(n: int, k_max: int) -> np.ndarray:
    """Natural-log complexities ``row[K] = ln C(K, n)`` for K in 1..k_max (row[0] unused)."""
    row = _complexity_cache.get(n)
    if row is not None and len(row) > k_max:
        return row
    with _cache_lock:
        row = _complexity_cache.get(n)
        if row is None:
            row = np.array([np.nan, 0.0, _log_binary_complexity(n)])
        if len(row) <= k_max:
            grown = np.empty(k_max + 1)
            grown[: len(row)] = row
            for k in range(len(row), k_max + 1):
                # C(k, n) = C(k-1, n) + n / (k-2) * C(k-2, n)
                grown[k] = np.logaddexp(grown[k - 1], math.log(n / (k - 2)) + grown[k - 2])
            row = grown
        _complexity_cache[n] = row
    return row


def log_multinomial_complexity(K: int, n: int) -> float:
    """Log2 of the parametric complexity of a K-category model at sample size n.

    Uses the linear-time recurrence of Kontkanen and Myllymaki:
    ``C(1, n) = 1``, ``C(2, n)`` by exact summation and
    ``C(K + 2, n) = C(K + 1, n) + n / K * C(K, n)``, all in log domain.
    Values for a given ``n`` are cached across ``K``.
    """
    K = _check_positive_int(K, "K")
    n = _check_positive_int(n, "n")
    if K == 1:
        return 0.0
    return float(_complexity_row(n, K)[K] / LN2)


def log_star(m: int) -> float:
    """Rissanen's universal codelength of a positive integer, in bits.

    ``log2 c + log2 m + log2 log2 m + ...`` keeping only positive terms.
    """
    m = _check_positive_int(m, "m")
    total = math.log2(LOG_STAR_CONSTANT)
    term = math.log2(m)
    while term > 0:
        total += term
        term = math.log2(term)
    return total


def check_counts(counts) -> np.ndarray:
    """Validate a count vector and return it as a 1-D int64 array."""
    arr = np.asarray(counts)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("counts must be a non-empty 1-D sequence")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.isfinite(arr)) or np.any(arr != np.round(arr)):
            raise ValueError("counts must be integers")
    arr = arr.astype(np.int64)
    if np.any(arr < 0):
        raise ValueError("counts must be nonnegative")
    if arr.sum() < 1:
        raise ValueError("counts must sum to a positive total")
    return arr


def _nll_bits(counts: np.ndarray, n: int) -> float:
    c = counts[counts > 0].astype(np.float64)
    return float(-(c * np.log(c / n)).sum() / LN2)


def categorical_nll(counts) -> float:
    """Maximized negative log-likelihood ``-sum c_k log2(c_k / n)`` (0 log 0 = 0)."""
    arr = check_counts(counts)
    return _nll_bits(arr, int(arr.sum()))


def sc_categorical(counts) -> float:
    """NML codelength of a categorical sample given by its count vector."""
    arr = check_counts(counts)
    n = int(arr.sum())
    return _nll_bits(arr, n) + log_multinomial_complexity(arr.size, n)
