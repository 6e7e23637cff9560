"""Maximum-likelihood search for the regression function of a directed model.

Coordinate ascent over function values, started from the per-row mode.
Only the residual likelihood depends on ``f``, so updates compare residual
negative log-likelihoods directly.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .discrete import JointCounts, ModelInapplicableError, check_function, residual_counts
from .nml import categorical_nll

DEFAULT_MAX_SWEEPS = 10

# Absolute tolerance (nats) below which two candidate likelihoods count as tied.
_TIE_TOL = 1e-9


def _require_arities(counts: JointCounts):
    if counts.m_x < 2 or counts.m_y < 2:
        raise ModelInapplicableError(
            f"function search needs both arities >= 2, got ({counts.m_x}, {counts.m_y})"
        )


@lru_cache(maxsize=64)
def _xlogx_table(n: int) -> np.ndarray:
    k = np.arange(n + 1, dtype=np.float64)
    out = np.zeros(n + 1)
    out[1:] = k[1:] * np.log(k[1:])
    out.setflags(write=False)
    return out


def init_function(counts: JointCounts) -> np.ndarray:
    """Per-row mode of the table, repaired if the result is constant.

    Ties go to the smallest y.  A constant result has its entry at the row
    with the largest runner-up count replaced by that runner-up value.
    """
    _require_arities(counts)
    table = counts.table
    f = table.argmax(axis=1)
    if np.all(f == f[0]):
        rows = np.arange(counts.m_x)
        masked = table.copy()
        masked[rows, f] = -1
        second = masked.argmax(axis=1)
        x = int(masked[rows, second].argmax())
        f[x] = second[x]
    return f.astype(np.int64)


def conditional_nll(counts: JointCounts, f) -> float:
    """Negative log-likelihood (bits) of the residuals ``(y - f(x)) mod m_y``."""
    return categorical_nll(residual_counts(counts, f))


def optimize_function(counts: JointCounts, J: int = DEFAULT_MAX_SWEEPS, *, trace=None) -> np.ndarray:
    """Estimate the regression function by coordinate ascent.

    Parameters
    ----------
    counts : JointCounts
        Table oriented cause-by-effect.
    J : int
        Maximum number of sweeps over the cause values.
    trace : list, optional
        If given, the residual NLL in bits is appended after initialization
        and after every accepted update.

    Returns
    -------
    numpy.ndarray
        Non-constant map from cause labels to effect labels.
    """
    if isinstance(J, bool) or int(J) != J or J < 1:
        raise ValueError(f"J must be a positive integer, got {J!r}")
    _require_arities(counts)
    table = counts.table
    m_x, m_y = table.shape
    xlogx = _xlogx_table(counts.n)

    # shifted[x, c, k] = table[x, (c + k) mod m_y]: residual contribution of row x if f(x) = c
    idx = (np.arange(m_y)[:, None] + np.arange(m_y)[None, :]) % m_y
    shifted = table[:, idx]

    f = init_function(counts)
    resid = shifted[np.arange(m_x), f].sum(axis=0)
    if trace is not None:
        trace.append(categorical_nll(resid))

    for _ in range(int(J)):
        changed = False
        for x in range(m_x):
            current = f[x]
            base = resid - shifted[x, current]
            score = xlogx[base[None, :] + shifted[x]].sum(axis=1)
            others = np.delete(f, x)
            if np.all(others == others[0]):
                score[others[0]] = -np.inf
            best = score.max()
            if score[current] >= best - _TIE_TOL:
                continue
            new = int(np.flatnonzero(score >= best - _TIE_TOL)[0])
            f[x] = new
            resid = base + shifted[x, new]
            changed = True
            if trace is not None:
                trace.append(categorical_nll(resid))
        if not changed:
            break
    return check_function(f, m_x, m_y)
