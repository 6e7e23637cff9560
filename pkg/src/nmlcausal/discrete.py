"""Codelengths of the four causal models for a pair of categorical variables."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .nml import LN2, _nll_bits, categorical_nll, log_multinomial_complexity, sc_categorical


class ModelInapplicableError(ValueError):
    """Raised when a causal model cannot be fitted to the given arities."""


class CausalModel(str, enum.Enum):
    INDEPENDENT = "indep"
    XTOY = "xy"
    YTOX = "yx"
    CONFOUNDED = "conf"

    @classmethod
    def parse(cls, value) -> "CausalModel":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {
            "independent": cls.INDEPENDENT,
            "x->y": cls.XTOY,
            "xtoy": cls.XTOY,
            "y->x": cls.YTOX,
            "ytox": cls.YTOX,
            "confounded": cls.CONFOUNDED,
        }
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown causal model {value!r}") from None

    def swapped(self) -> "CausalModel":
        """The model obtained by exchanging the roles of X and Y."""
        return {CausalModel.XTOY: CausalModel.YTOX, CausalModel.YTOX: CausalModel.XTOY}.get(self, self)


# Tie-break on equal codelengths: smaller parametric complexity first.
PREFERENCE_ORDER = (
    CausalModel.INDEPENDENT,
    CausalModel.XTOY,
    CausalModel.YTOX,
    CausalModel.CONFOUNDED,
)
ALL_MODELS = frozenset(PREFERENCE_ORDER)


@dataclass(frozen=True)
class JointCounts:
    """Contingency table ``table[x, y]`` of a paired categorical sample."""

    table: np.ndarray

    def __post_init__(self):
        table = np.asarray(self.table)
        if table.ndim != 2 or min(table.shape) < 1:
            raise ValueError("table must be a non-empty 2-D array")
        if not np.issubdtype(table.dtype, np.integer):
            if np.any(table != np.round(table)):
                raise ValueError("table entries must be integers")
        table = table.astype(np.int64)
        if np.any(table < 0):
            raise ValueError("table entries must be nonnegative")
        if table.sum() < 1:
            raise ValueError("table must hold at least one observation")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_labels(cls, x, y, m_x: int, m_y: int) -> "JointCounts":
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if x.shape != y.shape or x.ndim != 1:
            raise ValueError("label sequences must be 1-D and of equal length")
        if x.size and (x.min() < 0 or x.max() >= m_x or y.min() < 0 or y.max() >= m_y):
            raise ValueError("labels outside the declared arities")
        flat = np.bincount(x * m_y + y, minlength=m_x * m_y)
        return cls(flat.reshape(m_x, m_y))

    @property
    def m_x(self) -> int:
        return self.table.shape[0]

    @property
    def m_y(self) -> int:
        return self.table.shape[1]

    @property
    def n(self) -> int:
        return int(self.table.sum())

    def transpose(self) -> "JointCounts":
        return JointCounts(self.table.T.copy())

    def marginal_x(self) -> np.ndarray:
        return self.table.sum(axis=1)

    def marginal_y(self) -> np.ndarray:
        return self.table.sum(axis=0)


def check_function(f, m_x: int, m_y: int) -> np.ndarray:
    """Validate a function map ``{0..m_x-1} -> {0..m_y-1}``; it must not be constant."""
    f = np.asarray(f)
    if f.shape != (m_x,):
        raise ValueError(f"function must have length {m_x}, got shape {f.shape}")
    f = f.astype(np.int64)
    if np.any(f < 0) or np.any(f >= m_y):
        raise ValueError(f"function values must lie in 0..{m_y - 1}")
    if m_x >= 2 and np.all(f == f[0]):
        raise ValueError("function must not be constant")
    return f


def _joint_nll(counts: JointCounts) -> float:
    return _nll_bits(counts.table.ravel(), counts.n)


def codelength_indep(counts: JointCounts) -> float:
    n = counts.n
    return (
        _nll_bits(counts.marginal_x(), n)
        + _nll_bits(counts.marginal_y(), n)
        + log_multinomial_complexity(counts.m_x, n)
        + log_multinomial_complexity(counts.m_y, n)
    )


def codelength_confounded(counts: JointCounts) -> float:
    return sc_categorical(counts.table.ravel())


def log_function_count(m_x: int, m_y: int) -> float:
    """Log2 of the number of non-constant maps up to a constant shift, ``m_y**(m_x-1) - 1``."""
    if m_x < 2 or m_y < 2:
        raise ModelInapplicableError(
            f"directed model needs both arities >= 2, got ({m_x}, {m_y})"
        )
    e = m_x - 1
    # log2(m_y**e - 1) = e log2 m_y + log2(1 - m_y**-e)
    return e * math.log2(m_y) + math.log1p(-(float(m_y) ** -e)) / LN2


def residual_counts(counts: JointCounts, f) -> np.ndarray:
    """Counts of ``(y - f(x)) mod m_y``: ``r[k] = sum_x table[x, (f(x) + k) mod m_y]``."""
    f = np.asarray(f, dtype=np.int64)
    m_x, m_y = counts.table.shape
    if f.shape != (m_x,):
        raise ValueError(f"function must have length {m_x}, got shape {f.shape}")
    if np.any(f < 0) or np.any(f >= m_y):
        raise ValueError(f"function values must lie in 0..{m_y - 1}")
    cols = (f[:, None] + np.arange(m_y)[None, :]) % m_y
    return np.take_along_axis(counts.table, cols, axis=1).sum(axis=0)


def codelength_directed(counts: JointCounts, direction, f_hat) -> float:
    """Two-part codelength of a directed additive-noise model.

    For ``YTOX`` the table is transposed and ``f_hat`` maps Y labels to X labels.
    """
    direction = CausalModel.parse(direction)
    if direction is CausalModel.YTOX:
        counts = counts.transpose()
    elif direction is not CausalModel.XTOY:
        raise ValueError(f"direction must be xy or yx, got {direction.value}")
    function_bits = log_function_count(counts.m_x, counts.m_y)
    f_hat = check_function(f_hat, counts.m_x, counts.m_y)
    n = counts.n
    return (
        _nll_bits(counts.marginal_x(), n)
        + categorical_nll(residual_counts(counts, f_hat))
        + log_multinomial_complexity(counts.m_x, n)
        + log_multinomial_complexity(counts.m_y, n)
        + function_bits
    )
