"""Histogram-based codelengths for continuous and mixed pairs.

Continuous columns are scaled into ``[0, 1)``, discretized into equal-width
cells and scored with the discrete codelengths plus a per-axis correction
``-n log2 m + log*(m)`` for recovering the values within each cell.  The
additive precision constant is the same for every model and bin count and
is dropped.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .codelengths import ModelScore, model_codelengths
from .discrete import CausalModel, JointCounts, ModelInapplicableError
from .function_search import DEFAULT_MAX_SWEEPS
from .nml import log_star

DEFAULT_BINS = (2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 24, 32)

_BELOW_ONE = np.nextafter(1.0, 0.0)


class ScaledSeries(NamedTuple):
    """Values mapped into ``[0, 1)`` plus the affine transform that produced them."""

    values: np.ndarray
    low: float
    high: float
    degenerate: bool


def scale_to_unit(raw) -> ScaledSeries:
    """Min-max scale into ``[0, 1)``; the maximum lands on the largest float below 1.

    A constant column maps to zeros and is flagged degenerate.
    """
    arr = np.asarray(raw, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError("cannot scale an empty column")
    if not np.all(np.isfinite(arr)):
        raise ValueError("column contains non-finite values")
    low, high = float(arr.min()), float(arr.max())
    if high == low:
        return ScaledSeries(np.zeros_like(arr), low, high, True)
    scaled = (arr - low) / (high - low)
    scaled = np.clip(scaled, 0.0, _BELOW_ONE)
    return ScaledSeries(scaled, low, high, False)


def check_unit(x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError("empty series")
    if not np.all((arr >= 0.0) & (arr < 1.0)):
        raise ValueError("continuous series must lie in [0, 1)")
    return arr


def disc(x, m: int) -> np.ndarray:
    """Cell labels of ``x`` for ``m`` equal cells ``[k/m, (k+1)/m)``.

    Membership is decided against the boundaries ``k / m`` as floats, so
    ``disc(cont(y, m), m) == y`` holds exactly.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    x = check_unit(x)
    labels = np.minimum(np.floor(x * m).astype(np.int64), m - 1)
    labels += (labels + 1 < m) & ((labels + 1) / m <= x)
    labels -= (labels > 0) & (labels / m > x)
    return labels


def cont(y, m: int) -> np.ndarray:
    """Map labels in ``0..m-1`` onto the left edges ``y / m`` of their cells."""
    y = np.asarray(y)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if y.size and (y.min() < 0 or y.max() >= m):
        raise ValueError(f"labels must lie in 0..{m - 1}")
    return y.astype(np.float64) / m


def l_c2d(m: int, n: int) -> float:
    """Correction from a discretized to a continuous codelength: ``-n log2 m + log*(m)``."""
    return -n * math.log2(m) + log_star(m)


def make_grid(pairs) -> tuple[tuple[int, int], ...]:
    """Validate candidate bin pairs; returns them unique and sorted."""
    out = set()
    for pair in pairs:
        m_x, m_y = (int(v) for v in pair)
        if m_x < 1 or m_y < 1:
            raise ValueError(f"bin counts must be >= 1, got {pair}")
        out.add((m_x, m_y))
    if not out:
        raise ValueError("bin grid must not be empty")
    return tuple(sorted(out))


def square_grid(bins=DEFAULT_BINS) -> tuple[tuple[int, int], ...]:
    return make_grid((a, b) for a in bins for b in bins)


def codelength_continuous(x, y, m_x: int, m_y: int, model, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> float:
    """Codelength in bits of a unit-scaled pair at one bin resolution."""
    x = check_unit(x)
    y = check_unit(y)
    if x.shape != y.shape:
        raise ValueError("series must have equal length")
    model = CausalModel.parse(model)
    counts = JointCounts.from_labels(disc(x, m_x), disc(y, m_y), m_x, m_y)
    scores = model_codelengths(counts, [model], max_sweeps)
    if model not in scores:
        raise ModelInapplicableError(f"{model.value} is undefined for bins ({m_x}, {m_y})")
    return scores[model].bits + l_c2d(m_x, x.size) + l_c2d(m_y, x.size)


def grid_scores(x, y, grid, models, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> dict:
    """Per-model minimum of the continuous codelength over the grid.

    Ties between bin pairs go to the lexicographically smallest pair.
    Models inapplicable at every pair get infinite bits.
    """
    x = check_unit(x)
    y = check_unit(y)
    if x.shape != y.shape:
        raise ValueError("series must have equal length")
    grid = make_grid(grid)
    models = [CausalModel.parse(m) for m in models]
    n = x.size
    x_labels = {m: disc(x, m) for m in sorted({p[0] for p in grid})}
    y_labels = {m: disc(y, m) for m in sorted({p[1] for p in grid})}
    best = {m: ModelScore(math.inf) for m in models}
    for m_x, m_y in grid:
        counts = JointCounts.from_labels(x_labels[m_x], y_labels[m_y], m_x, m_y)
        correction = l_c2d(m_x, n) + l_c2d(m_y, n)
        for model, score in model_codelengths(counts, models, max_sweeps).items():
            bits = score.bits + correction
            if bits < best[model].bits:
                best[model] = ModelScore(bits, (m_x, m_y), score.function)
    return best


def grid_min(x, y, grid, model, max_sweeps: int = DEFAULT_MAX_SWEEPS):
    """Minimum codelength of one model over the grid and the minimizing bin pair."""
    model = CausalModel.parse(model)
    score = grid_scores(x, y, grid, [model], max_sweeps)[model]
    return score.bits, score.bins
