"""Evaluate several causal-model codelengths on one contingency table."""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .discrete import (
    CausalModel,
    PREFERENCE_ORDER,
    JointCounts,
    codelength_confounded,
    codelength_directed,
    codelength_indep,
)
from .function_search import DEFAULT_MAX_SWEEPS, optimize_function


class ModelScore(NamedTuple):
    bits: float
    bins: Optional[tuple[int, int]] = None
    function: Optional[tuple[int, ...]] = None


def directed_applicable(m_x: int, m_y: int) -> bool:
    return m_x >= 2 and m_y >= 2


def model_codelengths(counts: JointCounts, models, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> dict:
    """Discrete codelength of each requested model.

    Directed models with a degenerate arity are left out of the result.
    Directed entries carry the fitted function (for ``YTOX`` it maps Y to X).
    """
    out = {}
    for model in models:
        model = CausalModel.parse(model)
        if model is CausalModel.INDEPENDENT:
            out[model] = ModelScore(codelength_indep(counts))
        elif model is CausalModel.CONFOUNDED:
            out[model] = ModelScore(codelength_confounded(counts))
        elif directed_applicable(counts.m_x, counts.m_y):
            oriented = counts if model is CausalModel.XTOY else counts.transpose()
            f = optimize_function(oriented, max_sweeps)
            out[model] = ModelScore(
                codelength_directed(counts, model, f), function=tuple(int(v) for v in f)
            )
    return out


def select(scores: dict, tol: float = 1e-9):
    """Argmin model with the fixed preference order on ties; ``None`` if nothing is finite."""
    finite = [(m, s.bits) for m, s in scores.items() if np.isfinite(s.bits)]
    if not finite:
        return None
    best = min(b for _, b in finite)
    for model in PREFERENCE_ORDER:
        if model in scores and np.isfinite(scores[model].bits) and scores[model].bits <= best + tol:
            return model
    return None
