"""Select the causal model with the shortest codelength for a paired sample."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .codelengths import ModelScore, model_codelengths, select
from .continuous import DEFAULT_BINS, cont, grid_scores, make_grid, scale_to_unit, square_grid
from .discrete import ALL_MODELS, PREFERENCE_ORDER, CausalModel, JointCounts
from .function_search import DEFAULT_MAX_SWEEPS
from .validation import DISCRETE_THRESHOLD, check_column, check_pair, encode_labels, resolve_column_type

DATA_KINDS = ("discrete", "mixed_x_cont", "mixed_y_cont", "continuous")

MIN_SAMPLES = 4


@dataclass
class InferenceResult:
    """Outcome of one inference.

    ``per_model`` maps each evaluated model to its best :class:`ModelScore`;
    ``delta`` is the gap between the two shortest finite codelengths in bits
    per sample.
    """

    per_model: dict
    selected: CausalModel
    delta: float
    n: int
    data_kind: str
    warnings: list = field(default_factory=list)
    degenerate: bool = False

    def codelengths(self) -> dict:
        return {m: s.bits for m, s in self.per_model.items()}


def delta_confidence(codelengths, n: int) -> float:
    """``(L2 - L1) / n`` over the two shortest finite codelengths, else 0."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    values = codelengths.values() if isinstance(codelengths, dict) else codelengths
    finite = sorted(v for v in values if v is not None and math.isfinite(v))
    if len(finite) < 2:
        return 0.0
    return (finite[1] - finite[0]) / n


def _check_candidates(candidates) -> list:
    if candidates is None:
        candidates = ALL_MODELS
    parsed = {CausalModel.parse(c) for c in candidates}
    if not parsed:
        raise ValueError("candidate model set must not be empty")
    return [m for m in PREFERENCE_ORDER if m in parsed]


def _finish(per_model, n, data_kind, warnings, degenerate=False) -> InferenceResult:
    for model in list(per_model):
        per_model[model] = ModelScore(*per_model[model])
    selected = select(per_model)
    if selected is None:
        raise RuntimeError("no candidate model is applicable to this sample")
    return InferenceResult(
        per_model=per_model,
        selected=selected,
        delta=delta_confidence({m: s.bits for m, s in per_model.items()}, n),
        n=n,
        data_kind=data_kind,
        warnings=warnings,
        degenerate=degenerate,
    )


def _degenerate_policy(n, candidates, warnings):
    """Fall back to the independence model for tiny samples."""
    if n < MIN_SAMPLES:
        warnings.append(f"sample size {n} < {MIN_SAMPLES}: independence model forced")
        return [CausalModel.INDEPENDENT], True
    return candidates, False


def infer_discrete(x, y, candidates=None, *, max_sweeps=DEFAULT_MAX_SWEEPS, x_arity=None, y_arity=None) -> InferenceResult:
    """Model selection for two categorical columns."""
    x, y = check_pair(x, y)
    candidates = _check_candidates(candidates)
    warnings = []
    x_labels, m_x = encode_labels(x, x_arity)
    y_labels, m_y = encode_labels(y, y_arity)
    n = x.size
    candidates, degenerate = _degenerate_policy(n, candidates, warnings)
    if m_x == 1 or m_y == 1:
        warnings.append("constant column: directed models are inapplicable")
        if not {CausalModel.INDEPENDENT, CausalModel.CONFOUNDED} & set(candidates):
            candidates, degenerate = [CausalModel.INDEPENDENT], True
            warnings.append("independence model forced")
    counts = JointCounts.from_labels(x_labels, y_labels, m_x, m_y)
    per_model = model_codelengths(counts, candidates, max_sweeps)
    for model in candidates:
        if model not in per_model:
            per_model[model] = ModelScore(math.inf)
    return _finish(per_model, n, "discrete", warnings, degenerate)


def infer_continuous(x_raw, y_raw, grid=None, candidates=None, *, max_sweeps=DEFAULT_MAX_SWEEPS) -> InferenceResult:
    """Model selection for two real-valued columns, searching bin pairs jointly with models."""
    x_raw, y_raw = check_pair(x_raw, y_raw)
    if x_raw.size < 2:
        raise ValueError("continuous inference needs at least two samples")
    grid = square_grid(DEFAULT_BINS) if grid is None else make_grid(grid)
    candidates = _check_candidates(candidates)
    warnings = []
    candidates, degenerate = _degenerate_policy(x_raw.size, candidates, warnings)
    xs = scale_to_unit(x_raw)
    ys = scale_to_unit(y_raw)
    if xs.degenerate or ys.degenerate:
        warnings.append("constant column: independence model forced")
        candidates, degenerate = [CausalModel.INDEPENDENT], True
    per_model = grid_scores(xs.values, ys.values, grid, candidates, max_sweeps)
    return _finish(per_model, x_raw.size, "continuous", warnings, degenerate)


def infer_mixed(cont_raw, disc_values, grid_1d=None, candidates=None, *, continuous="x",
                max_sweeps=DEFAULT_MAX_SWEEPS, arity=None) -> InferenceResult:
    """Model selection when one column is real-valued and the other categorical.

    ``continuous`` names the role (``"x"`` or ``"y"``) of the real-valued
    column, so ``XTOY`` always means the first named column causes the second.
    The categorical side keeps its arity as bin count; only the continuous
    side's bins are searched.
    """
    if continuous not in ("x", "y"):
        raise ValueError(f"continuous must be 'x' or 'y', got {continuous!r}")
    cont_raw, disc_values = check_pair(cont_raw, disc_values)
    grid_1d = DEFAULT_BINS if grid_1d is None else grid_1d
    bins = sorted({int(m) for m in grid_1d})
    if not bins or bins[0] < 1:
        raise ValueError("one-dimensional grid must hold positive bin counts")
    candidates = _check_candidates(candidates)
    warnings = []
    n = cont_raw.size
    candidates, degenerate = _degenerate_policy(n, candidates, warnings)
    labels, m_d = encode_labels(disc_values, arity)
    cs = scale_to_unit(cont_raw)
    if m_d == 1 or cs.degenerate:
        warnings.append("constant column: independence model forced")
        candidates, degenerate = [CausalModel.INDEPENDENT], True
    d_unit = cont(labels, m_d)
    if continuous == "x":
        x_unit, y_unit, grid = cs.values, d_unit, [(m, m_d) for m in bins]
        kind = "mixed_x_cont"
    else:
        x_unit, y_unit, grid = d_unit, cs.values, [(m_d, m) for m in bins]
        kind = "mixed_y_cont"
    per_model = grid_scores(x_unit, y_unit, grid, candidates, max_sweeps)
    return _finish(per_model, n, kind, warnings, degenerate)


def infer(x, y, x_type="auto", y_type="auto", *, candidates=None, grid=None, max_sweeps=DEFAULT_MAX_SWEEPS,
          threshold=None, x_arity=None, y_arity=None) -> InferenceResult:
    """Dispatch on the (resolved) column types to the matching entry point."""
    x = check_column(x, "x")
    y = check_column(y, "y")
    threshold = DISCRETE_THRESHOLD if threshold is None else threshold
    tx = resolve_column_type(x, x_type, threshold)
    ty = resolve_column_type(y, y_type, threshold)
    bins = DEFAULT_BINS if grid is None else grid
    if tx == "discrete" and ty == "discrete":
        return infer_discrete(x, y, candidates, max_sweeps=max_sweeps, x_arity=x_arity, y_arity=y_arity)
    if tx == "continuous" and ty == "continuous":
        return infer_continuous(x, y, square_grid(bins), candidates, max_sweeps=max_sweeps)
    if tx == "continuous":
        return infer_mixed(x, y, bins, candidates, continuous="x", max_sweeps=max_sweeps, arity=y_arity)
    return infer_mixed(y, x, bins, candidates, continuous="y", max_sweeps=max_sweeps, arity=x_arity)

