"""JSON reports: an inference result plus the provenance needed to reproduce it."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .codelengths import ModelScore
from .discrete import PREFERENCE_ORDER, CausalModel
from .selector import InferenceResult

__version__ = "0.1.0"


def _bits_out(value: float):
    return value if math.isfinite(value) else None


def _bits_in(value) -> float:
    return math.inf if value is None else float(value)


def per_model_to_dict(per_model: dict) -> dict:
    out = {}
    for model in PREFERENCE_ORDER:
        if model not in per_model:
            continue
        score = per_model[model]
        out[model.value] = {
            "bits": _bits_out(score.bits),
            "bins": list(score.bins) if score.bins is not None else None,
            "function": list(score.function) if score.function is not None else None,
        }
    return out


def per_model_from_dict(data: dict) -> dict:
    out = {}
    for name, entry in data.items():
        out[CausalModel.parse(name)] = ModelScore(
            _bits_in(entry["bits"]),
            tuple(entry["bins"]) if entry.get("bins") is not None else None,
            tuple(entry["function"]) if entry.get("function") is not None else None,
        )
    return out


@dataclass
class Report:
    """Serializable view of one inference.

    Infinite codelengths (inapplicable models) are written as ``null``.
    """

    data_kind: str
    n: int
    per_model: dict
    selected: CausalModel
    delta: float
    warnings: list = field(default_factory=list)
    degenerate: bool = False
    provenance: dict = field(default_factory=dict)

    @classmethod
    def from_result(cls, result: InferenceResult, *, input_path=None, scaling=None, grid=None,
                    seed: Optional[int] = None, columns=None) -> "Report":
        provenance = {
            "input": None if input_path is None else str(input_path),
            "columns": None if columns is None else list(columns),
            "scaling": scaling,
            "grid": None if grid is None else [int(b) for b in grid],
            "version": __version__,
            "seed": seed,
        }
        return cls(
            data_kind=result.data_kind,
            n=result.n,
            per_model=dict(result.per_model),
            selected=result.selected,
            delta=result.delta,
            warnings=list(result.warnings),
            degenerate=result.degenerate,
            provenance=provenance,
        )

    def to_dict(self) -> dict:
        return {
            "data_kind": self.data_kind,
            "n": self.n,
            "per_model": per_model_to_dict(self.per_model),
            "selected": self.selected.value,
            "delta": self.delta,
            "warnings": list(self.warnings),
            "degenerate": self.degenerate,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(
            data_kind=data["data_kind"],
            n=int(data["n"]),
            per_model=per_model_from_dict(data["per_model"]),
            selected=CausalModel.parse(data["selected"]),
            delta=float(data["delta"]),
            warnings=list(data.get("warnings", [])),
            degenerate=bool(data.get("degenerate", False)),
            provenance=dict(data.get("provenance", {})),
        )

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def dumps(obj) -> str:
    """Canonical JSON text: fixed key order, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"
