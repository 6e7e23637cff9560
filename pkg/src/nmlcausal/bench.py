"""Batch inference over many labelled pairs with confusion matrices and decision-rate curves."""

from __future__ import annotations

import csv
import json
import math
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .datagen import ScenarioSpec, column_types, generate
from .discrete import PREFERENCE_ORDER, CausalModel
from .function_search import DEFAULT_MAX_SWEEPS
from .report import dumps
from .selector import infer
from .tabular import ColumnSpec, InputError, read_pair

THREADS_ENV = "CLOUD_THREADS"
DECISION_RATES = tuple(range(10, 101, 10))
MANIFEST_KEYS = ("file", "data_kind", "truth", "variant", "n", "seed")


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class TrialOutcome:
    index: int
    data_kind: str
    truth: str
    variant: Optional[str]
    n: int
    selected: Optional[str]
    delta: Optional[float]
    error: Optional[str] = None
    file: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    @property
    def correct(self) -> bool:
        return self.ok and self.selected == self.truth


@dataclass(frozen=True)
class InferenceOptions:
    bins: Optional[tuple] = None
    models: Optional[tuple] = None
    max_sweeps: int = DEFAULT_MAX_SWEEPS


def worker_count(requested: Optional[int] = None) -> int:
    """Worker processes: ``requested``, else ``$CLOUD_THREADS``, else the CPU count."""
    if requested is None:
        env = os.environ.get(THREADS_ENV)
        if env:
            try:
                requested = int(env)
            except ValueError:
                raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        else:
            requested = os.cpu_count() or 1
    if requested < 1:
        raise ValueError(f"worker count must be >= 1, got {requested}")
    return requested


def _infer_pair(x, y, data_kind, options: InferenceOptions):
    x_type, y_type = column_types(data_kind)
    result = infer(x, y, x_type, y_type, candidates=options.models, grid=options.bins,
                   max_sweeps=options.max_sweeps)
    return result.selected.value, result.delta


def _run_file_task(task):
    index, entry, base_dir, options = task
    path = Path(entry["file"])
    if not path.is_absolute():
        path = Path(base_dir) / path
    common = dict(index=index, data_kind=entry["data_kind"], truth=CausalModel.parse(entry["truth"]).value,
                  variant=entry.get("variant"), n=int(entry["n"]), file=entry["file"])
    try:
        x, y, _ = read_pair(path, ColumnSpec(0), ColumnSpec(1))
        selected, delta = _infer_pair(x, y, entry["data_kind"], options)
    except (InputError, ValueError, RuntimeError) as exc:
        return TrialOutcome(selected=None, delta=None, error=str(exc), **common)
    return TrialOutcome(selected=selected, delta=delta, **common)


def _run_spec_task(task):
    index, spec, options = task
    x, y = generate(spec)
    selected, delta = _infer_pair(x, y, spec.data_kind, options)
    return TrialOutcome(index, spec.data_kind, spec.truth.value, spec.variant, spec.n, selected, delta)


def _map(func, tasks, workers):
    # Results come back in task order whatever the worker count.
    if workers == 1 or len(tasks) <= 1:
        return [func(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(func, tasks, chunksize=max(1, len(tasks) // (8 * workers))))


def load_manifest(path) -> list:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from None
    entries = data.get("trials") if isinstance(data, dict) else data
    if not isinstance(entries, list) or not entries:
        raise ManifestError(f"manifest {path} lists no trials")
    for i, entry in enumerate(entries):
        missing = [k for k in ("file", "data_kind", "truth", "n") if k not in entry]
        if missing:
            raise ManifestError(f"manifest entry {i} lacks {missing}")
    return entries


def run_manifest(entries, base_dir=".", options=InferenceOptions(), workers=None) -> list:
    tasks = [(i, entry, str(base_dir), options) for i, entry in enumerate(entries)]
    return _map(_run_file_task, tasks, worker_count(workers))


def run_specs(specs, options=InferenceOptions(), workers=None) -> list:
    """Generate and score scenarios in memory, without touching the file system."""
    tasks = [(i, spec, options) for i, spec in enumerate(specs)]
    return _map(_run_spec_task, tasks, worker_count(workers))


def confusion_matrix(outcomes) -> list:
    """Rows are true models, columns selected models, both in preference order."""
    order = [m.value for m in PREFERENCE_ORDER]
    matrix = [[0] * len(order) for _ in order]
    for o in outcomes:
        if o.ok:
            matrix[order.index(o.truth)][order.index(o.selected)] += 1
    return matrix


def accuracy(outcomes) -> Optional[float]:
    done = [o for o in outcomes if o.ok]
    if not done:
        return None
    return sum(o.correct for o in done) / len(done)


def decision_rate_curve(outcomes, rates=DECISION_RATES) -> list:
    """Accuracy among the top ``d`` percent of trials ranked by confidence.

    Trials are sorted by delta, largest first, with ties kept in input order.
    """
    done = sorted((o for o in outcomes if o.ok), key=lambda o: (-o.delta, o.index))
    curve = []
    for d in rates:
        if not done:
            curve.append({"rate": d, "count": 0, "accuracy": None})
            continue
        k = max(1, math.ceil(d * len(done) / 100))
        top = done[:k]
        curve.append({"rate": d, "count": k, "accuracy": sum(o.correct for o in top) / k})
    return curve


def summarize(outcomes) -> dict:
    groups = defaultdict(list)
    scenarios = defaultdict(list)
    for o in outcomes:
        groups[(o.data_kind, o.n)].append(o)
        scenarios[(o.data_kind, o.truth, o.variant or "", o.n)].append(o)
    return {
        "models": [m.value for m in PREFERENCE_ORDER],
        "trials": len(outcomes),
        "failed": sum(not o.ok for o in outcomes),
        "accuracy": accuracy(outcomes),
        "groups": [
            {"data_kind": kind, "n": n, "trials": len(g), "accuracy": accuracy(g), "confusion": confusion_matrix(g)}
            for (kind, n), g in sorted(groups.items())
        ],
        "scenarios": [
            {"data_kind": kind, "truth": truth, "variant": variant or None, "n": n, "trials": len(g),
             "accuracy": accuracy(g)}
            for (kind, truth, variant, n), g in sorted(scenarios.items())
        ],
        "decision_rate": decision_rate_curve(outcomes),
        "errors": [{"index": o.index, "file": o.file, "error": o.error} for o in outcomes if not o.ok],
    }


def write_outputs(summary: dict, outcomes, output) -> list:
    """Write ``<output>.json`` plus confusion, decision-rate and per-trial CSVs."""
    output = Path(output)
    stem = output.with_suffix("") if output.suffix == ".json" else output
    stem.parent.mkdir(parents=True, exist_ok=True)
    paths = [stem.with_suffix(".json"), Path(f"{stem}_confusion.csv"), Path(f"{stem}_decision_rate.csv"),
             Path(f"{stem}_trials.csv")]
    paths[0].write_text(dumps(summary), encoding="utf-8")
    models = summary["models"]
    with open(paths[1], "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["data_kind", "n", "truth"] + models)
        for g in summary["groups"]:
            for truth, row in zip(models, g["confusion"]):
                w.writerow([g["data_kind"], g["n"], truth] + row)
    with open(paths[2], "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["rate", "count", "accuracy"])
        for point in summary["decision_rate"]:
            w.writerow([point["rate"], point["count"], "" if point["accuracy"] is None else repr(point["accuracy"])])
    with open(paths[3], "w", newline="", encoding="utf-8") as fh:
        fields = list(asdict(outcomes[0]).keys()) if outcomes else []
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(fields)
        for o in outcomes:
            w.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v) for v in asdict(o).values()])
    return paths


def scenario_specs(data_kind, truth, n, trials, seed=0, variant=None) -> list:
    return [ScenarioSpec(data_kind, truth, n, seed=seed, variant=variant, trial=t) for t in range(trials)]
