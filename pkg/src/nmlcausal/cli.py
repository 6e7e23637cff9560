"""Command-line entry point: ``nmlcausal infer | gen | bench``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import InferenceOptions, ManifestError, load_manifest, run_manifest, summarize, write_outputs
from .continuous import DEFAULT_BINS, scale_to_unit
from .datagen import DATA_KINDS, ScenarioError, ScenarioSpec, generate
from .discrete import PREFERENCE_ORDER, CausalModel
from .function_search import DEFAULT_MAX_SWEEPS
from .report import Report, dumps
from .selector import infer
from .tabular import ColumnSpec, InputError, read_pair, write_pair
from .validation import DISCRETE_THRESHOLD, encode_labels, resolve_column_type

EXIT_USAGE = 2
EXIT_FAILED_TRIALS = 1


class CliError(Exception):
    pass


def parse_grid(text):
    if text is None:
        return None
    try:
        bins = sorted({int(v) for v in text.split(",") if v.strip()})
    except ValueError:
        raise CliError(f"--grid must be comma-separated integers, got {text!r}") from None
    if not bins or bins[0] < 1:
        raise CliError("--grid needs at least one positive bin count")
    return tuple(bins)


def parse_models(text):
    if text is None:
        return None
    try:
        models = {CausalModel.parse(v) for v in text.split(",") if v.strip()}
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if not models:
        raise CliError("--models must name at least one model")
    return tuple(m.value for m in PREFERENCE_ORDER if m in models)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _seed(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _add_inference_flags(p):
    p.add_argument("--grid", help="comma-separated bin counts tried on each continuous axis")
    p.add_argument("--models", help="candidate models, e.g. indep,xy,yx,conf")
    p.add_argument("--max-sweeps", type=_positive, default=DEFAULT_MAX_SWEEPS,
                   help="function-search sweeps (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nmlcausal", description="Causal model selection by NML codelength.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("infer", help="select a causal model for two columns of a file")
    p.add_argument("input")
    p.add_argument("--x-col", default="0", help="name or zero-based index (default 0)")
    p.add_argument("--y-col", default="1", help="name or zero-based index (default 1)")
    p.add_argument("--x-type", default="auto", choices=("auto", "discrete", "continuous"))
    p.add_argument("--y-type", default="auto", choices=("auto", "discrete", "continuous"))
    p.add_argument("--x-arity", type=_positive)
    p.add_argument("--y-arity", type=_positive)
    p.add_argument("--threshold", type=_positive, default=DISCRETE_THRESHOLD,
                   help="max distinct integers for auto-typed discrete columns")
    p.add_argument("--delimiter", default="auto", help="auto, comma, tab, whitespace or one character")
    header = p.add_mutually_exclusive_group()
    header.add_argument("--header", dest="header", action="store_true", default=None)
    header.add_argument("--no-header", dest="header", action="store_false")
    p.add_argument("--seed", type=_seed, help="recorded in the report; inference itself is deterministic")
    p.add_argument("--output", "-o", help="report path (default stdout)")
    _add_inference_flags(p)

    p = sub.add_parser("gen", help="write synthetic pairs and a manifest")
    p.add_argument("--data-kind", required=True, choices=DATA_KINDS)
    p.add_argument("--truth", required=True, help="indep, xy, yx or conf")
    p.add_argument("--variant", help="noncyclic (discrete, mixed) or linear/cubic (continuous); xy only")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--output", "-o", required=True, help="output directory")

    p = sub.add_parser("bench", help="score every pair in a manifest")
    p.add_argument("manifest")
    p.add_argument("--output", "-o", required=True, help="output prefix for the JSON and CSV files")
    p.add_argument("--threads", type=_positive, help="worker processes (default $CLOUD_THREADS or CPU count)")
    _add_inference_flags(p)
    return parser


def _scaling(values, column_type, arity):
    if column_type == "discrete":
        _, m = encode_labels(values, arity)
        return {"type": "discrete", "arity": m}
    s = scale_to_unit(values)
    return {"type": "continuous", "low": s.low, "high": s.high}


def cmd_infer(args) -> int:
    x_spec = ColumnSpec.parse(args.x_col, args.x_type)
    y_spec = ColumnSpec.parse(args.y_col, args.y_type)
    bins = parse_grid(args.grid)
    models = parse_models(args.models)
    x, y, names = read_pair(args.input, x_spec, y_spec, delimiter=args.delimiter, header=args.header)
    x_type = resolve_column_type(x, args.x_type, args.threshold)
    y_type = resolve_column_type(y, args.y_type, args.threshold)
    result = infer(x, y, x_type, y_type, candidates=models, grid=bins, max_sweeps=args.max_sweeps,
                   threshold=args.threshold, x_arity=args.x_arity, y_arity=args.y_arity)
    uses_grid = "continuous" in (x_type, y_type)
    report = Report.from_result(
        result,
        input_path=args.input,
        columns=names,
        scaling={"x": _scaling(x, x_type, args.x_arity), "y": _scaling(y, y_type, args.y_arity)},
        grid=(bins or DEFAULT_BINS) if uses_grid else None,
        seed=args.seed,
    )
    text = report.to_json()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_gen(args) -> int:
    try:
        truth = CausalModel.parse(args.truth)
        specs = [ScenarioSpec(args.data_kind, truth, args.n, seed=args.seed, variant=args.variant, trial=t)
                 for t in range(args.count)]
    except (ScenarioError, ValueError) as exc:
        raise CliError(str(exc)) from None
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    width = max(4, len(str(args.count - 1)))
    trials = []
    for spec in specs:
        name = f"{spec.data_kind}_{spec.truth.value}_{spec.variant or 'modular'}_n{spec.n}_{spec.trial:0{width}d}.csv"
        x, y = generate(spec)
        write_pair(out / name, x, y)
        trials.append({"file": name, "data_kind": spec.data_kind, "truth": spec.truth.value,
                       "variant": spec.variant, "n": spec.n, "seed": spec.seed, "trial": spec.trial})
    (out / "manifest.json").write_text(dumps({"trials": trials}), encoding="utf-8")
    return 0


def cmd_bench(args) -> int:
    entries = load_manifest(args.manifest)
    options = InferenceOptions(bins=parse_grid(args.grid), models=parse_models(args.models),
                               max_sweeps=args.max_sweeps)
    outcomes = run_manifest(entries, Path(args.manifest).parent, options, workers=args.threads)
    summary = summarize(outcomes)
    write_outputs(summary, outcomes, args.output)
    for err in summary["errors"]:
        print(f"error: trial {err['index']} ({err['file']}): {err['error']}", file=sys.stderr)
    return EXIT_FAILED_TRIALS if summary["failed"] else 0


COMMANDS = {"infer": cmd_infer, "gen": cmd_gen, "bench": cmd_bench}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (CliError, InputError, ManifestError, ScenarioError, ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
