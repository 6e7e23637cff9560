"""Read two numeric columns from a delimiter-separated text file."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .validation import COLUMN_TYPES


class InputError(ValueError):
    """Malformed input file; the message names the offending row or column."""


@dataclass(frozen=True)
class ColumnSpec:
    """A column addressed by header name or zero-based index, plus its declared type."""

    key: Union[str, int]
    declared_type: str = "auto"

    def __post_init__(self):
        if self.declared_type not in COLUMN_TYPES:
            raise ValueError(f"column type must be one of {COLUMN_TYPES}, got {self.declared_type!r}")

    @classmethod
    def parse(cls, text, declared_type="auto") -> "ColumnSpec":
        """Digits select by index, anything else by header name."""
        if isinstance(text, int):
            return cls(text, declared_type)
        text = str(text).strip()
        return cls(int(text) if text.isdigit() else text, declared_type)


DELIMITERS = {"comma": ",", "tab": "\t", "whitespace": None}


def _resolve_delimiter(delimiter: Optional[str], sample: str):
    """Return ``","``, ``"\\t"`` or ``None`` (runs of whitespace)."""
    if delimiter in (None, "auto"):
        if "\t" in sample:
            return "\t"
        if "," in sample:
            return ","
        return None
    if delimiter in DELIMITERS:
        return DELIMITERS[delimiter]
    if delimiter == "\\t":
        return "\t"
    if len(delimiter) != 1:
        raise InputError(f"delimiter must be a single character, got {delimiter!r}")
    return delimiter


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def read_rows(path, delimiter=None):
    """Non-empty rows of ``path`` as ``(line_number, cells)`` pairs."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    lines = [(i + 1, line) for i, line in enumerate(text.splitlines()) if line.strip()]
    if not lines:
        raise InputError(f"{path} holds no data")
    sep = _resolve_delimiter(delimiter, lines[0][1])
    rows = []
    if sep is None:
        for number, line in lines:
            rows.append((number, line.split()))
    else:
        reader = csv.reader((line for _, line in lines), delimiter=sep)
        for (number, _), cells in zip(lines, reader):
            rows.append((number, [c.strip() for c in cells]))
    return rows


def _column_index(spec: ColumnSpec, header, width, label):
    if isinstance(spec.key, int):
        if not 0 <= spec.key < width:
            raise InputError(f"column {label}: index {spec.key} out of range for {width} columns")
        return spec.key
    if header is None:
        raise InputError(f"column {label}: name {spec.key!r} given but the file has no header row")
    if spec.key not in header:
        raise InputError(f"column {label}: no column named {spec.key!r} (have {header})")
    return header.index(spec.key)


def read_pair(path, x: ColumnSpec = ColumnSpec(0), y: ColumnSpec = ColumnSpec(1), delimiter=None, header=None):
    """Load two float columns.

    ``header=None`` detects a header row: the first row is a header when any
    of its cells is not a number.  Returns ``(x, y, names)`` where ``names``
    holds the two column labels.
    """
    rows = read_rows(path, delimiter)
    first = rows[0][1]
    if header is None:
        header = not all(_is_number(c) for c in first)
    names = None
    if header:
        names = first
        rows = rows[1:]
        if not rows:
            raise InputError(f"{path} has a header but no data rows")
    width = len(names) if names is not None else len(rows[0][1])
    ix = _column_index(x, names, width, "x")
    iy = _column_index(y, names, width, "y")
    xs = np.empty(len(rows))
    ys = np.empty(len(rows))
    for k, (number, cells) in enumerate(rows):
        for out, idx in ((xs, ix), (ys, iy)):
            if idx >= len(cells):
                raise InputError(f"row {number}: missing column {idx}")
            cell = cells[idx]
            try:
                value = float(cell)
            except ValueError:
                raise InputError(f"row {number}, column {idx}: non-numeric value {cell!r}") from None
            if not math.isfinite(value):
                raise InputError(f"row {number}, column {idx}: non-finite value {cell!r}")
            out[k] = value
    labels = tuple(names[i] if names is not None else str(i) for i in (ix, iy))
    return xs, ys, labels


def write_pair(path, x, y, names=("x", "y")):
    """Write two columns as CSV with a header; floats use ``repr`` so they read back exactly."""
    def fmt(v):
        v = float(v)
        return str(int(v)) if v.is_integer() and abs(v) < 2**53 else repr(v)

    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"{names[0]},{names[1]}\n")
        for a, b in zip(x, y):
            fh.write(f"{fmt(a)},{fmt(b)}\n")
