import json
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nmlcausal.codelengths import ModelScore
from nmlcausal.discrete import CausalModel
from nmlcausal.report import Report
from nmlcausal.selector import infer
from nmlcausal.tabular import ColumnSpec, InputError, read_pair, write_pair


def test_read_comma_with_header(tmp_path):
    p = tmp_path / "a.csv"
    p.write_text("a,b,c\n1,2.5,3\n4,5,6\n")
    x, y, names = read_pair(p, ColumnSpec.parse("c"), ColumnSpec.parse("0"))
    np.testing.assert_array_equal(x, [3, 6])
    np.testing.assert_array_equal(y, [1, 4])
    assert names == ("c", "a")


def test_read_tab_and_whitespace(tmp_path):
    p = tmp_path / "t.tsv"
    p.write_text("1\t2\n3\t4\n")
    x, y, names = read_pair(p)
    np.testing.assert_array_equal(y, [2, 4])
    assert names == ("0", "1")
    p = tmp_path / "w.txt"
    p.write_text("  1.5   2 \n3  4e1\n\n")
    x, y, _ = read_pair(p)
    np.testing.assert_array_equal(y, [2, 40])


def test_explicit_delimiter(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("1;2\n3;4\n")
    x, y, _ = read_pair(p, delimiter=";")
    np.testing.assert_array_equal(x, [1, 3])


@pytest.mark.parametrize(
    "text,spec,match",
    [
        ("a,b\n1,x\n", ("a", "b"), "row 2, column 1"),
        ("a,b\n1,2\n3\n", ("a", "b"), "row 3"),
        ("1,2\n", ("a", "1"), "no header"),
        ("a,b\n1,2\n", ("z", "b"), "no column named"),
        ("1,2\n", ("0", "5"), "out of range"),
        ("a,b\n1,inf\n", ("a", "b"), "non-finite"),
        ("a,b\n", ("a", "b"), "no data rows"),
        ("", ("0", "1"), "no data"),
    ],
)
def test_read_errors(tmp_path, text, spec, match):
    p = tmp_path / "bad.csv"
    p.write_text(text)
    with pytest.raises(InputError, match=match):
        read_pair(p, ColumnSpec.parse(spec[0]), ColumnSpec.parse(spec[1]))


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        read_pair(tmp_path / "nope.csv")


def test_write_read_lossless(tmp_path):
    rng = np.random.default_rng(0)
    x = rng.normal(size=50)
    y = rng.integers(0, 5, 50)
    p = tmp_path / "o.csv"
    write_pair(p, x, y)
    x2, y2, _ = read_pair(p)
    np.testing.assert_array_equal(x, x2)
    np.testing.assert_array_equal(y, y2)


def test_column_spec_validation():
    with pytest.raises(ValueError):
        ColumnSpec(0, "ordinal")
    assert ColumnSpec.parse(3).key == 3
    assert ColumnSpec.parse(" 2 ").key == 2


def _report():
    x = np.arange(40) % 4
    result = infer(x, (x + (np.arange(40) % 3 == 0)) % 4)
    return Report.from_result(result, input_path="in.csv", grid=None, seed=7)


def test_report_round_trip():
    r = _report()
    text = r.to_json()
    back = Report.from_json(text)
    assert back == r
    assert back.to_json() == text
    data = json.loads(text)
    assert list(data)[:6] == ["data_kind", "n", "per_model", "selected", "delta", "warnings"]
    assert set(data["provenance"]) == {"input", "columns", "scaling", "grid", "version", "seed"}


def test_report_infinite_bits_as_null():
    r = _report()
    r.per_model[CausalModel.XTOY] = ModelScore(math.inf)
    data = json.loads(r.to_json())
    assert data["per_model"]["xy"]["bits"] is None
    assert Report.from_json(r.to_json()).per_model[CausalModel.XTOY].bits == math.inf


@given(st.floats(allow_nan=False, allow_infinity=False), st.floats(0, 10))
def test_report_float_exact(bits, delta):
    r = _report()
    r.per_model[CausalModel.INDEPENDENT] = ModelScore(bits)
    r.delta = delta
    back = Report.from_json(r.to_json())
    assert back.per_model[CausalModel.INDEPENDENT].bits == bits
    assert back.delta == delta
