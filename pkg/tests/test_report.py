import csv
import io
import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclolog import report


@given(st.floats(allow_nan=False, allow_infinity=False, width=64))
def test_full_precision_round_trip(x):
    assert float(report.format_value(x, 17)) == x
    assert json.loads(report.to_json({"x": x}, 17))["x"] == x


def test_default_precision_is_six_digits():
    assert report.format_value(6.572044556630789) == "6.57204"
    assert report.format_value(np.float64(1 / 3), 3) == "0.333"


@pytest.mark.parametrize("value, text", [(True, "true"), (np.bool_(False), "false"), (np.int64(7), "7"),
                                         (None, ""), ("x", "x")])
def test_format_non_floats(value, text):
    assert report.format_value(value) == text


@pytest.mark.parametrize("bad", [float("nan"), float("inf")])
def test_non_finite_refused(bad):
    with pytest.raises(ValueError):
        report.to_json({"x": bad})
    with pytest.raises(ValueError):
        report.to_csv(["x"], [[bad]])


def test_csv_shape():
    text = report.to_csv(["a", "b"], [[1, 2.5], ["x,y", None]])
    assert text == 'a,b\n1,2.5\n"x,y",\n'
    assert list(csv.reader(io.StringIO(text))) == [["a", "b"], ["1", "2.5"], ["x,y", ""]]


def test_header_emitted_for_empty_table():
    assert report.to_csv(["a"], []) == "a\n"


def test_mapping_cells():
    cell = report.pack_mapping({"n": 185, "n_I": 5, "norm": 11.5784229})
    assert cell == "n=185;n_I=5;norm=11.5784"
    assert report.unpack_mapping(cell) == {"n": "185", "n_I": "5", "norm": "11.5784"}
    assert report.unpack_mapping("") == {}
