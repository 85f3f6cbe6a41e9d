import csv
import json
import math

import pytest

from contnorm.cli.emit import emit, format_float

COLUMNS = ("k", "parity", "value")
ROWS = [
    {"k": 0.1, "parity": "even", "value": 1.0 / 3.0},
    {"k": 0.2, "parity": "odd", "value": math.pi},
    {"k": 0.30000000000000004, "parity": "even", "value": -2.5e-300},
]


def test_csv_has_header_and_one_line_per_row(tmp_path):
    path = emit(ROWS, "csv", tmp_path / "rows.csv", COLUMNS)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 4
    assert lines[0] == "k,parity,value"


def test_csv_values_round_trip(tmp_path):
    """
    17 significant digits read back bit for bit.
    """
    path = emit(ROWS, "csv", tmp_path / "rows.csv", COLUMNS)
    with path.open(newline="", encoding="utf-8") as handle:
        records = list(csv.DictReader(handle))
    for written, read in zip(ROWS, records):
        assert float(read["k"]) == written["k"]
        assert float(read["value"]) == written["value"]
        assert read["parity"] == written["parity"]


def test_json_is_an_array_of_flat_records(tmp_path):
    path = emit(ROWS, "json", tmp_path / "rows.json", COLUMNS)
    records = json.loads(path.read_text(encoding="utf-8"))
    assert records == ROWS
    assert list(records[0]) == list(COLUMNS)


def test_empty_outputs(tmp_path):
    """
    No rows still gives a header-only CSV and an empty JSON array.
    """
    csv_path = emit([], "csv", tmp_path / "empty.csv", COLUMNS)
    json_path = emit([], "json", tmp_path / "empty.json", COLUMNS)
    assert csv_path.read_text(encoding="utf-8") == "k,parity,value\n"
    assert json.loads(json_path.read_text(encoding="utf-8")) == []


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_output_is_deterministic(tmp_path, fmt):
    first = emit(ROWS, fmt, tmp_path / f"a.{fmt}", COLUMNS).read_bytes()
    second = emit(ROWS, fmt, tmp_path / f"b.{fmt}", COLUMNS).read_bytes()
    assert first == second


def test_special_values(tmp_path):
    records = [{"name": "x", "error": math.inf, "passed": False, "y": None}]
    columns = ("name", "error", "passed", "y")
    csv_text = emit(records, "csv", tmp_path / "r.csv", columns).read_text(encoding="utf-8")
    assert csv_text.splitlines()[1] == "x,Infinity,false,"
    loaded = json.loads(emit(records, "json", tmp_path / "r.json", columns).read_text(encoding="utf-8"))
    assert loaded == [{"name": "x", "error": math.inf, "passed": False, "y": None}]


def test_format_float():
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(-math.inf) == "-Infinity"
    assert format_float(float("nan")) == "NaN"


def test_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        emit(ROWS, "xml", tmp_path / "rows.xml", COLUMNS)


def test_creates_parent_directories(tmp_path):
    path = emit(ROWS, "csv", tmp_path / "nested" / "dir" / "rows.csv", COLUMNS)
    assert path.exists()
