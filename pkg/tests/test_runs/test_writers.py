"""
Tests for CSV and JSON result rendering
"""
import json
import math

from src.runs.writers import render_csv, render_json, write_rows

ROWS = [
    {"label": "a", "value": 0.1, "flag": True, "missing": None},
    {"label": "b", "value": math.inf, "flag": False},
]
COLUMNS = ["label", "value", "flag", "missing"]


def test_csv_layout() -> None:
    """
    Test csv layout
    """
    text = render_csv(ROWS, COLUMNS, timestamp=False)
    assert text.splitlines() == [
        "label,value,flag,missing",
        "a,0.10000000000000001,true,",
        "b,inf,false,",
    ]


def test_csv_timestamp_line() -> None:
    """
    Test csv timestamp line
    """
    first = render_csv(ROWS, COLUMNS, timestamp=True).splitlines()[0]
    assert first.startswith("# generated ")
    assert "T" in first


def test_json_is_array_and_ignores_timestamp() -> None:
    """
    Test json is array and ignores timestamp
    """
    text = render_json(ROWS, COLUMNS, timestamp=True)
    records = json.loads(text)
    assert isinstance(records, list)
    assert records[0] == {"label": "a", "value": 0.1, "flag": True, "missing": None}
    assert records[1]["value"] == "inf"
    assert render_json(ROWS[:1], COLUMNS, timestamp=False) == render_json(ROWS[:1], COLUMNS, timestamp=True)


def test_json_empty_rows() -> None:
    """
    Test json empty rows
    """
    assert json.loads(render_json([], COLUMNS)) == []


def test_write_to_stdout(capsys) -> None:
    """
    Test write to stdout
    """
    write_rows(ROWS[:1], ["label"], output_format="csv", path="-", timestamp=False)
    assert capsys.readouterr().out == "label\na\n"


def test_write_creates_parent_directories(tmp_path) -> None:
    """
    Test write creates parent directories
    """
    target = tmp_path / "nested" / "dir" / "rows.json"
    write_rows(ROWS, COLUMNS, output_format="json", path=str(target))
    assert len(json.loads(target.read_text())) == 2
