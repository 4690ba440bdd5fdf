"""Tests for the result-row formatter module."""

from dataclasses import replace

import pytest

from warmqaoa.core.formatter import (
    CSV_HEADER,
    ResultRow,
    format_number,
    rows_from_csv,
    rows_to_csv,
    sort_rows,
)


def _row(**overrides):
    values = dict(
        instance="square",
        variant="standard",
        rank=None,
        rotation=None,
        depth=1,
        fp=3.0,
        ar=0.75,
    )
    values.update(overrides)
    return ResultRow(**values)


def test_format_number():
    """Test float rendering with 17 significant digits."""
    assert format_number(0.5) == "0.5"
    assert format_number(1 / 3) == "0.33333333333333331"
    assert format_number(None) == ""


def test_log_error():
    """Test log10(1 - AR) and its undefined cases."""
    assert _row(ar=0.9).log_error == pytest.approx(-1.0)
    assert _row(ar=1.0).log_error is None
    assert _row(ar=None, fp=None).log_error is None


def test_header_without_failures():
    """Test that the error column is omitted when every row succeeded."""
    text = rows_to_csv([_row()])
    header, record = text.splitlines()
    assert header == ",".join(CSV_HEADER)
    assert record.startswith("square,standard,,,1,3,0.75,-0.60205999")
    assert record.endswith(",")


def test_error_column_on_failure():
    """Test that a failed row adds the error column to every record."""
    failed = _row(variant="warm", rank=2, rotation="vertex", fp=None, ar=None)
    failed = replace(failed, error="sdp failed")
    lines = rows_to_csv([_row(), failed]).splitlines()
    assert lines[0].endswith(",error")
    assert lines[1].endswith(",")
    assert lines[2] == "square,warm,2,vertex,1,,,,,sdp failed"


def test_rows_round_trip_through_csv():
    """Test parsing the rows back from written CSV."""
    rows = [_row(wall_ms=12.5), _row(variant="warmest", rank=3, rotation="uniform")]
    parsed = rows_from_csv(rows_to_csv(rows))
    assert parsed[0].wall_ms == 12.5
    assert parsed[1].rank == 3
    assert parsed[1].rotation == "uniform"
    assert parsed[0].rank is None
    assert parsed[1].error is None


def test_rows_from_csv_rejects_header():
    """Test that a foreign CSV is rejected."""
    with pytest.raises(ValueError):
        rows_from_csv("a,b,c\n1,2,3\n")


def test_sort_rows_is_canonical():
    """Test ordering by instance, variant, rank, rotation, depth and seed."""
    rows = [
        _row(variant="warmest", rank=2, rotation="vertex", depth=0),
        _row(depth=2),
        _row(depth=0),
        _row(variant="warmest", rank=2, rotation="uniform", depth=1),
        _row(instance="a-first"),
    ]
    ordered = [(r.instance, r.variant, r.rotation, r.depth) for r in sort_rows(rows)]
    assert ordered == [
        ("a-first", "standard", None, 1),
        ("square", "standard", None, 0),
        ("square", "standard", None, 2),
        ("square", "warmest", "uniform", 1),
        ("square", "warmest", "vertex", 0),
    ]
