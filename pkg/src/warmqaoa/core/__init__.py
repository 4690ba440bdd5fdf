"""Experiment harness: runner, result rows and summaries."""

from .formatter import (
    CSV_HEADER,
    ResultRow,
    rows_from_csv,
    rows_to_csv,
    sort_rows,
)
from .report import karloff_table, summarize, summary_to_yaml
from .runner import ExperimentRunner, build_instance

__all__ = [
    "CSV_HEADER",
    "ResultRow",
    "rows_to_csv",
    "rows_from_csv",
    "sort_rows",
    "summarize",
    "summary_to_yaml",
    "karloff_table",
    "ExperimentRunner",
    "build_instance",
]
