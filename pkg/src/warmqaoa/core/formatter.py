"""
Result-row formatting for warmqaoa.

Rows are written as CSV with a fixed header; floats use 17 significant
digits so that repeated runs produce byte-identical files.
"""

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

CSV_HEADER = (
    "instance",
    "variant",
    "rank",
    "rotation",
    "depth",
    "fp",
    "ar",
    "log_error",
    "wall_ms",
)
ERROR_COLUMN = "error"


def format_number(value: Optional[float]) -> str:
    """
    Render a float for CSV output; ``None`` becomes an empty cell.

    Examples:
        >>> format_number(0.1)
        '0.10000000000000001'
        >>> format_number(None)
        ''
    """
    if value is None:
        return ""
    return format(value, ".17g")


def _optional_float(cell: str) -> Optional[float]:
    return float(cell) if cell != "" else None


def _optional_int(cell: str) -> Optional[int]:
    return int(cell) if cell != "" else None


@dataclass(frozen=True)
class ResultRow:
    """One (instance, variant, rank, rotation, depth) measurement."""

    instance: str
    variant: str
    rank: Optional[int]
    rotation: Optional[str]
    depth: int
    fp: Optional[float]
    ar: Optional[float]
    wall_ms: Optional[float] = None
    seed: int = 0
    error: Optional[str] = None

    @property
    def log_error(self) -> Optional[float]:
        """log10(1 − AR), defined only when AR < 1."""
        if self.ar is None or self.ar >= 1.0:
            return None
        return math.log10(1.0 - self.ar)

    def sort_key(self) -> tuple:
        return (
            self.instance,
            self.variant,
            self.rank or 0,
            self.rotation or "",
            self.depth,
            self.seed,
        )

    def to_record(self, with_error: bool = False) -> List[str]:
        record = [
            self.instance,
            self.variant,
            "" if self.rank is None else str(self.rank),
            self.rotation or "",
            str(self.depth),
            format_number(self.fp),
            format_number(self.ar),
            format_number(self.log_error),
            format_number(self.wall_ms),
        ]
        if with_error:
            record.append(self.error or "")
        return record


def sort_rows(rows: Iterable[ResultRow]) -> List[ResultRow]:
    """Canonical output order, independent of completion order."""
    return sorted(rows, key=ResultRow.sort_key)


def rows_to_csv(rows: Sequence[ResultRow]) -> str:
    """
    Serialize rows with the fixed header.

    An ``error`` column is appended only when some row failed.
    """
    with_error = any(row.error for row in rows)
    header = list(CSV_HEADER) + ([ERROR_COLUMN] if with_error else [])
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row.to_record(with_error))
    return buffer.getvalue()


def rows_from_csv(text: str) -> List[ResultRow]:
    """
    Parse a results CSV written by ``rows_to_csv``.

    Raises:
        ValueError: If the header is not the result header.
    """
    reader = csv.DictReader(io.StringIO(text))
    fieldnames = tuple(reader.fieldnames or ())
    if fieldnames[: len(CSV_HEADER)] != CSV_HEADER:
        raise ValueError(f"unexpected results header: {','.join(fieldnames)}")
    rows = []
    for record in reader:
        rows.append(
            ResultRow(
                instance=record["instance"],
                variant=record["variant"],
                rank=_optional_int(record["rank"]),
                rotation=record["rotation"] or None,
                depth=int(record["depth"]),
                fp=_optional_float(record["fp"]),
                ar=_optional_float(record["ar"]),
                wall_ms=_optional_float(record["wall_ms"]),
                error=record.get(ERROR_COLUMN) or None,
            )
        )
    return rows
