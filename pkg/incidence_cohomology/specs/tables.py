"""Row streams behind the ``table`` command: one row per line bundle and degree."""

from __future__ import annotations

import csv
import json
from typing import IO, Iterable, Iterator, Tuple

from ..vanishing import full_profile

__all__ = ["CSV_COLUMNS", "iter_profile_rows", "write_rows"]

CSV_COLUMNS = ("a", "b", "i", "flag", "rule")

Row = Tuple[int, int, int, str, str]


def iter_profile_rows(
    n: int, p: int, a_range: Tuple[int, int], b_range: Tuple[int, int]
) -> Iterator[Row]:
    """
    Yield ``(a, b, i, flag, rule)`` for every line bundle in the closed box.

    Rows are produced lazily, a ascending, then b ascending, then degree.
    """
    a_min, a_max = a_range
    b_min, b_max = b_range
    for a in range(a_min, a_max + 1):
        for b in range(b_min, b_max + 1):
            yield from full_profile(n, p, a, b).rows()


def write_rows(rows: Iterable[Row], stream: IO[str], fmt: str = "csv") -> int:
    """
    Stream rows to ``stream`` as CSV (with header), JSON lines or plain text.

    Returns the number of rows written.
    """
    count = 0
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(row)
            count += 1
    elif fmt == "json":
        for row in rows:
            stream.write(json.dumps(dict(zip(CSV_COLUMNS, row)), separators=(",", ":")) + "\n")
            count += 1
    elif fmt == "text":
        for a, b, i, flag, rule in rows:
            stream.write(f"O({a},{b})  H^{i}  {flag:<7}  {rule}\n")
            count += 1
    else:
        raise ValueError(f"Unknown table format '{fmt}'. Valid formats are: csv, json, text.")
    return count
