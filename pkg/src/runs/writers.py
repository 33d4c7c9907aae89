"""
CSV and JSON writers for result rows
"""
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.core.logging import get_logger
from src.utils.helpers import format_value, utc_timestamp


logger = get_logger(__name__)


def render_csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str], timestamp: bool = True) -> str:
    """
    Optional '# generated <time>' line, a header row, then one line per row;
    absent values are empty cells and floats keep 17 significant digits
    """
    buffer = io.StringIO()
    if timestamp:
        buffer.write(f"# generated {utc_timestamp()}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(column)) for column in columns])
    return buffer.getvalue()


def _json_value(value: Any) -> Any:
    # json floats use repr, which already round-trips; non-finite values become strings
    if isinstance(value, float) and not math.isfinite(value):
        return format_value(value)
    return value


def render_json(rows: Sequence[Dict[str, Any]], columns: Sequence[str], timestamp: bool = True) -> str:
    """
    Array of row objects mirroring the CSV columns. JSON has no comment
    syntax, so the timestamp flag is accepted and ignored.
    """
    records: List[Dict[str, Any]] = [
        {column: _json_value(row.get(column)) for column in columns} for row in rows
    ]
    return json.dumps(records, indent=2) + "\n"


def write_rows(
    rows: Sequence[Dict[str, Any]],
    columns: Sequence[str],
    output_format: str = "csv",
    path: Optional[str] = None,
    timestamp: bool = True,
) -> None:
    """
    Write to `path`, or to standard output when it is omitted or '-'
    """
    render = render_json if output_format == "json" else render_csv
    text = render(rows, columns, timestamp=timestamp)
    if path in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
    logger.info("results_written", rows=len(rows), format=output_format, path=path or "-")
