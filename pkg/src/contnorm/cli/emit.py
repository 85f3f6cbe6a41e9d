# contnorm/cli/emit.py
"""
Deterministic writers for sweep rows and verification reports.

Floats are written with 17 significant digits so every value reads back
bit-for-bit; column order is fixed by the caller; nothing time-dependent
is ever written.
"""
import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Union

FORMATS = ("csv", "json")


def format_float(value: float) -> str:
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return f"{value:.17g}"


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _json_value(value: Any) -> str:
    if isinstance(value, float):
        return format_float(value)
    return json.dumps(value)


def render_csv(records: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for record in records:
        writer.writerow([_csv_cell(record.get(name)) for name in columns])
    return buffer.getvalue()


def render_json(records: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    if not records:
        return "[]\n"
    lines = []
    for record in records:
        fields = ", ".join(f"{json.dumps(name)}: {_json_value(record.get(name))}" for name in columns)
        lines.append("  {" + fields + "}")
    return "[\n" + ",\n".join(lines) + "\n]\n"


def emit(records: Iterable[Dict[str, Any]], fmt: str, path: Union[str, Path],
         columns: Sequence[str]) -> Path:
    """
    Write flat records as CSV (header row first) or as a JSON array.

    Args:
        records: Flat records, usually ``row.as_record()`` values
        fmt: "csv" or "json"
        path: Destination file; parent directories are created
        columns: Column order (also the header of an empty CSV)

    Returns:
        The path written

    Raises:
        ValueError: If the format is unknown
        OSError: If the file cannot be written
    """
    records: List[Dict[str, Any]] = list(records)
    if fmt == "csv":
        text = render_csv(records, columns)
    elif fmt == "json":
        text = render_json(records, columns)
    else:
        raise ValueError(f"Unsupported format: {fmt}. Available formats: {', '.join(FORMATS)}")
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8", newline="")
    return target
