"""
Utility helper functions
"""
import math
from datetime import datetime, timezone
from typing import Any, Dict, List, Sequence, Union

PathKey = Union[str, int]


def utc_timestamp() -> str:
    """
    Current UTC time in ISO format
    """
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def format_float(value: float) -> str:
    """
    17 significant digits, enough to round-trip any double
    """
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, ".17g")


def format_value(value: Any) -> str:
    """
    Render a table cell; None becomes an empty cell
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def split_path(path: str) -> List[PathKey]:
    """'modes.0.omega' -> ['modes', 0, 'omega']"""
    return [int(part) if part.isdigit() else part for part in path.split(".")]


def get_path(data: Any, path: Sequence[PathKey]) -> Any:
    """
    Follow dict keys and list indices; raises KeyError/IndexError when absent
    """
    for key in path:
        if isinstance(data, dict):
            data = data[key]
        elif isinstance(data, list) and isinstance(key, int):
            data = data[key]
        else:
            raise KeyError(key)
    return data


def set_path(data: Dict[str, Any], path: Sequence[PathKey], value: Any) -> None:
    """
    Assign in place at a dotted path that already resolves
    """
    parent = get_path(data, path[:-1])
    parent[path[-1]] = value
