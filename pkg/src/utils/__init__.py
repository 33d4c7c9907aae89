"""
Utility modules initialization
"""

from src.utils.helpers import (
    format_float,
    format_value,
    get_path,
    set_path,
    split_path,
    utc_timestamp,
)
