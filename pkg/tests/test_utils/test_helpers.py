"""
Tests for helper functions
"""
import math

import pytest

from src.utils.helpers import format_float, format_value, get_path, set_path, split_path


@pytest.mark.parametrize(
    "value,expected",
    [(0.1, "0.10000000000000001"), (1.0, "1"), (math.inf, "inf"), (-math.inf, "-inf"), (math.nan, "nan")],
)
def test_format_float(value, expected) -> None:
    """
    Test format float
    """
    assert format_float(value) == expected


def test_format_value() -> None:
    """
    Test format value
    """
    assert format_value(None) == ""
    assert format_value(True) == "true"
    assert format_value(3) == "3"
    assert format_value("random[0]") == "random[0]"


def test_split_path() -> None:
    """
    Test split path
    """
    assert split_path("modes.0.g") == ["modes", 0, "g"]


def test_get_and_set_path() -> None:
    """
    Test get and set path
    """
    data = {"modes": [{"omega": 1.0}], "t": 0.5}
    set_path(data, split_path("modes.0.omega"), 2.0)
    assert get_path(data, ["modes", 0, "omega"]) == 2.0
    with pytest.raises(KeyError):
        get_path(data, ["t", "x"])
    with pytest.raises(IndexError):
        get_path(data, ["modes", 3])
