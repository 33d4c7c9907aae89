"""
Tests for structured logging setup
"""
import io
import json

import numpy as np

from src.core.config import settings
from src.core.logging import _plain, get_logger, setup_logging


def test_plain_converts_numpy_values() -> None:
    """
    Test plain converts numpy values
    """
    assert _plain(np.float64(0.25)) == 0.25
    assert type(_plain(np.int64(3))) is int
    assert _plain(np.zeros((2, 3))) == "ndarray(2, 3)"
    assert _plain([np.bool_(True), 1.0]) == [True, 1.0]


def test_production_logs_are_json_lines(monkeypatch) -> None:
    """
    Test production logs are json lines
    """
    monkeypatch.setattr(settings, "ENV", "production")
    stream = io.StringIO()
    try:
        setup_logging(level="INFO", stream=stream)
        get_logger("otm.test").info("check_failed", residual=np.float64(1e-3), rho=np.eye(2))
        record = json.loads(stream.getvalue().strip().splitlines()[-1])
    finally:
        monkeypatch.undo()
        setup_logging()
    assert record["event"] == "check_failed"
    assert record["residual"] == 1e-3
    assert record["rho"] == "ndarray(2, 2)"
    assert record["level"] == "info"


def test_level_override_filters_debug() -> None:
    """
    Test level override filters debug
    """
    stream = io.StringIO()
    try:
        setup_logging(level="WARNING", stream=stream)
        get_logger("otm.test").debug("degenerate_spectrum")
        assert stream.getvalue() == ""
    finally:
        setup_logging()
