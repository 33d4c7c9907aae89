"""
Tests for the named check registry
"""
import math
from unittest import mock

import pytest

from src.core.exceptions import CheckFailure
from src.runs.checks import CHECKS, enforce_checks, evaluate_check


def test_registry_names() -> None:
    """
    Test registry names
    """
    assert {"theorem1", "theorem2", "tpm_jarzynski", "two_qubit_oracle", "closed_system"} <= set(CHECKS)


def test_worst_value_over_rows() -> None:
    """
    Test worst value over rows
    """
    rows = [{"theorem1_residual": 1e-12}, {"theorem1_residual": 3e-9}, {"label": "x"}]
    outcome = evaluate_check("theorem1", rows)
    assert outcome.passed
    assert outcome.worst == 3e-9
    assert outcome.rows_checked == 2


def test_nan_counts_as_failure() -> None:
    """
    Test nan counts as failure
    """
    outcome = evaluate_check("jarzynski1", [{"jarzynski1_residual": math.nan}])
    assert not outcome.passed


def test_uncovered_check_fails() -> None:
    """
    Test uncovered check fails
    """
    outcome = evaluate_check("theorem2", [{"label": "x"}])
    assert not outcome.passed
    assert outcome.rows_checked == 0


def test_two_column_check_reports_failing_column() -> None:
    """
    Test two column check reports failing column
    """
    rows = [{"oracle_heat_error": 1e-12, "oracle_entropy_error": 1e-3}]
    outcome = evaluate_check("two_qubit_oracle", rows)
    assert not outcome.passed
    assert outcome.column == "oracle_entropy_error"


def test_enforce_raises_worst_failure() -> None:
    """
    Test enforce raises worst failure
    """
    rows = [{"theorem1_residual": 1e-6, "jarzynski1_residual": 1e-3}]
    with mock.patch("src.runs.checks.logger") as logger:
        with pytest.raises(CheckFailure) as exc_info:
            enforce_checks(["theorem1", "jarzynski1"], rows)
    assert exc_info.value.check_name == "jarzynski1:jarzynski1_residual"
    assert exc_info.value.worst_residual == 1e-3
    logger.error.assert_called_once()


def test_enforce_passes() -> None:
    """
    Test enforce passes
    """
    outcomes = enforce_checks(["monotonicity"], [{"monotonicity_violation": 0.0}])
    assert outcomes[0].passed
