"""
Tests for the verification suite registry
"""
from unittest import mock

import pytest

from src.core.exceptions import CheckFailure, UnknownSuiteError
from src.runs.suites import SUITES, SuiteResult, format_table, run_suite, sweep_model, two_qubit_grid


def test_registered_suites() -> None:
    """
    Test registered suites
    """
    assert set(SUITES) == {
        "core-identities",
        "oracles",
        "inequalities",
        "closed-system",
        "spin-boson-convergence",
        "two-temperature",
    }


def test_unknown_suite() -> None:
    """
    Test unknown suite
    """
    with pytest.raises(UnknownSuiteError) as exc_info:
        run_suite("everything")
    assert "core-identities" in exc_info.value.message


def test_sweep_model_covers_grid() -> None:
    """
    Test sweep model covers grid
    """
    shapes = {(sweep_model(seed).d_system, sweep_model(seed).d_bath) for seed in range(6)}
    assert shapes == {(2, 2), (3, 2), (2, 3), (3, 3), (2, 4), (3, 4)}
    assert {len(sweep_model(seed).protocol.segments) for seed in range(18)} == {1, 2, 3}


def test_two_qubit_grid_size() -> None:
    """
    Test two qubit grid size
    """
    assert len(two_qubit_grid()) == 3 * 3 * 3 * 8


@pytest.mark.parametrize("suite,seeds", [("core-identities", 6), ("closed-system", 3), ("two-temperature", 1)])
def test_small_suites_pass(suite, seeds) -> None:
    """
    Test small suites pass
    """
    results = run_suite(suite, n_seeds=seeds, threads=2)
    assert results
    assert all(r.passed for r in results), format_table(results)


def test_inequalities_suite_passes() -> None:
    """
    Test inequalities suite passes
    """
    results = run_suite("inequalities", n_seeds=4, threads=1)
    assert all(r.passed for r in results), format_table(results)
    assert {r.check for r in results if r.samples == 0} == set()


@pytest.mark.slow
def test_oracles_suite_passes() -> None:
    """
    Test oracles suite passes
    """
    results = run_suite("oracles", threads=4)
    assert all(r.passed for r in results), format_table(results)


@pytest.mark.slow
def test_spin_boson_suite_passes() -> None:
    """
    Test spin boson suite passes
    """
    results = run_suite("spin-boson-convergence")
    assert all(r.passed for r in results), format_table(results)


def test_failing_suite_raises_with_results() -> None:
    """
    Test failing suite raises with results
    """
    def failing(n_seeds, threads):
        return [
            SuiteResult(check="fine", observed=0.0, tolerance=1e-9, samples=1),
            SuiteResult(check="broken", observed=1.0, tolerance=1e-9, samples=1),
        ]

    with mock.patch.dict(SUITES, {"fake": failing}):
        with pytest.raises(CheckFailure) as exc_info:
            run_suite("fake")
    assert exc_info.value.check_name == "broken"
    assert len(exc_info.value.results) == 2


def test_table_marks_status() -> None:
    """
    Test table marks status
    """
    table = format_table([
        SuiteResult(check="a", observed=1e-12, tolerance=1e-9, samples=3),
        SuiteResult(check="b", observed=1.0, tolerance=1e-9, samples=3),
    ])
    lines = table.splitlines()
    assert lines[0].startswith("check")
    assert lines[1].endswith("PASS")
    assert lines[2].endswith("FAIL")
