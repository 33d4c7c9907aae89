"""
Tests for the command-line entry point
"""
from unittest import mock

import cli
from src.core.exceptions import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE
from src.runs.suites import SUITES, SuiteResult

CONFIG = """\
checks = ["theorem1", "two_qubit_oracle"]

[model]
kind = "two_qubit_dephasing"
omega_b = 1.0
j = 1.0
beta = 1.0
t = 0.5
"""


def test_run_writes_output(write_config, tmp_path) -> None:
    """
    Test run writes output
    """
    out = tmp_path / "rows.csv"
    code = cli.main(["run", str(write_config(CONFIG)), "--out", str(out), "--no-timestamp"])
    assert code == EXIT_OK
    assert out.read_text().splitlines()[0].startswith("kind,")


def test_run_to_stdout_as_json(write_config, capsys) -> None:
    """
    Test run to stdout as json
    """
    code = cli.main(["run", str(write_config(CONFIG)), "--format", "json"])
    assert code == EXIT_OK
    assert capsys.readouterr().out.lstrip().startswith("[")


def test_missing_config_is_usage_error(tmp_path, capsys) -> None:
    """
    Test missing config is usage error
    """
    code = cli.main(["run", str(tmp_path / "absent.toml")])
    assert code == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_bad_config_reports_line(write_config, capsys) -> None:
    """
    Test bad config reports line
    """
    code = cli.main(["run", str(write_config(CONFIG.replace("t = 0.5", "t = -1.0")))])
    assert code == EXIT_USAGE
    assert "run.toml:8:" in capsys.readouterr().err


def test_failed_check_exit_code(write_config, tmp_path) -> None:
    """
    Test failed check exit code
    """
    config = write_config(CONFIG.replace('"two_qubit_oracle"]', '"closed_system"]'))
    assert cli.main(["run", str(config), "--out", str(tmp_path / "rows.csv")]) == EXIT_CHECK_FAILED


def test_unknown_suite_is_usage_error() -> None:
    """
    Test unknown suite is usage error
    """
    assert cli.main(["verify", "nope"]) == EXIT_USAGE


def test_verify_prints_table(capsys) -> None:
    """
    Test verify prints table
    """
    def passing(n_seeds, threads):
        return [SuiteResult(check="ok", observed=0.0, tolerance=1e-9, samples=n_seeds or 1)]

    with mock.patch.dict(SUITES, {"fake": passing}):
        code = cli.main(["verify", "fake", "--seeds", "3"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "ok" in out
    assert "PASS" in out


def test_verify_failure_still_prints_table(capsys) -> None:
    """
    Test verify failure still prints table
    """
    def failing(n_seeds, threads):
        return [SuiteResult(check="bad", observed=1.0, tolerance=1e-9, samples=1)]

    with mock.patch.dict(SUITES, {"fake": failing}):
        code = cli.main(["verify", "fake"])
    assert code == EXIT_CHECK_FAILED
    assert "FAIL" in capsys.readouterr().out


def test_no_command_is_usage_error() -> None:
    """
    Test no command is usage error
    """
    assert cli.main([]) == EXIT_USAGE


def test_bad_flag_is_usage_error() -> None:
    """
    Test bad flag is usage error
    """
    assert cli.main(["run"]) == EXIT_USAGE


def test_oversized_random_model_reports_line(write_config, capsys) -> None:
    """
    An out-of-range random block exits 2 with file and line
    """
    config = write_config('[model]\nkind = "random"\nd_system = 20\nd_bath = 20\n')
    assert cli.main(["run", str(config)]) == EXIT_USAGE
    assert "run.toml:3:" in capsys.readouterr().err
