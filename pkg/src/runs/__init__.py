"""
Configuration-driven sweeps, result writers and verification suites
"""

from src.runs.checks import CHECKS, enforce_checks, evaluate_check
from src.runs.evaluate import RESULT_COLUMNS, evaluate_model
from src.runs.loader import load_config, parse_config
from src.runs.runner import evaluate_rows, run_config, sweep_points
from src.runs.schemas import RunConfig, SweepAxis
from src.runs.suites import SUITES, SuiteResult, format_table, run_suite
from src.runs.writers import render_csv, render_json, write_rows
