"""
Command-line entry point: configuration-driven runs and verification suites
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

# Add the project root directory to Python path
root_dir = Path(__file__).resolve().parent
sys.path.append(str(root_dir))

# load .env using dotenv
from dotenv import load_dotenv
load_dotenv()

from src.core.exceptions import EXIT_OK, EXIT_USAGE, CheckFailure, OtmError, exit_code_for  # noqa: E402
from src.core.logging import get_logger, setup_logging  # noqa: E402


logger = get_logger("cli")


def build_parser() -> argparse.ArgumentParser:
    """
    Parser with the `run` and `verify` subcommands
    """
    parser = argparse.ArgumentParser(
        prog="otm",
        description="Guessed quantum heat and work under one-time energy measurements",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    run_parser = subparsers.add_parser("run", help="Evaluate a TOML run configuration")
    run_parser.add_argument("config", type=str, help="Path to the configuration file")
    run_parser.add_argument("--out", type=str, default=None, help="Output file, '-' for stdout")
    run_parser.add_argument("--threads", type=int, default=None, help="Worker threads for sweep points")
    run_parser.add_argument("--no-timestamp", action="store_true", help="Omit the '# generated' CSV line")
    run_parser.add_argument("--format", choices=["csv", "json"], default=None, dest="output_format",
                            help="Override the configured output format")

    verify_parser = subparsers.add_parser("verify", help="Run a named verification suite")
    verify_parser.add_argument("suite", type=str, help="Suite name")
    verify_parser.add_argument("--threads", type=int, default=None, help="Worker threads")
    verify_parser.add_argument("--seeds", type=int, default=None, help="Override the suite's seed count")

    return parser


def run_run(args) -> int:
    from src.runs.loader import load_config
    from src.runs.runner import run_config

    config = load_config(args.config)
    run_config(
        config,
        out=args.out,
        threads=args.threads,
        timestamp=False if args.no_timestamp else None,
        output_format=args.output_format,
        source=args.config,
    )
    return EXIT_OK


def run_verify(args) -> int:
    from src.runs.suites import format_table, run_suite

    try:
        results = run_suite(args.suite, n_seeds=args.seeds, threads=args.threads)
    except CheckFailure as e:
        print(format_table(e.results))
        raise
    print(format_table(results))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point; returns the process exit code
    """
    setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    commands = {"run": run_run, "verify": run_verify}
    if args.command not in commands:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        return commands[args.command](args)
    except OtmError as e:
        print(f"error: {e.message}", file=sys.stderr)
        logger.error("command_failed", command=args.command, error=e.message)
        return exit_code_for(e)
    except Exception as e:
        logger.exception("unexpected_error", command=args.command)
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
