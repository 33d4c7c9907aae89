"""
Load TOML run configurations into validated RunConfig objects
"""
import re
from pathlib import Path
from typing import Optional, Sequence, Union

import toml
from pydantic import ValidationError

from src.core.exceptions import ConfigError, ParameterError
from src.core.logging import get_logger
from src.runs.runner import SweepPoint, model_block_at, sweep_points
from src.runs.schemas import RunConfig


logger = get_logger(__name__)

_TABLE = re.compile(r"^\s*\[\[?\s*([A-Za-z0-9_.\-]+)\s*\]\]?")


def _key_pattern(key: str) -> re.Pattern:
    return re.compile(rf"^\s*{re.escape(key)}\s*=")


def locate(text: str, loc: Sequence[Union[str, int]]) -> Optional[int]:
    """
    1-based line of the deepest named key in `loc`, searched inside the
    table that holds it when that table appears in the file
    """
    names = [part for part in loc if isinstance(part, str)]
    if not names:
        return None
    lines = text.splitlines()
    key = names[-1]
    parents = names[:-1]

    # longest parent prefix that is a table header; tags such as the model
    # kind appear in validation locations but not in the file
    table_line: Optional[int] = None
    for depth in range(len(parents), 0, -1):
        wanted = ".".join(parents[:depth])
        for number, line in enumerate(lines):
            match = _TABLE.match(line)
            if match and match.group(1) == wanted:
                table_line = number
                break
        if table_line is not None:
            break

    for number in range(table_line or 0, len(lines)):
        line = lines[number]
        if _key_pattern(key).match(line):
            return number + 1
        match = _TABLE.match(line)
        if match and (match.group(1) == key or match.group(1).endswith(f".{key}")):
            return number + 1
    return None if table_line is None else table_line + 1


def _sweep_path_line(text: str, sweep_path: str) -> Optional[int]:
    pattern = re.compile(rf"""^\s*path\s*=\s*["']{re.escape(sweep_path)}["']""")
    for number, line in enumerate(text.splitlines()):
        if pattern.match(line):
            return number + 1
    return None


def _point_error(config: RunConfig, point: SweepPoint) -> Optional[str]:
    """Message of the first failure validating the block at `point`, None if it passes"""
    try:
        model_block_at(config, point).validate_params(config.seed)
    except ParameterError as e:
        return e.message
    except ValidationError as e:
        error = e.errors()[0]
        return f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
    return None


def validate_sweep(config: RunConfig, text: str, path: Optional[str] = None) -> None:
    """
    Validate the model block at every sweep point before anything is built.
    The error is anchored to the first axis that fails on its own.
    """
    for point in sweep_points(config):
        if not point:
            continue
        message = _point_error(config, point)
        if message is None:
            continue
        line = None
        for axis_path, value in point:
            if _point_error(config, ((axis_path, value),)) is not None:
                line = _sweep_path_line(text, axis_path)
                break
        where = ", ".join(f"{axis_path}={value}" for axis_path, value in point)
        raise ConfigError(f"{where}: {message}", line=line or locate(text, ["sweep"]), path=path)


def parse_config(text: str, path: Optional[str] = None) -> RunConfig:
    """
    Parse and validate configuration text; every failure becomes a ConfigError
    """
    try:
        raw = toml.loads(text)
    except toml.TomlDecodeError as e:
        raise ConfigError(f"invalid TOML: {e.msg}", line=e.lineno, path=path)

    try:
        config = RunConfig.model_validate(raw)
    except ValidationError as e:
        error = e.errors()[0]
        where = ".".join(str(part) for part in error["loc"])
        raise ConfigError(f"{where}: {error['msg']}", line=locate(text, error["loc"]), path=path)
    except ParameterError as e:
        anchor = ["model", e.field] if e.field else ["model"]
        raise ConfigError(e.message, line=locate(text, anchor) or locate(text, ["model"]), path=path)

    try:
        config.model.validate_params(config.seed)
    except ParameterError as e:
        anchor = ["model", e.field] if e.field else ["model"]
        raise ConfigError(e.message, line=locate(text, anchor) or locate(text, ["model"]), path=path)
    except ValidationError as e:
        error = e.errors()[0]
        raise ConfigError(error["msg"], line=locate(text, ["model", *error["loc"]]), path=path)

    validate_sweep(config, text, path)
    return config


def load_config(config_path: Union[str, Path]) -> RunConfig:
    path = Path(config_path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read configuration: {e.strerror}", path=str(path))
    config = parse_config(text, path=str(path))
    logger.info("config_loaded", path=str(path), kind=config.model.kind, sweep_axes=len(config.sweep))
    return config
