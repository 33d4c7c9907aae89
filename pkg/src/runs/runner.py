"""
Sweep expansion and threaded evaluation of run configurations
"""
import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

from pydantic import ValidationError

from src.core.config import settings
from src.core.exceptions import ConfigError, ParameterError
from src.core.logging import get_logger
from src.runs.checks import CheckOutcome, enforce_checks
from src.runs.evaluate import RESULT_COLUMNS, evaluate_model
from src.runs.schemas import RunConfig
from src.runs.writers import write_rows
from src.utils.helpers import set_path, split_path


logger = get_logger(__name__)

SweepPoint = Tuple[Tuple[str, Any], ...]


def sweep_points(config: RunConfig) -> List[SweepPoint]:
    """
    Cross product of all sweep axes, first axis slowest; one empty point without a sweep
    """
    axes = [[(axis.path, value) for value in axis.points()] for axis in config.sweep]
    return [tuple(point) for point in itertools.product(*axes)]


def model_block_at(config: RunConfig, point: SweepPoint):
    """Model block with the swept values substituted and re-validated"""
    if not point:
        return config.model
    data = config.model.model_dump()
    for path, value in point:
        set_path(data, split_path(path), value)
    return type(config.model).model_validate(data)


def parameter_columns(config: RunConfig) -> List[str]:
    """Scalar fields of the model block followed by any swept paths not already listed"""
    block = config.model.model_dump()
    columns = [key for key, value in block.items() if not isinstance(value, (list, dict))]
    for axis in config.sweep:
        if axis.path not in columns:
            columns.append(axis.path)
    return columns


def evaluate_point(config: RunConfig, point: SweepPoint, source: Optional[str] = None) -> Dict[str, Any]:
    """
    One result row; parameter failures become ConfigErrors naming `source`
    """
    where = ", ".join(f"{path}={value}" for path, value in point) or "model"
    try:
        block = model_block_at(config, point)
        model = block.build(config.seed)
        oracle = block.oracle()
    except ParameterError as e:
        raise ConfigError(f"{where}: {e.message}", path=source)
    except ValidationError as e:
        raise ConfigError(f"{where}: {e.errors()[0]['msg']}", path=source)

    row: Dict[str, Any] = {}
    dumped = block.model_dump()
    for column in parameter_columns(config):
        value = dumped.get(column)
        for path, swept in point:
            if path == column:
                value = swept
        row[column] = value
    row.update(evaluate_model(model, oracle))
    logger.debug("sweep_point_done", point=dict(point), label=model.label)
    return row


def evaluate_rows(
    config: RunConfig, threads: Optional[int] = None, source: Optional[str] = None
) -> List[Dict[str, Any]]:
    """
    Rows in deterministic sweep order whatever the completion order
    """
    threads = threads or settings.runtime.threads
    points = sweep_points(config)
    logger.info("run_started", kind=config.model.kind, points=len(points), threads=threads)
    if threads <= 1:
        return [evaluate_point(config, point, source) for point in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda point: evaluate_point(config, point, source), points))


def run_config(
    config: RunConfig,
    out: Optional[str] = None,
    threads: Optional[int] = None,
    timestamp: Optional[bool] = None,
    output_format: Optional[str] = None,
    source: Optional[str] = None,
) -> List[CheckOutcome]:
    """
    Evaluate, write the table, then enforce the requested checks
    """
    rows = evaluate_rows(config, threads, source)
    columns = parameter_columns(config) + RESULT_COLUMNS
    write_rows(
        rows,
        columns,
        output_format=output_format or config.outputs.format,
        path=out if out is not None else config.outputs.path,
        timestamp=settings.runtime.timestamp if timestamp is None else timestamp,
    )
    return enforce_checks(config.checks, rows)
