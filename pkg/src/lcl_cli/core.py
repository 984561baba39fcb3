"""Core wiring for the lcl CLI: logging and effective configuration."""

from __future__ import annotations

import logging
from pathlib import Path

from rich.logging import RichHandler

from .config import LclConfig, load_config
from .ui import console

LOGGER_NAME = "lcl_cli"


def setup_logging(verbose: bool = False, debug: bool = False) -> logging.Logger:
    """Attach a rich handler to the package logger (idempotent)."""
    logger = logging.getLogger(LOGGER_NAME)
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logger.setLevel(level)

    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=console,
            show_path=debug,
            rich_tracebacks=debug,
            markup=False,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    return logger


def effective_config(
    config_file: str | None = None,
    precision: int | None = None,
    max_len: int | None = None,
    cap: int | None = None,
    tol: float | None = None,
) -> LclConfig:
    """File < environment < flags."""
    config = load_config(Path(config_file) if config_file else None)
    if precision is not None:
        config.numerics.precision = precision
    if max_len is not None:
        config.sampling.max_len = max_len
    if cap is not None:
        config.sampling.cap = cap
    if tol is not None:
        config.numerics.one_point_tol = tol
    return config
