"""Configuration management for lcl-cli."""

import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

PRECISION_ENV = "LCL_PRECISION"


def default_config_path() -> Path:
    return Path.cwd() / ".lcl" / "config.json"


@dataclass
class NumericsConfig:
    """Working precision and numeric thresholds."""

    precision: int = 60
    max_precision_factor: int = 4
    interior_threshold: float = 1e-15
    one_point_tol: float = 1e-9
    order_bound: int = 120


@dataclass
class SamplingConfig:
    """Enumeration and search budgets."""

    max_len: int = 8
    cap: int = 20000
    gamma2_product_len: int = 3
    power_budget: int = 8
    dalbo_grid: int = 10
    k_max: int = 8


@dataclass
class OutputConfig:
    """Report emission settings."""

    format: str = "csv"
    timestamp: bool = True


@dataclass
class LclConfig:
    """Complete lcl configuration."""

    numerics: NumericsConfig = field(default_factory=NumericsConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def to_dict(self) -> dict:
        return asdict(self)


def _apply_env(config: LclConfig) -> LclConfig:
    raw = os.getenv(PRECISION_ENV, "").strip()
    if raw:
        try:
            config.numerics.precision = max(15, int(raw))
        except ValueError:
            pass
    return config


def load_config(config_path: Optional[Path] = None) -> LclConfig:
    """Load configuration from file or use defaults, then apply the environment."""
    if config_path is None:
        config_path = default_config_path()

    if not config_path.exists():
        return _apply_env(LclConfig())

    try:
        data = json.loads(config_path.read_text(encoding="utf-8"))
        config = LclConfig()
        if "numerics" in data:
            config.numerics = NumericsConfig(**data["numerics"])
        if "sampling" in data:
            config.sampling = SamplingConfig(**data["sampling"])
        if "output" in data:
            config.output = OutputConfig(**data["output"])
    except Exception:
        # If config is invalid, return defaults
        config = LclConfig()
    return _apply_env(config)


def save_config(config: LclConfig, config_path: Optional[Path] = None) -> Path:
    """Save configuration to file."""
    if config_path is None:
        config_path = default_config_path()

    config_path.parent.mkdir(parents=True, exist_ok=True)
    config_path.write_text(
        json.dumps(config.to_dict(), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    return config_path
