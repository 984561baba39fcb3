"""Limit-set sampling, arithmeticity tests and report formatting."""

from .arithtest import factor_reports, maclachlan_reid_report, takeuchi_report, trace_map_report
from .formatters import CSVFormatter, JSONFormatter, SVGFormatter, export, save_report
from .limitset import (
    cone_hull,
    convexity_probe,
    dalbo_deviation,
    furstenberg_samples,
    moebius_fit,
    one_point_test,
    sample_directions,
)

__all__ = [
    "factor_reports",
    "maclachlan_reid_report",
    "takeuchi_report",
    "trace_map_report",
    "CSVFormatter",
    "JSONFormatter",
    "SVGFormatter",
    "export",
    "save_report",
    "cone_hull",
    "convexity_probe",
    "dalbo_deviation",
    "furstenberg_samples",
    "moebius_fit",
    "one_point_test",
    "sample_directions",
]
